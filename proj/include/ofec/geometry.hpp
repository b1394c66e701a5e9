#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ofec {

// Spatial-coupling geometry of the OFEC matrix. Rows are counted from the
// bottom: block j covers rows [j*B, (j+1)*B). Chunk columns are numbered
// 0 .. 2B-1; columns below B form the first half-chunk.
struct OfecParams {
    unsigned block_rows = 16;     // B
    unsigned rows = 128;          // N = n/2 of the component code
    unsigned guard = 2;           // guard interval in chunks
    unsigned info_rows = 111;     // K new information bits per column
    unsigned parity_rows = 17;    // P = n - k parity bits per column

    unsigned depth() const { return rows / block_rows; }       // N/B coupling blocks
    unsigned chunk_cols() const { return 2 * block_rows; }     // 2B
    unsigned max_offset() const { return depth() + guard; }    // farthest coupling reach

    void validate() const {
        if (rows % block_rows != 0) throw std::invalid_argument("rows must be a multiple of block_rows");
        if (info_rows + parity_rows != rows) throw std::invalid_argument("K + P must equal N");
    }

    static OfecParams standard() { return OfecParams{}; }
};

// Address of a transmitted bit: chunk index (signed, the stream is
// semi-infinite with all-zero genesis below zero), row in [0, N),
// column in [0, 2B).
struct ChunkAddress {
    int64_t chunk = 0;
    unsigned row = 0;
    unsigned col = 0;

    friend bool operator==(const ChunkAddress&, const ChunkAddress&) = default;
};

// Address of a virtual (coupled) bit: the future codeword that re-reads a
// transmitted bit. vrow indexes the virtual half [0, N) of that codeword.
struct VirtualAddress {
    int64_t chunk = 0;
    unsigned vrow = 0;
    unsigned col = 0;

    friend bool operator==(const VirtualAddress&, const VirtualAddress&) = default;
};

// Per-block interleaver pair: two bijections on BxB coordinate grids plus
// the fixed half-swap. sigma produces the output left half from the input
// right half, tau the output right half from the input left half. The
// default for both is the transpose.
class Interleaver {
public:
    explicit Interleaver(unsigned b);
    Interleaver(unsigned b, std::vector<uint16_t> sigma, std::vector<uint16_t> tau);

    unsigned b() const { return b_; }

    // Forward map of one in-block position. (r, c) with c < B sits in the
    // left input half and lands in the output right half, and vice versa.
    void map_forward(unsigned r, unsigned c, unsigned* out_r, unsigned* out_c) const;
    void map_inverse(unsigned r, unsigned c, unsigned* out_r, unsigned* out_c) const;

private:
    static std::vector<uint16_t> invert(const std::vector<uint16_t>& p, unsigned b);

    unsigned b_;
    std::vector<uint16_t> sigma_, tau_;          // flat index r*B+c -> r'*B+c'
    std::vector<uint16_t> sigma_inv_, tau_inv_;
};

class Geometry {
public:
    explicit Geometry(OfecParams params);
    Geometry(OfecParams params, Interleaver il);

    const OfecParams& params() const { return p_; }
    const Interleaver& interleaver() const { return il_; }

    // Chunk that supplies block j of virtual chunk Y(i): the staircase
    // reaches back through the guard interval, i - depth - guard + j.
    int64_t source_chunk(int64_t i, unsigned j) const {
        if (j >= p_.depth()) throw std::out_of_range("block index");
        return i - static_cast<int64_t>(p_.depth()) - static_cast<int64_t>(p_.guard) + j;
    }

    // Future codeword in which a transmitted bit reappears as a virtual bit.
    VirtualAddress coupled_position(const ChunkAddress& a) const;

    // Inverse: the transmitted bit a virtual position reads.
    ChunkAddress virtual_source(const VirtualAddress& v) const;

    // In-place block interleave of a BxB pair: bits is a callback-free
    // dense row-major matrix of B rows by 2B columns (bytes 0/1).
    void interleave_block(const uint8_t* in, uint8_t* out) const;
    void deinterleave_block(const uint8_t* in, uint8_t* out) const;

private:
    OfecParams p_;
    Interleaver il_;
};

} // namespace ofec
