#include "ofec/geometry.hpp"

namespace ofec {

namespace {
std::vector<uint16_t> transpose_perm(unsigned b) {
    std::vector<uint16_t> p(b * b);
    for (unsigned r = 0; r < b; ++r)
        for (unsigned c = 0; c < b; ++c)
            p[r * b + c] = static_cast<uint16_t>(c * b + r);
    return p;
}
} // namespace

Interleaver::Interleaver(unsigned b)
    : Interleaver(b, transpose_perm(b), transpose_perm(b)) {}

Interleaver::Interleaver(unsigned b, std::vector<uint16_t> sigma, std::vector<uint16_t> tau)
    : b_(b), sigma_(std::move(sigma)), tau_(std::move(tau)) {
    if (sigma_.size() != b * b || tau_.size() != b * b)
        throw std::invalid_argument("interleaver permutation size");
    sigma_inv_ = invert(sigma_, b);
    tau_inv_ = invert(tau_, b);
}

std::vector<uint16_t> Interleaver::invert(const std::vector<uint16_t>& p, unsigned b) {
    std::vector<uint16_t> inv(b * b, 0xFFFF);
    for (unsigned i = 0; i < p.size(); ++i) {
        if (p[i] >= p.size() || inv[p[i]] != 0xFFFF)
            throw std::invalid_argument("interleaver permutation is not a bijection");
        inv[p[i]] = static_cast<uint16_t>(i);
    }
    return inv;
}

void Interleaver::map_forward(unsigned r, unsigned c, unsigned* out_r, unsigned* out_c) const {
    if (c < b_) {
        // left input half -> tau -> right output half
        unsigned q = tau_[r * b_ + c];
        *out_r = q / b_;
        *out_c = b_ + q % b_;
    } else {
        unsigned q = sigma_[r * b_ + (c - b_)];
        *out_r = q / b_;
        *out_c = q % b_;
    }
}

void Interleaver::map_inverse(unsigned r, unsigned c, unsigned* out_r, unsigned* out_c) const {
    if (c < b_) {
        unsigned q = sigma_inv_[r * b_ + c];
        *out_r = q / b_;
        *out_c = b_ + q % b_;
    } else {
        unsigned q = tau_inv_[r * b_ + (c - b_)];
        *out_r = q / b_;
        *out_c = q % b_;
    }
}

Geometry::Geometry(OfecParams params) : Geometry(params, Interleaver(params.block_rows)) {}

Geometry::Geometry(OfecParams params, Interleaver il) : p_(params), il_(std::move(il)) {
    p_.validate();
    if (il_.b() != p_.block_rows) throw std::invalid_argument("interleaver block size mismatch");
}

VirtualAddress Geometry::coupled_position(const ChunkAddress& a) const {
    if (a.row >= p_.rows || a.col >= p_.chunk_cols())
        throw std::out_of_range("chunk address");
    const unsigned b = p_.block_rows;
    const unsigned j = a.row / b;
    unsigned vr, vc;
    il_.map_forward(a.row % b, a.col, &vr, &vc);
    VirtualAddress v;
    v.chunk = a.chunk + static_cast<int64_t>(p_.depth()) + p_.guard - j;
    v.vrow = j * b + vr;
    v.col = vc;
    return v;
}

ChunkAddress Geometry::virtual_source(const VirtualAddress& v) const {
    if (v.vrow >= p_.rows || v.col >= p_.chunk_cols())
        throw std::out_of_range("virtual address");
    const unsigned b = p_.block_rows;
    const unsigned j = v.vrow / b;
    unsigned r, c;
    il_.map_inverse(v.vrow % b, v.col, &r, &c);
    ChunkAddress a;
    a.chunk = source_chunk(v.chunk, j);
    a.row = j * b + r;
    a.col = c;
    return a;
}

void Geometry::interleave_block(const uint8_t* in, uint8_t* out) const {
    const unsigned b = p_.block_rows;
    const unsigned cols = 2 * b;
    for (unsigned r = 0; r < b; ++r) {
        for (unsigned c = 0; c < cols; ++c) {
            unsigned orow, ocol;
            il_.map_forward(r, c, &orow, &ocol);
            out[orow * cols + ocol] = in[r * cols + c];
        }
    }
}

void Geometry::deinterleave_block(const uint8_t* in, uint8_t* out) const {
    const unsigned b = p_.block_rows;
    const unsigned cols = 2 * b;
    for (unsigned r = 0; r < b; ++r) {
        for (unsigned c = 0; c < cols; ++c) {
            unsigned orow, ocol;
            il_.map_inverse(r, c, &orow, &ocol);
            out[orow * cols + ocol] = in[r * cols + c];
        }
    }
}

} // namespace ofec
