#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ofec/bitword.hpp"
#include "ofec/gf.hpp"

namespace ofec {

enum class BddTag : uint8_t {
    AlreadyCodeword,
    Corrected,
    Failed,
};

// Decoder verdict. At most t=2 flip positions; the input word is never
// modified, callers apply the flips themselves.
struct BddOutcome {
    BddTag tag = BddTag::Failed;
    uint8_t num_flips = 0;
    std::array<uint16_t, 2> flips{};

    bool corrected() const { return tag == BddTag::Corrected; }
    bool failed() const { return tag == BddTag::Failed; }
};

struct Syndromes {
    uint8_t s1 = 0;
    uint8_t s3 = 0;
    bool odd_parity = false;
};

// Extended BCH codec over GF(2^m): n = 2^m bits, double-error-correcting
// BCH(2^m-1, 2^m-1-2m) plus one overall parity bit. d_min = 6, t = 2.
//
// Bit layout of a codeword, index 0 .. n-1:
//   [0, k)        message bits, bit j is the coefficient of x^(n-2-j)
//   [k, n-1)      2m BCH parity bits, high power first
//   n-1           overall even-parity bit
//
// A two-flip BCH correction whose flip count disagrees with the overall
// parity is reported Failed: with d_min = 6 such a correction cannot be
// right, and screening it out removes a class of miscorrections.
class EbchCodec {
public:
    explicit EbchCodec(const Gf& field);

    unsigned n() const { return n_; }
    unsigned k() const { return k_; }
    static constexpr unsigned t() { return 2; }
    static constexpr unsigned d_min() { return 6; }
    const Gf& field() const { return gf_; }
    const std::vector<uint8_t>& generator() const { return gen_; }

    // message: k bits packed in a Word256 (bits [0,k)). Returns the n-bit codeword.
    Word256 encode(const Word256& message) const;

    // Bits at index >= n must be zero.
    Syndromes compute_syndromes(const Word256& word) const;

    BddOutcome bdd_decode(const Word256& word) const;

    bool is_codeword(const Word256& word) const {
        Syndromes s = compute_syndromes(word);
        return s.s1 == 0 && s.s3 == 0 && !s.odd_parity;
    }

    // alpha^(power of bit index): position idx of the BCH part represents
    // the coefficient of x^(n-2-idx).
    uint8_t locator_of_bit(unsigned idx) const { return gf_.pow_alpha(n_ - 2 - idx); }
    unsigned bit_of_locator(uint8_t loc) const { return n_ - 2 - gf_.log(loc); }

private:
    const Gf& gf_;
    unsigned n_;
    unsigned k_;
    unsigned deg_;                 // degree of the generator = 2m
    uint32_t gen_low_;             // generator minus its leading term
    uint32_t rem_mask_;
    std::vector<uint8_t> gen_;     // generator coefficients, gen_[i] = coeff of x^i
    unsigned n_bytes_;
    // Byte-indexed syndrome accumulation tables: tab[byte_pos][byte_val].
    std::vector<std::array<uint8_t, 256>> s1_tab_;
    std::vector<std::array<uint8_t, 256>> s3_tab_;
};

// The production component code of the artifact: (256, 239) eBCH over
// GF(2^8) with primitive polynomial x^8+x^4+x^3+x^2+1 (0x11D).
const Gf& gf256();
const EbchCodec& ebch256();

// Small (32, 21) eBCH over GF(2^5), x^5+x^2+1 (0x25). Used by the
// product-code reference model where brute-force checks stay cheap.
const Gf& gf32();
const EbchCodec& ebch32();

} // namespace ofec
