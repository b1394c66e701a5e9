#include "ofec/ebch.hpp"

#include <stdexcept>

namespace ofec {
namespace {

// Minimal polynomial of alpha^r: product of (x - alpha^c) over the
// conjugacy class {r, 2r, 4r, ...} mod (2^m - 1). Coefficients land in
// GF(2) and are returned as a bit mask.
uint32_t minimal_poly(const Gf& gf, unsigned r) {
    std::vector<unsigned> cls;
    unsigned c = r;
    do {
        cls.push_back(c);
        c = (2 * c) % gf.order();
    } while (c != r);

    std::vector<uint8_t> poly{1};  // leading coefficient, poly[i] = coeff of x^(deg-i)
    for (unsigned e : cls) {
        uint8_t root = gf.pow_alpha(e);
        std::vector<uint8_t> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] ^= poly[i];                       // x * poly
            next[i + 1] ^= gf.mul(poly[i], root);     // root * poly
        }
        poly = std::move(next);
    }

    uint32_t bits = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] > 1) throw std::logic_error("minimal polynomial not over GF(2)");
        if (poly[i]) bits |= 1u << (poly.size() - 1 - i);
    }
    return bits;
}

uint32_t polymul_gf2(uint32_t a, uint32_t b) {
    uint32_t r = 0;
    for (unsigned i = 0; b >> i; ++i)
        if ((b >> i) & 1) r ^= a << i;
    return r;
}

} // namespace

EbchCodec::EbchCodec(const Gf& field)
    : gf_(field), n_(field.size()), deg_(2 * field.m()) {
    k_ = n_ - 1 - deg_;
    n_bytes_ = n_ / 8;

    uint32_t g = polymul_gf2(minimal_poly(gf_, 1), minimal_poly(gf_, 3));
    if ((g >> deg_) != 1u) throw std::logic_error("unexpected generator degree");
    gen_low_ = g & ((1u << deg_) - 1);
    rem_mask_ = (1u << deg_) - 1;
    gen_.assign(deg_ + 1, 0);
    for (unsigned i = 0; i <= deg_; ++i) gen_[i] = (g >> i) & 1;

    s1_tab_.resize(n_bytes_);
    s3_tab_.resize(n_bytes_);
    for (unsigned bp = 0; bp < n_bytes_; ++bp) {
        for (unsigned v = 0; v < 256; ++v) {
            uint8_t a1 = 0, a3 = 0;
            for (unsigned u = 0; u < 8; ++u) {
                if (!((v >> u) & 1)) continue;
                unsigned idx = 8 * bp + u;
                if (idx >= n_ - 1) continue;  // overall parity bit, no locator
                unsigned p = n_ - 2 - idx;
                a1 ^= gf_.pow_alpha(p);
                a3 ^= gf_.pow_alpha((3 * p) % gf_.order());
            }
            s1_tab_[bp][v] = a1;
            s3_tab_[bp][v] = a3;
        }
    }
}

Word256 EbchCodec::encode(const Word256& message) const {
    uint32_t rem = 0;
    for (unsigned j = 0; j < k_; ++j) {
        uint32_t fb = ((rem >> (deg_ - 1)) ^ (message.get(j) ? 1u : 0u)) & 1u;
        rem = ((rem << 1) & rem_mask_) ^ (fb ? gen_low_ : 0u);
    }

    Word256 cw = message;
    for (unsigned j = 0; j < deg_; ++j)
        cw.assign(k_ + j, (rem >> (deg_ - 1 - j)) & 1u);
    // Overall parity closes the word to even weight.
    if (cw.popcount() & 1u) cw.set(n_ - 1);
    return cw;
}

Syndromes EbchCodec::compute_syndromes(const Word256& word) const {
    Syndromes s;
    uint8_t s1 = 0, s3 = 0;
    for (unsigned bp = 0; bp < n_bytes_; ++bp) {
        uint8_t v = word.byte(bp);
        s1 ^= s1_tab_[bp][v];
        s3 ^= s3_tab_[bp][v];
    }
    s.s1 = s1;
    s.s3 = s3;
    s.odd_parity = word.popcount() & 1u;
    return s;
}

BddOutcome EbchCodec::bdd_decode(const Word256& word) const {
    const Syndromes s = compute_syndromes(word);
    BddOutcome out;

    if (s.s1 == 0 && s.s3 == 0) {
        if (!s.odd_parity) {
            out.tag = BddTag::AlreadyCodeword;
            return out;
        }
        // BCH part clean, overall parity off: extension bit in error.
        out.tag = BddTag::Corrected;
        out.num_flips = 1;
        out.flips[0] = static_cast<uint16_t>(n_ - 1);
        return out;
    }

    if (s.s1 != 0 && s.s3 == gf_.cube(s.s1)) {
        // Single error in the BCH part; pair it with the extension bit
        // when the parity demands an even flip count.
        uint16_t idx = static_cast<uint16_t>(bit_of_locator(s.s1));
        out.tag = BddTag::Corrected;
        if (s.odd_parity) {
            out.num_flips = 1;
            out.flips[0] = idx;
        } else {
            out.num_flips = 2;
            out.flips[0] = idx;
            out.flips[1] = static_cast<uint16_t>(n_ - 1);
        }
        return out;
    }

    if (s.s1 == 0) return out;  // s3 != 0 with s1 = 0: at least 3 errors

    // Two errors: locators are the roots of y^2 + s1*y + sigma2 with
    // sigma2 = (s3 + s1^3)/s1. Substituting y = s1*z turns it into
    // z^2 + z = sigma2 / s1^2.
    const uint8_t sigma2 = gf_.div(s.s3 ^ gf_.cube(s.s1), s.s1);
    const uint8_t c = gf_.div(sigma2, gf_.sqr(s.s1));
    uint8_t z;
    if (!gf_.solve_z2_z(c, &z)) return out;
    const uint8_t y1 = gf_.mul(s.s1, z);
    const uint8_t y2 = y1 ^ s.s1;
    if (y1 == 0 || y2 == 0) return out;
    if (s.odd_parity) return out;  // two flips cannot fix odd parity

    out.tag = BddTag::Corrected;
    out.num_flips = 2;
    out.flips[0] = static_cast<uint16_t>(bit_of_locator(y1));
    out.flips[1] = static_cast<uint16_t>(bit_of_locator(y2));
    return out;
}

const Gf& gf256() {
    static const Gf f(8, 0x11D);
    return f;
}

const EbchCodec& ebch256() {
    static const EbchCodec codec(gf256());
    return codec;
}

const Gf& gf32() {
    static const Gf f(5, 0x25);
    return f;
}

const EbchCodec& ebch32() {
    static const EbchCodec codec(gf32());
    return codec;
}

} // namespace ofec
