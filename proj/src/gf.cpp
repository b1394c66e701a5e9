#include "ofec/gf.hpp"

namespace ofec {

Gf::Gf(unsigned m, unsigned primitive_poly)
    : m_(m), prim_(primitive_poly), size_(1u << m) {
    if (m < 2 || m > 8) throw std::invalid_argument("gf: m out of range");
    if ((primitive_poly >> m) != 1u)
        throw std::invalid_argument("gf: primitive polynomial degree must equal m");

    unsigned x = 1;
    for (unsigned i = 0; i < order(); ++i) {
        exp_[i] = static_cast<uint8_t>(x);
        log_[x] = static_cast<uint8_t>(i);
        x <<= 1;
        if (x & size_) x ^= prim_;
    }
    if (x != 1) throw std::invalid_argument("gf: polynomial is not primitive");

    qrt_.fill(0x100);
    for (unsigned z = 0; z < size_; ++z) {
        unsigned c = z ^ (unsigned)mul_ref(static_cast<uint8_t>(z), static_cast<uint8_t>(z));
        if (qrt_[c] > 0xFF) qrt_[c] = static_cast<uint16_t>(z);
    }
}

uint8_t Gf::mul_ref(uint8_t a, uint8_t b) const {
    unsigned acc = 0;
    unsigned aa = a;
    for (unsigned bb = b; bb; bb >>= 1) {
        if (bb & 1) acc ^= aa;
        aa <<= 1;
        if (aa & size_) aa ^= prim_;
    }
    return static_cast<uint8_t>(acc);
}

} // namespace ofec
