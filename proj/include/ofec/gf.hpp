#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace ofec {

// GF(2^m) with log/antilog tables, m <= 8. Elements are stored as the
// integer whose bits are the polynomial coefficients over GF(2).
class Gf {
public:
    explicit Gf(unsigned m, unsigned primitive_poly);

    unsigned m() const { return m_; }
    unsigned order() const { return size_ - 1; }     // multiplicative order, 2^m - 1
    unsigned size() const { return size_; }          // field size, 2^m
    unsigned primitive_poly() const { return prim_; }

    uint8_t mul(uint8_t a, uint8_t b) const {
        if (a == 0 || b == 0) return 0;
        unsigned s = log_[a] + log_[b];
        if (s >= order()) s -= order();
        return exp_[s];
    }

    uint8_t inv(uint8_t a) const {
        if (a == 0) throw std::domain_error("gf: zero has no inverse");
        return exp_[(order() - log_[a]) % order()];
    }

    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

    uint8_t pow_alpha(unsigned e) const { return exp_[e % order()]; }

    uint8_t sqr(uint8_t a) const { return mul(a, a); }

    uint8_t cube(uint8_t a) const { return mul(a, mul(a, a)); }

    unsigned log(uint8_t a) const {
        if (a == 0) throw std::domain_error("gf: log of zero");
        return log_[a];
    }

    // Solves z^2 + z = c. Returns false when c has trace 1 (no solution);
    // otherwise *z is one solution, the other being *z ^ 1.
    bool solve_z2_z(uint8_t c, uint8_t* z) const {
        uint16_t v = qrt_[c];
        if (v > 0xFF) return false;
        *z = static_cast<uint8_t>(v);
        return true;
    }

    // Reference product: carry-less shift-and-reduce. Used by tests to
    // cross-check the table path.
    uint8_t mul_ref(uint8_t a, uint8_t b) const;

private:
    unsigned m_;
    unsigned prim_;
    unsigned size_;
    std::array<uint8_t, 256> exp_{};   // exp_[i] = alpha^i, indexed mod order
    std::array<uint8_t, 256> log_{};
    std::array<uint16_t, 256> qrt_{};  // z^2+z=c solutions, 0x100 = unsolvable
};

} // namespace ofec
