#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace ofec {

// Fixed 256-bit container used for component codewords and chunk columns.
struct Word256 {
    std::array<uint64_t, 4> w{};

    bool get(unsigned i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(unsigned i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
    void clear(unsigned i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void flip(unsigned i) { w[i >> 6] ^= uint64_t{1} << (i & 63); }
    void assign(unsigned i, bool v) { v ? set(i) : clear(i); }

    void zero() { w = {0, 0, 0, 0}; }

    unsigned popcount() const {
        return static_cast<unsigned>(std::popcount(w[0]) + std::popcount(w[1]) +
                                     std::popcount(w[2]) + std::popcount(w[3]));
    }

    Word256& operator^=(const Word256& o) {
        w[0] ^= o.w[0]; w[1] ^= o.w[1]; w[2] ^= o.w[2]; w[3] ^= o.w[3];
        return *this;
    }
    friend Word256 operator^(Word256 a, const Word256& b) { return a ^= b; }
    friend bool operator==(const Word256& a, const Word256& b) { return a.w == b.w; }

    uint8_t byte(unsigned i) const {
        return static_cast<uint8_t>(w[i >> 3] >> ((i & 7) * 8));
    }
};

} // namespace ofec
