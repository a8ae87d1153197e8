#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace twoadic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// Number of bits in the binary representation of |v|; bit_length(0) == 0.
inline std::size_t bit_length(const Int& v) {
    if (v == 0) return 0;
    return boost::multiprecision::msb(abs(v)) + 1;
}

/// floor(log2(v)) for v > 0, computed on the bit representation.
inline std::size_t floor_log2(const Int& v) {
    if (v <= 0) throw std::domain_error("floor_log2: argument must be positive");
    return boost::multiprecision::msb(v);
}

inline Int pow2(std::size_t n) {
    Int r = 1;
    r <<= n;
    return r;
}

/// 2^n - 1.
inline Int mersenne(std::size_t n) { return pow2(n) - 1; }

inline Int ipow(Int base, std::size_t exp) {
    Int r = 1;
    while (exp != 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

/// Largest s with s*s <= v.
inline Int isqrt(const Int& v) {
    if (v < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(v);
}

inline bool is_perfect_square(const Int& v, Int* root = nullptr) {
    if (v < 0) return false;
    Int s = isqrt(v);
    if (s * s != v) return false;
    if (root) *root = s;
    return true;
}

/// Mathematical residue in [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace twoadic
