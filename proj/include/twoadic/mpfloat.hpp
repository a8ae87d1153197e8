#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <vector>

namespace twoadic {

/// Binary-precision float with Bits mantissa bits, plain value semantics.
template <unsigned Bits>
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::backends::digit_base_2>,
    boost::multiprecision::et_off>;

template <typename T>
struct Complex {
    T re{}, im{};

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    /// 1-norm |re|+|im|; an upper bound on the modulus, cheap to maintain
    /// alongside rigorous error accumulation.
    T norm1() const {
        using std::abs;
        return abs(re) + abs(im);
    }
};

namespace detail {

/// Roots of unity w^0..w^{N-1}, w = e^{2*pi*i/N}, built from one sin/cos pair
/// by repeated multiplication. The component error of entry t is bounded by
/// (root_err0 + t*mul_err) * eps with the constants below; callers fold that
/// into their own error budgets.
template <typename T>
std::vector<Complex<T>> unit_roots(std::size_t n) {
    const T two_pi = 2 * boost::math::constants::pi<T>();
    std::vector<Complex<T>> roots(n);
    roots[0] = {T(1), T(0)};
    if (n == 1) return roots;
    const T theta = two_pi / static_cast<T>(static_cast<unsigned long long>(n));
    const Complex<T> w{cos(theta), sin(theta)};
    for (std::size_t t = 1; t < n; ++t) roots[t] = roots[t - 1] * w;
    return roots;
}

// Conservative per-operation error coefficients (in units of eps = 2^{1-Bits})
// for the unit_roots table: entry t carries component error at most
// (ROOT_ERR0 + ROOT_ERR_PER_MUL * t) * eps.
inline constexpr double ROOT_ERR0 = 64.0;
inline constexpr double ROOT_ERR_PER_MUL = 8.0;

}  // namespace detail

}  // namespace twoadic
