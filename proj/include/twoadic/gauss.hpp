#pragma once

#include "twoadic/bigint.hpp"
#include "twoadic/mpfloat.hpp"
#include "twoadic/numtheory.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace twoadic {

/// Smallest positive primitive root of the prime p.
inline std::int64_t canonical_primitive_root(std::int64_t p) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("canonical_primitive_root: p must be prime");
    if (p == 2) return 1;
    const std::uint64_t phi = static_cast<std::uint64_t>(p - 1);
    const auto factors = prime_factors_u64(phi);
    for (std::uint64_t g = 2; g < static_cast<std::uint64_t>(p); ++g) {
        bool primitive = true;
        for (auto q : factors) {
            if (powmod_u64(g, phi / q, static_cast<std::uint64_t>(p)) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return static_cast<std::int64_t>(g);
    }
    throw std::logic_error("canonical_primitive_root: none found");  // unreachable for prime p
}

/// Partition of {1..p-1} into the d cyclotomic classes D_i of order d:
/// x lies in D_i when the discrete log of x (base the chosen generator)
/// is congruent to i mod d.
struct CyclotomicTable {
    std::int64_t p = 0;
    int d = 0;
    std::int64_t generator = 0;
    std::vector<std::int32_t> class_of;  // size p; class_of[0] = -1

    std::vector<std::vector<std::int64_t>> classes() const {
        std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(d));
        for (std::int64_t x = 1; x < p; ++x) out[static_cast<std::size_t>(class_of[static_cast<std::size_t>(x)])].push_back(x);
        return out;
    }
};

inline CyclotomicTable cyclotomic_table(std::int64_t p, int d, std::int64_t generator = 0) {
    if (p < 3 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("cyclotomic_table: p must be an odd prime");
    if (d < 1 || (p - 1) % d != 0)
        throw std::invalid_argument("cyclotomic_table: d must divide p-1");
    CyclotomicTable t;
    t.p = p;
    t.d = d;
    t.generator = generator != 0 ? generator : canonical_primitive_root(p);
    t.class_of.assign(static_cast<std::size_t>(p), -1);
    std::int64_t x = 1;
    for (std::int64_t e = 0; e < p - 1; ++e) {
        t.class_of[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(e % d);
        x = static_cast<std::int64_t>(mulmod_u64(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(t.generator),
                                                 static_cast<std::uint64_t>(p)));
    }
    if (x != 1) throw std::logic_error("cyclotomic_table: generator is not primitive");
    return t;
}

/// Legendre symbol via the Euler criterion, mapped to {-1, 0, +1}.
inline int legendre_symbol(const Int& x, std::int64_t p) {
    if (p < 3 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    const std::uint64_t r = mod_floor(x, p).convert_to<std::uint64_t>();
    if (r == 0) return 0;
    const std::uint64_t e = powmod_u64(r, static_cast<std::uint64_t>((p - 1) / 2), static_cast<std::uint64_t>(p));
    return e == 1 ? 1 : -1;
}

/// The decomposition p = a^2 + b^2 normalized as the paper uses it:
/// a odd with a = -(2|p) mod 4, b reported nonnegative.
struct TwoSquares {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t p = 0;
};

inline TwoSquares two_squares(std::int64_t p) {
    if (p % 4 != 1 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("two_squares: p must be a prime = 1 mod 4");
    const int chi2 = legendre_symbol(2, p);
    const std::int64_t want = ((-chi2) % 4 + 4) % 4;  // residue a must have mod 4
    for (std::int64_t a = 1; a * a <= p; a += 2) {
        Int b2 = Int(p) - Int(a) * a;
        Int root;
        if (is_perfect_square(b2, &root)) {
            std::int64_t signed_a = (a % 4 == want) ? a : -a;
            if (((signed_a % 4) + 4) % 4 != want) throw std::logic_error("two_squares: normalization failed");
            return TwoSquares{signed_a, root.convert_to<std::int64_t>(), p};
        }
    }
    throw std::logic_error("two_squares: no decomposition found");  // impossible for valid p
}

namespace detail {

using GaussFloat = BigFloat<320>;

/// Period sums B_i = sum over D_i^{(d,p)} of w_p^x, for all i at once.
inline std::vector<Complex<GaussFloat>> period_sums(const CyclotomicTable& t) {
    const auto roots = unit_roots<GaussFloat>(static_cast<std::size_t>(t.p));
    std::vector<Complex<GaussFloat>> sums(static_cast<std::size_t>(t.d));
    for (std::int64_t x = 1; x < t.p; ++x)
        sums[static_cast<std::size_t>(t.class_of[static_cast<std::size_t>(x)])] += roots[static_cast<std::size_t>(x)];
    return sums;
}

}  // namespace detail

/// Quadratic period sums B_0, B_1 (real for p = 1 mod 4), asserted against
/// the closed forms (sqrt(p)-1)/2 and -(sqrt(p)+1)/2 before being returned.
struct QuadraticPeriods {
    double b0 = 0;
    double b1 = 0;
};

inline QuadraticPeriods quadratic_period_values(std::int64_t p) {
    if (p % 4 != 1 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("quadratic_period_values: p must be a prime = 1 mod 4");
    using F = detail::GaussFloat;
    const auto sums = detail::period_sums(cyclotomic_table(p, 2));
    const F sqrt_p = sqrt(F(p));
    const F tol = F(1e-25);
    using std::abs;
    if (abs(sums[0].im) > tol || abs(sums[1].im) > tol)
        throw std::logic_error("quadratic_period_values: period sums acquired imaginary part");
    if (abs(sums[0].re - (sqrt_p - 1) / 2) > tol || abs(sums[1].re + (sqrt_p + 1) / 2) > tol)
        throw std::logic_error("quadratic_period_values: closed form mismatch; precision bug");
    return QuadraticPeriods{sums[0].re.convert_to<double>(), sums[1].re.convert_to<double>()};
}

/// Expected value of the scaled quartic pair product, by residue of p mod 8:
/// 1 - 2p + a^2 p when p = 1 mod 8, and 1 + 2p + a^2 p when p = 5 mod 8.
inline Int quartic_product_expected(std::int64_t p, std::int64_t a) {
    const Int a2p = Int(a) * a * p;
    return p % 8 == 1 ? Int(1) - 2 * p + a2p : Int(1) + 2 * p + a2p;
}

/// 16*(B_0+B_1)(B_1+B_2)(B_2+B_3)(B_3+B_0) over the quartic classes, rounded
/// to the nearest integer (residual must stay below 0.5) and asserted equal
/// to the closed form for the residue class of p mod 8.
inline Int quartic_period_product(std::int64_t p) {
    if (p % 4 != 1 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("quartic_period_product: p must be a prime = 1 mod 4");
    using F = detail::GaussFloat;
    const auto b = detail::period_sums(cyclotomic_table(p, 4));
    Complex<F> prod{F(16), F(0)};
    for (int i = 0; i < 4; ++i) prod = prod * (b[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>((i + 1) % 4)]);

    using std::abs;
    const F rounded_f = round(prod.re);
    const F residual = abs(prod.re - rounded_f) + abs(prod.im);
    if (residual >= F(0.5)) throw std::runtime_error("quartic_period_product: rounding residual >= 0.5");
    const Int value = rounded_f.convert_to<Int>();

    const Int expected = quartic_product_expected(p, two_squares(p).a);
    if (value != expected) throw std::logic_error("quartic_period_product: closed form mismatch");
    return value;
}

}  // namespace twoadic
