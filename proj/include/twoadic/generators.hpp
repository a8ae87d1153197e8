#pragma once

#include "twoadic/gauss.hpp"
#include "twoadic/numtheory.hpp"
#include "twoadic/registers.hpp"
#include "twoadic/sequence.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace twoadic {

/// Legendre sequence of period p: bit i is 1 exactly when i is a nonzero
/// quadratic residue mod p.
inline BinarySequence gen_legendre(std::int64_t p) {
    if (p < 3 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("gen_legendre: p must be an odd prime");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(p), 0);
    for (std::int64_t x = 1; x < p; ++x) {
        const std::int64_t sq = static_cast<std::int64_t>(
            mulmod_u64(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(p)));
        bits[static_cast<std::size_t>(sq)] = 1;
    }
    return BinarySequence(std::move(bits));
}

/// Ding-Helleseth-Lam sequence: support D_0 u D_1 of the quartic cyclotomic
/// classes for the canonical (smallest) primitive root.
inline BinarySequence gen_dhl(std::int64_t p) {
    if (p % 4 != 1 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("gen_dhl: p must be a prime = 1 mod 4");
    const CyclotomicTable t = cyclotomic_table(p, 4);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(p), 0);
    for (std::int64_t x = 1; x < p; ++x) {
        const auto c = t.class_of[static_cast<std::size_t>(x)];
        if (c == 0 || c == 1) bits[static_cast<std::size_t>(x)] = 1;
    }
    return BinarySequence(std::move(bits));
}

namespace detail {

inline int jacobi_char(std::int64_t x, std::int64_t p) {
    const std::int64_t r = x % p;
    if (r == 0) return 0;
    return legendre_symbol(r, p);
}

}  // namespace detail

/// Twin-prime sequence of period N = p(p+2). The classic difference-set
/// support (equal nonzero characters mod p and mod p+2, plus the multiples
/// of p+2) has size (N-1)/2; the emitted sequence is its complement so the
/// support size is (N+1)/2, then the difference-set parameters are verified
/// exhaustively.
inline BinarySequence gen_twin_prime(std::int64_t p) {
    const std::int64_t q = p + 2;
    if (p < 3 || !is_prime_u64(static_cast<std::uint64_t>(p)) || !is_prime_u64(static_cast<std::uint64_t>(q)))
        throw std::invalid_argument("gen_twin_prime: p and p+2 must both be prime");
    const std::int64_t n = p * q;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 1);
    for (std::int64_t i = 0; i < n; ++i) {
        const int cp = detail::jacobi_char(i, p);
        const int cq = detail::jacobi_char(i, q);
        const bool in_classic = (i % q == 0) || (cp != 0 && cp == cq);
        if (in_classic) bits[static_cast<std::size_t>(i)] = 0;
    }
    BinarySequence s(std::move(bits));

    const auto cert = support_difference_set_check(s);
    const std::size_t nn = static_cast<std::size_t>(n);
    if (!cert.holds || cert.set_size != (nn + 1) / 2 || cert.lambda != (nn + 1) / 4)
        throw std::logic_error("gen_twin_prime: difference-set validation failed");
    return s;
}

/// Hall sextic residue sequence for p = 4a^2+27: support D_0 u D_1 u D_3 of
/// the order-6 classes, with the primitive root searched (ascending) until
/// the autocorrelation comes out ideal.
inline BinarySequence gen_hall_sextic(std::int64_t p) {
    bool right_form = false;
    for (std::int64_t a = 0; 4 * a * a + 27 <= p; ++a)
        if (4 * a * a + 27 == p) { right_form = true; break; }
    if (!right_form || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("gen_hall_sextic: p must be a prime of the form 4a^2+27");

    const std::uint64_t phi = static_cast<std::uint64_t>(p - 1);
    const auto factors = prime_factors_u64(phi);
    for (std::int64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (auto f : factors)
            if (powmod_u64(static_cast<std::uint64_t>(g), phi / f, static_cast<std::uint64_t>(p)) == 1) {
                primitive = false;
                break;
            }
        if (!primitive) continue;

        const CyclotomicTable t = cyclotomic_table(p, 6, g);
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(p), 0);
        for (std::int64_t x = 1; x < p; ++x) {
            const auto c = t.class_of[static_cast<std::size_t>(x)];
            if (c == 0 || c == 1 || c == 3) bits[static_cast<std::size_t>(x)] = 1;
        }
        BinarySequence s(std::move(bits));
        if (autocorrelation_profile(s).classification == AcClass::ideal) return s;
    }
    throw std::logic_error("gen_hall_sextic: no primitive root yields ideal autocorrelation");
}

namespace detail {

// Characteristic polynomials over GF(2), bit i = coefficient of x^i.
// One primitive polynomial per degree 2..24; each entry is re-verified
// (irreducibility and full order) before use.
inline constexpr std::uint32_t PRIMITIVE_POLY[25] = {
    0,         0,         0x7u,       0xBu,       0x13u,     0x25u,     0x43u,      0x89u,     0x11Du,
    0x211u,    0x409u,    0x805u,     0x1053u,    0x201Bu,   0x4443u,   0x8003u,    0x1100Bu,  0x20009u,
    0x40081u,  0x80027u,  0x100009u,  0x200005u,  0x400003u, 0x800021u, 0x1000087u,
};

inline unsigned gf2_degree(std::uint64_t v) { return v == 0 ? 0 : 63 - static_cast<unsigned>(__builtin_clzll(v)); }

inline std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    const unsigned dm = gf2_degree(mod);
    while (a != 0 && gf2_degree(a) >= dm) a ^= mod << (gf2_degree(a) - dm);
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> dm) & 1) a ^= mod;
    }
    return r;
}

inline std::uint64_t gf2_powmod_x(std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1, base = 2;  // base = x
    while (exp != 0) {
        if (exp & 1) result = gf2_mulmod(result, base, mod);
        base = gf2_mulmod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

inline std::uint64_t gf2_gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const unsigned db = gf2_degree(b);
        while (a != 0 && gf2_degree(a) >= db) a ^= b << (gf2_degree(a) - db);
        std::swap(a, b);
    }
    return a;
}

inline bool gf2_is_primitive(std::uint32_t poly, unsigned n) {
    if (gf2_degree(poly) != n || (poly & 1) == 0) return false;
    // irreducible: x^(2^n) = x mod poly, and x^(2^(n/d)) - x coprime to poly
    // for every prime d | n
    std::uint64_t x2k = 2;
    for (unsigned k = 0; k < n; ++k) x2k = gf2_mulmod(x2k, x2k, poly);
    if (x2k != 2) return false;
    for (auto d : prime_factors_u64(n)) {
        std::uint64_t t = 2;
        for (unsigned k = 0; k < n / d; ++k) t = gf2_mulmod(t, t, poly);
        if (gf2_gcd(t ^ 2u, poly) != 1) return false;
    }
    // full order: x^((2^n-1)/f) != 1 for every prime f | 2^n - 1
    const std::uint64_t order = (std::uint64_t(1) << n) - 1;
    for (auto f : prime_factors_u64(order))
        if (gf2_powmod_x(order / f, poly) == 1) return false;
    return true;
}

}  // namespace detail

/// Connection coefficients q_1..q_n (over F_2) of the verified primitive
/// recurrence for degree n; usable directly as an LfsrState connection.
inline std::vector<std::int64_t> primitive_connection_coeffs(unsigned n) {
    if (n < 2 || n > 24)
        throw std::invalid_argument("primitive_connection_coeffs: degree must be in [2, 24]");
    const std::uint32_t poly = detail::PRIMITIVE_POLY[n];
    if (!detail::gf2_is_primitive(poly, n))
        throw std::logic_error("primitive_connection_coeffs: table entry failed verification");
    // char poly x^n + sum c_i x^(n-i) gives the recurrence s_t = sum c_i s_{t-i},
    // i.e. connection coefficients q_i = c_i = coefficient of x^(n-i).
    std::vector<std::int64_t> q(n);
    for (unsigned i = 1; i <= n; ++i) q[i - 1] = (poly >> (n - i)) & 1u;
    return q;
}

/// m-sequence of period 2^n - 1 from the all-ones start state, validated
/// (for n <= 16) to have ideal autocorrelation.
inline BinarySequence gen_m_sequence(unsigned n) {
    const auto coeffs = primitive_connection_coeffs(n);
    LfsrState state(2, coeffs, std::vector<std::int64_t>(n, 1));
    const std::size_t period = (std::size_t(1) << n) - 1;
    auto [symbols, final_state] = lfsr_generate(std::move(state), period);
    std::vector<std::uint8_t> bits(period);
    for (std::size_t i = 0; i < period; ++i) bits[i] = static_cast<std::uint8_t>(symbols[i]);
    BinarySequence s(std::move(bits));
    if (s.weight() != (std::size_t(1) << (n - 1)))
        throw std::logic_error("gen_m_sequence: wrong weight; table entry is not primitive");
    if (n <= 16 && autocorrelation_profile(s).classification != AcClass::ideal)
        throw std::logic_error("gen_m_sequence: autocorrelation validation failed");
    return s;
}

}  // namespace twoadic
