#pragma once

#include "twoadic/bigint.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace twoadic {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
/// The witness set {2,...,37} is exact for n < 3.3e24, well past 2^64.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline Int powmod(const Int& base, const Int& exp, const Int& m) {
    return boost::multiprecision::powm(base, exp, m);
}

/// Miller-Rabin on arbitrary-precision input. Deterministic below 3.3e24
/// (the fixed-base certificate region); beyond that the same bases make the
/// test a strong probable-prime check, which is all the factorizer needs.
inline bool is_prime(const Int& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return n >= 2 && is_prime_u64(n.convert_to<std::uint64_t>());
    static const int small_bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int p : small_bases)
        if (n % p == 0) return false;
    Int d = n - 1;
    std::size_t s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (int a : small_bases) {
        Int x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (std::size_t i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

struct FactorBudget {
    std::uint64_t trial_limit = 1'000'000;   // trial division bound
    std::uint64_t rho_iterations = 1u << 22; // Pollard-rho step budget per composite
};

/// Prime factorization with an explicit effort budget. `cofactor` is the
/// unfactored remainder (1 when the factorization is complete); it is never
/// silently misreported as prime.
struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors;  // (prime, exponent), ascending
    Int cofactor = 1;

    bool complete() const { return cofactor == 1; }

    std::vector<Int> prime_list() const {
        std::vector<Int> out;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) out.push_back(p);
        return out;
    }
};

namespace detail {

/// Pollard rho, Brent variant, with deterministic polynomial offsets so that
/// runs are reproducible. Returns a nontrivial factor of n or 0 on budget
/// exhaustion. n must be odd composite and not a prime power of interest.
inline Int pollard_rho(const Int& n, std::uint64_t max_steps) {
    for (Int c = 1; c < 64; ++c) {
        Int x = 2, y = 2, d = 1;
        Int saved_x = x;
        std::uint64_t steps = 0;
        std::uint64_t limit = 1;
        while (d == 1 && steps < max_steps) {
            saved_x = x;
            for (std::uint64_t i = 0; i < limit && steps < max_steps; ++i) {
                x = (x * x + c) % n;
                ++steps;
            }
            Int prod = 1;
            std::uint64_t done = 0;
            y = saved_x;
            while (done < limit && d == 1 && steps < max_steps) {
                const std::uint64_t block = std::min<std::uint64_t>(128, limit - done);
                Int ys = y;
                for (std::uint64_t i = 0; i < block; ++i) {
                    y = (y * y + c) % n;
                    prod = prod * abs(x - y) % n;
                    ++steps;
                }
                d = gcd(prod, n);
                if (d == n) {
                    // backtrack one by one
                    d = 1;
                    y = ys;
                    for (std::uint64_t i = 0; i < block && d == 1; ++i) {
                        y = (y * y + c) % n;
                        d = gcd(abs(x - y), n);
                    }
                    if (d == n) break;  // cycle degenerate for this c
                }
                done += block;
            }
            limit *= 2;
        }
        if (d != 1 && d != n) return d;
    }
    return 0;
}

inline void factor_recurse(Int n, const FactorBudget& budget, Factorization& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.factors.emplace_back(n, 1u);
        return;
    }
    Int d = pollard_rho(n, budget.rho_iterations);
    if (d == 0) {
        out.cofactor *= n;
        return;
    }
    factor_recurse(d, budget, out);
    factor_recurse(n / d, budget, out);
}

}  // namespace detail

inline Factorization factorize(Int n, const FactorBudget& budget = {}) {
    if (n < 1) throw std::domain_error("factorize: argument must be >= 1");
    Factorization out;
    for (std::uint64_t p = 2; p <= budget.trial_limit && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.factors.emplace_back(Int(p), e);
        }
    }
    if (n > 1) detail::factor_recurse(n, budget, out);

    std::sort(out.factors.begin(), out.factors.end());
    // merge duplicates produced by the recursive split
    std::vector<std::pair<Int, unsigned>> merged;
    for (auto& [p, e] : out.factors) {
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += e;
        else
            merged.emplace_back(p, e);
    }
    out.factors = std::move(merged);
    return out;
}

/// Factor p-1 for small p (trial division only); used for primitive-root search.
inline std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; p = (p == 2 ? 3 : p + 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace twoadic
