#pragma once

#include "twoadic/bigint.hpp"
#include "twoadic/gauss.hpp"
#include "twoadic/numtheory.hpp"
#include "twoadic/sequence.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace twoadic {

/// Raised where a determinant-based certificate cannot say anything because
/// det(A) = 0.
struct SingularCirculantError : std::domain_error {
    SingularCirculantError() : std::domain_error("certificate inapplicable: det(A) = 0") {}
};

/// Reduced 2-adic value of one period of a sequence: the infinite periodic
/// sum of s_i 2^i equals numerator/denominator with the denominator odd and
/// coprime to the numerator. complexity = floor(log2(denominator + 1)).
struct TwoAdicProfile {
    Int numerator;    // -denominator <= numerator <= 0
    Int denominator;  // odd, >= 1
    std::size_t complexity = 0;
};

/// Computes M = P_s(2) and reduces M/(1 - 2^N).
///
/// The all-zero sequence reduces to 0/1 and is reported with complexity
/// floor(log2(2)) = 1 by uniform application of the formula; callers that
/// prefer the AC=0 convention for that degenerate case must special-case it.
inline TwoAdicProfile two_adic_fraction(const BinarySequence& s) {
    const std::size_t n = s.period();
    const Int m = s.poly_eval_2();
    const Int q = mersenne(n);
    const Int d = gcd(m, q);  // gcd(0, q) = q handles the all-zero case
    TwoAdicProfile out;
    out.numerator = -(m / d);
    out.denominator = q / d;
    out.complexity = floor_log2(out.denominator + 1);
    return out;
}

/// Theorem-style certificate: gcd(2^N - 1, |det(A)|) = 1 forces AC(s) = N.
/// Returns the gcd condition; when it holds, the 2-adic complexity is
/// cross-asserted to equal N. det(A) = 0 is a distinct error.
inline bool maximality_certificate(const BinarySequence& s, const Int& det_a) {
    if (det_a == 0) throw SingularCirculantError{};
    const Int g = gcd(mersenne(s.period()), abs(det_a));
    if (g == 1) {
        if (two_adic_fraction(s).complexity != s.period())
            throw std::logic_error("maximality_certificate: gcd certificate held but AC != N");
        return true;
    }
    return false;
}

/// floor(log2((2^N - 1)/gcd(2^N - 1, |det|) + 1)): a guaranteed lower bound
/// on the 2-adic complexity, from the determinant alone.
inline std::size_t ac_lower_bound_from_det(std::size_t n, const Int& det_a) {
    if (det_a == 0) throw SingularCirculantError{};
    const Int q = mersenne(n);
    const Int d2 = gcd(q, abs(det_a));
    return floor_log2(q / d2 + 1);
}

enum class MersenneMode { prime_p, twin_product };
enum class BoundOutcome { holds, fails, unverified };

inline const char* to_string(BoundOutcome o) {
    switch (o) {
        case BoundOutcome::holds: return "holds";
        case BoundOutcome::fails: return "fails";
        case BoundOutcome::unverified: return "unverified";
    }
    return "unverified";
}

struct MersenneBoundReport {
    std::size_t n = 0;             // exponent
    Int threshold;                 // p + 2
    std::vector<Int> factors;      // prime factors of 2^N - 1, with multiplicity
    BoundOutcome outcome = BoundOutcome::unverified;
};

/// Fully factors 2^N - 1 (N <= n_limit) and checks that every prime factor
/// is at least p + 2, where N = p or N = p(p+2). A factorization that blows
/// the effort budget yields `unverified`, never a false claim.
inline MersenneBoundReport mersenne_factor_bound_check(std::size_t n, MersenneMode mode,
                                                       std::size_t n_limit = 64) {
    MersenneBoundReport report;
    report.n = n;

    std::size_t p = 0;
    if (mode == MersenneMode::prime_p) {
        if (n < 3 || !is_prime(Int(n)))
            throw std::invalid_argument("mersenne_factor_bound_check: N must be an odd prime");
        p = n;
    } else {
        const Int root = isqrt(Int(n) + 1);
        if (root * root != Int(n) + 1)
            throw std::invalid_argument("mersenne_factor_bound_check: N must equal p(p+2)");
        p = (root - 1).convert_to<std::size_t>();
        if (p < 3 || !is_prime(Int(p)) || !is_prime(Int(p) + 2))
            throw std::invalid_argument("mersenne_factor_bound_check: N must equal p(p+2) for twin primes");
    }
    report.threshold = Int(p) + 2;

    if (n > n_limit) {
        report.outcome = BoundOutcome::unverified;
        return report;
    }
    const Factorization f = factorize(mersenne(n));
    report.factors = f.prime_list();
    if (!f.complete()) {
        report.outcome = BoundOutcome::unverified;
        return report;
    }
    report.outcome = BoundOutcome::holds;
    for (const auto& q : report.factors)
        if (q < report.threshold) report.outcome = BoundOutcome::fails;
    return report;
}

/// gcd(1 + 2p + a^2 p, 2^p - 1) = 1 and gcd(1 - 2p + a^2 p, 2^p - 1) = 1,
/// with a from the normalized two-squares decomposition of p.
inline bool dhl_gcd_lemma_check(std::int64_t p, std::int64_t a) {
    const Int m = mersenne(static_cast<std::size_t>(p));
    const Int a2p = Int(a) * a * p;
    return gcd(abs(Int(1) + 2 * p + a2p), m) == 1 && gcd(abs(Int(1) - 2 * p + a2p), m) == 1;
}

inline bool dhl_gcd_lemma_check(std::int64_t p) { return dhl_gcd_lemma_check(p, two_squares(p).a); }

}  // namespace twoadic
