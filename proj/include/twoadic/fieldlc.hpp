#pragma once

#include "twoadic/bigint.hpp"
#include "twoadic/numtheory.hpp"
#include "twoadic/sequence.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace twoadic {

namespace detail {

// Dense polynomials over F_p, coefficients in [0, p), lowest degree first,
// no trailing zero coefficients. The zero polynomial is the empty vector.
struct FpPoly {
    std::int64_t p;
    std::vector<std::int64_t> c;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    std::size_t deg() const { return c.size() - 1; }  // only for nonzero
};

inline std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
    // Fermat; p prime and a != 0 mod p
    std::int64_t r = 1, base = a % p, e = p - 2;
    while (e != 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

/// a -= q * x^shift * b for the scalar q; in-place remainder step.
inline void fp_submul(FpPoly& a, std::int64_t q, std::size_t shift, const FpPoly& b) {
    const std::int64_t p = a.p;
    for (std::size_t i = 0; i < b.c.size(); ++i) {
        std::int64_t& t = a.c[i + shift];
        t = (t - q * b.c[i]) % p;
        if (t < 0) t += p;
    }
    a.trim();
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b) {
    a.trim();
    b.trim();
    while (!b.zero()) {
        const std::int64_t lead_inv = fp_inv(b.c.back(), b.p);
        while (!a.zero() && a.c.size() >= b.c.size()) {
            const std::int64_t q = a.c.back() * lead_inv % a.p;
            fp_submul(a, q, a.c.size() - b.c.size(), b);
        }
        std::swap(a, b);
    }
    if (!a.zero()) {
        const std::int64_t inv = fp_inv(a.c.back(), a.p);
        for (auto& x : a.c) x = x * inv % a.p;
    }
    return a;
}

inline FpPoly fp_sequence_poly(const BinarySequence& s, std::int64_t p) {
    FpPoly out{p, {}};
    out.c.assign(s.period(), 0);
    for (std::size_t i = 0; i < s.period(); ++i) out.c[i] = s[i] % p;
    out.trim();
    return out;
}

inline FpPoly fp_one_minus_xn(std::size_t n, std::int64_t p) {
    FpPoly out{p, std::vector<std::int64_t>(n + 1, 0)};
    out.c[0] = 1;
    out.c[n] = p - 1;
    return out;
}

}  // namespace detail

inline void require_prime_modulus(std::int64_t p, const char* who) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument(std::string(who) + ": modulus must be prime");
}

/// Shortest linear recurrence over F_p generating two periods of s
/// (Berlekamp-Massey); the independent cross-check for the gcd route.
inline std::size_t berlekamp_massey(const BinarySequence& s, std::int64_t p) {
    require_prime_modulus(p, "berlekamp_massey");
    const std::size_t n = s.period();
    std::vector<std::int64_t> a(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) a[i] = s[i % n] % p;

    std::vector<std::int64_t> c{1}, b{1};
    std::size_t l = 0, m = 1;
    std::int64_t bd = 1;  // discrepancy attached to b
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = 0;
        for (std::size_t j = 0; j < c.size() && j <= i; ++j) d = (d + c[j] * a[i - j]) % p;
        if (d == 0) {
            ++m;
            continue;
        }
        const std::int64_t coef = d * detail::fp_inv(bd, p) % p;
        if (2 * l <= i) {
            std::vector<std::int64_t> saved = c;
            if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
            for (std::size_t j = 0; j < b.size(); ++j) {
                c[j + m] = (c[j + m] - coef * b[j]) % p;
                if (c[j + m] < 0) c[j + m] += p;
            }
            l = i + 1 - l;
            b = std::move(saved);
            bd = d;
            m = 1;
        } else {
            if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
            for (std::size_t j = 0; j < b.size(); ++j) {
                c[j + m] = (c[j + m] - coef * b[j]) % p;
                if (c[j + m] < 0) c[j + m] += p;
            }
            ++m;
        }
    }
    return l;
}

/// Linear complexity of s over F_p with both routes run and reconciled:
/// lc = N - deg gcd(P_s, 1 - x^N) over F_p, which must equal the
/// Berlekamp-Massey length.
struct LinearComplexityReport {
    std::int64_t field_char = 0;
    std::size_t lc = 0;
    std::size_t gcd_degree = 0;
    std::size_t bm_lc = 0;
};

inline LinearComplexityReport lc_prime_field(const BinarySequence& s, std::int64_t p) {
    require_prime_modulus(p, "lc_prime_field");
    const std::size_t n = s.period();
    const auto g = detail::fp_gcd(detail::fp_sequence_poly(s, p), detail::fp_one_minus_xn(n, p));
    LinearComplexityReport out;
    out.field_char = p;
    out.gcd_degree = g.zero() ? 0 : g.deg();  // gcd is nonzero: 1 - x^N != 0
    out.lc = n - out.gcd_degree;
    out.bm_lc = berlekamp_massey(s, p);
    if (out.lc != out.bm_lc)
        throw std::logic_error("lc_prime_field: gcd route and Berlekamp-Massey disagree");
    return out;
}

// ---------------------------------------------------------------------------
// Integer-side witness of the paper's ring identity
//   u(x) P_s(x) + v(x) (1 - x^N) = a g(x)
// with g the primitive integer form of the rational gcd.

namespace detail {

using QPoly = std::vector<Rat>;  // lowest degree first, trailing zeros trimmed

inline void q_trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    q_trim(c);
    return c;
}

inline QPoly q_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    q_trim(a);
    return a;
}

/// Division with remainder over Q: returns the quotient, leaves the
/// remainder in a. The top coefficient cancels exactly each round, so the
/// degree of a strictly decreases.
inline QPoly q_divmod(QPoly& a, const QPoly& b) {
    if (b.empty()) throw std::domain_error("q_divmod: division by zero polynomial");
    QPoly q;
    if (a.size() < b.size()) return q;
    q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size()) {
        const Rat coef = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= coef * b[i];
        q_trim(a);
        if (a.empty()) break;
    }
    q_trim(q);
    return q;
}

struct QXgcd {
    QPoly g, u, v;  // u*A + v*B = g, g monic (or zero)
};

inline QXgcd q_xgcd(QPoly a, QPoly b) {
    q_trim(a);
    q_trim(b);
    QPoly u0{Rat(1)}, v0{}, u1{}, v1{Rat(1)};
    while (!b.empty()) {
        QPoly rem = a;
        QPoly q = q_divmod(rem, b);
        // (a, b) <- (b, a - q b); carry the cofactors along
        QPoly u2 = q_sub(u0, q_mul(q, u1));
        QPoly v2 = q_sub(v0, q_mul(q, v1));
        a = std::move(b);
        b = std::move(rem);
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }
    QXgcd out;
    out.g = std::move(a);
    out.u = std::move(u0);
    out.v = std::move(v0);
    if (!out.g.empty() && out.g.back() != 1) {
        const Rat lead = out.g.back();
        for (auto& x : out.g) x /= lead;
        for (auto& x : out.u) x /= lead;
        for (auto& x : out.v) x /= lead;
    }
    return out;
}

inline Int lcm_int(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

inline Int denominator_lcm(const QPoly& a, Int acc) {
    for (const auto& x : a) acc = lcm_int(acc, denominator(x));
    return acc;
}

inline std::vector<Int> q_scale_to_int(const QPoly& a, const Int& scale) {
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rat t = a[i] * Rat(scale);
        if (denominator(t) != 1) throw std::logic_error("q_scale_to_int: scale did not clear denominators");
        out[i] = numerator(t);
    }
    return out;
}

inline Int content(const std::vector<Int>& a) {
    Int c = 0;
    for (const auto& x : a) c = gcd(c, x);
    return c;
}

}  // namespace detail

struct IntegerGcdWitness {
    std::vector<Int> g;  // primitive integer gcd, positive leading coefficient
    std::vector<Int> u;
    std::vector<Int> v;
    Int a;  // nonzero scale: u P_s + v (1 - x^N) = a g

    std::size_t g_degree() const { return g.size() - 1; }
};

/// Rational-field gcd of P_s and 1 - x^N with an extended-Euclid Bezout pair,
/// denominators cleared to land in Z[x]. The returned a is whatever the
/// clearing produces; it is a valid witness, not a minimal one.
inline IntegerGcdWitness integer_gcd_witness(const BinarySequence& s) {
    using namespace detail;
    const std::size_t n = s.period();
    QPoly ps(n);
    for (std::size_t i = 0; i < n; ++i) ps[i] = Rat(s[i]);
    q_trim(ps);
    QPoly one_minus_xn(n + 1);
    one_minus_xn[0] = Rat(1);
    one_minus_xn[n] = Rat(-1);

    QXgcd e = q_xgcd(ps, one_minus_xn);

    // primitive integer form of the monic gcd
    const Int lg = denominator_lcm(e.g, 1);
    std::vector<Int> g_int = q_scale_to_int(e.g, lg);
    const Int cont = content(g_int);
    for (auto& x : g_int) x /= cont;
    if (g_int.back() < 0)
        for (auto& x : g_int) x = -x;
    const Rat ghat_over_g(cont, lg);  // ghat = (cont/lg) * g

    // u' P + v' B = ghat  =>  (u'/alpha) P + (v'/alpha) B = g, alpha = cont/lg
    QPoly us = e.u, vs = e.v;
    for (auto& x : us) x /= ghat_over_g;
    for (auto& x : vs) x /= ghat_over_g;
    Int t = denominator_lcm(us, 1);
    t = denominator_lcm(vs, t);

    IntegerGcdWitness w;
    w.g = std::move(g_int);
    w.u = q_scale_to_int(us, t);
    w.v = q_scale_to_int(vs, t);
    w.a = t;

    // replay the identity exactly over the integers
    std::vector<Int> ps_int(n), b_int(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ps_int[i] = s[i];
    b_int[0] = 1;
    b_int[n] = -1;
    auto mul = [](const std::vector<Int>& x, const std::vector<Int>& y) {
        std::vector<Int> r;
        if (x.empty() || y.empty()) return r;
        r.assign(x.size() + y.size() - 1, Int(0));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    std::vector<Int> lhs = mul(w.u, ps_int);
    const std::vector<Int> rhs_v = mul(w.v, b_int);
    if (lhs.size() < rhs_v.size()) lhs.resize(rhs_v.size(), 0);
    for (std::size_t i = 0; i < rhs_v.size(); ++i) lhs[i] += rhs_v[i];
    while (!lhs.empty() && lhs.back() == 0) lhs.pop_back();
    std::vector<Int> ag(w.g.size());
    for (std::size_t i = 0; i < w.g.size(); ++i) ag[i] = w.a * w.g[i];
    if (lhs != ag) throw std::logic_error("integer_gcd_witness: identity replay failed");
    return w;
}

/// Theorem-style bound: LC_p(s) <= N - deg g, with equality whenever p does
/// not divide the witness scale a. Returns whether the combined statement
/// holds for this (s, p).
inline bool theorem5_check(const BinarySequence& s, std::int64_t p) {
    require_prime_modulus(p, "theorem5_check");
    const auto w = integer_gcd_witness(s);
    const std::size_t bound = s.period() - w.g_degree();
    const std::size_t lc = lc_prime_field(s, p).lc;
    if (lc > bound) return false;
    if (w.a % p != 0 && lc != bound) return false;
    return true;
}

/// Hypothesis filter for the ideal-sequence linear-complexity corollary.
/// Cases: support (N+1)/2 with p coprime to N+1 predicts LC_p = N;
/// support (N-1)/2 with p | N-1 (and p coprime to N+1) predicts N-1;
/// support (N-1)/2 with p coprime to N^2-1 predicts N.
inline bool ideal_lc_corollary_applies(std::size_t support_size, std::size_t n, std::int64_t p) {
    const bool divides_np1 = (n + 1) % static_cast<std::size_t>(p) == 0;
    if (support_size == (n + 1) / 2) return !divides_np1;
    if (support_size == (n - 1) / 2) return !divides_np1;  // both subcases need p coprime to N+1
    return false;
}

inline std::size_t ideal_lc_corollary_predicted(std::size_t support_size, std::size_t n, std::int64_t p) {
    const bool divides_nm1 = (n - 1) % static_cast<std::size_t>(p) == 0;
    if (support_size == (n + 1) / 2) return n;
    return divides_nm1 ? n - 1 : n;
}

/// Checks the corollary's prediction for a validated ideal-autocorrelation
/// sequence; throws if s is not ideal or the hypotheses do not apply.
inline bool ideal_lc_corollary_check(const BinarySequence& s, std::int64_t p) {
    require_prime_modulus(p, "ideal_lc_corollary_check");
    if (p == 2) throw std::invalid_argument("ideal_lc_corollary_check: p must be odd");
    if (autocorrelation_profile(s).classification != AcClass::ideal)
        throw std::invalid_argument("ideal_lc_corollary_check: sequence is not ideal");
    const std::size_t n = s.period();
    const std::size_t k = s.weight();
    if (!ideal_lc_corollary_applies(k, n, p))
        throw std::invalid_argument("ideal_lc_corollary_check: corollary hypotheses not satisfied");
    return lc_prime_field(s, p).lc == ideal_lc_corollary_predicted(k, n, p);
}

}  // namespace twoadic
