#pragma once

#include "twoadic/bigint.hpp"
#include "twoadic/mpfloat.hpp"
#include "twoadic/sequence.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twoadic {

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Fraction-free (Bareiss) elimination on a square integer matrix, row
/// pivoting on the first nonzero entry. Every division is exact. Returns the
/// signed determinant.
inline Int bareiss_det(std::vector<Int> m, std::size_t n) {
    if (n == 0) throw std::invalid_argument("bareiss_det: empty matrix");
    auto at = [&](std::size_t i, std::size_t j) -> Int& { return m[i * n + j]; };
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t pivot_row = k + 1;
            while (pivot_row < n && at(pivot_row, k) == 0) ++pivot_row;
            if (pivot_row == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(pivot_row, j));
            sign = -sign;
        }
        const Int& pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = at(i, j) * pivot - at(i, k) * at(k, j);
                t /= prev;  // exact by the Bareiss identity
                at(i, j) = std::move(t);
            }
            at(i, k) = 0;
        }
        prev = pivot;
    }
    return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

inline std::vector<Int> circulant_matrix(const BinarySequence& s) {
    const std::size_t n = s.period();
    std::vector<Int> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = s[(i + n - j) % n];
    return m;
}

}  // namespace detail

/// Exact signed determinant of the circulant matrix a_{i,j} = s_{(i-j) mod N}
/// by fraction-free elimination; O(N^3) big-integer work, so the period is
/// capped (default 512).
inline Int circulant_det_exact(const BinarySequence& s, std::size_t bound = 512) {
    const std::size_t n = s.period();
    if (n > bound) throw std::invalid_argument("circulant_det_exact: period exceeds the configured bound");
    return detail::bareiss_det(detail::circulant_matrix(s), n);
}

/// Spectral-route determinant: rounded value of prod_j P_s(w_N^j) together
/// with a rigorous bound on |computed - true|. The rounded value is only
/// trustworthy when error_bound < 0.5.
struct SpectralDet {
    Int rounded;
    double error_bound = 0;

    bool ok() const { return error_bound < 0.5; }
};

namespace detail {

template <unsigned Bits>
SpectralDet spectral_det_impl(const BinarySequence& s) {
    using F = BigFloat<Bits>;
    const std::size_t n = s.period();
    const auto support = s.support();
    const std::size_t k = support.size();

    const F eps = ldexp(F(1), 1 - static_cast<int>(Bits));
    const auto roots = unit_roots<F>(n);
    // component error of table entry t, in units of eps
    auto table_err = [&](std::size_t t) { return F(ROOT_ERR0 + ROOT_ERR_PER_MUL * static_cast<double>(t)); };

    Complex<F> value{F(1), F(0)};
    F err = 0;  // upper bound on |value - true partial product|, 1-norm sense
    using std::abs;
    for (std::size_t j = 0; j < n; ++j) {
        Complex<F> factor{F(0), F(0)};
        F factor_err = 0;
        for (const std::size_t i : support) {
            const std::size_t idx = (i % n) * (j % n) % n;
            factor += roots[idx];
            factor_err += table_err(idx) * eps;
        }
        // accumulation rounding: k adds with partial sums of modulus <= k
        factor_err += F(2) * static_cast<double>(k * k) * eps;

        const F value_mag = value.norm1();
        const F factor_mag = factor.norm1();
        err = err * (factor_mag + factor_err) + value_mag * factor_err + F(8) * eps * value_mag * factor_mag;
        value = value * factor;
    }

    const F rounded_f = round(value.re);
    SpectralDet out;
    out.rounded = rounded_f.convert_to<Int>();
    const double eb = (err + abs(value.im)).template convert_to<double>();
    out.error_bound = eb > 0 ? eb : 1e-300;  // keep the bound honest after double underflow
    return out;
}

}  // namespace detail

inline SpectralDet circulant_det_spectral(const BinarySequence& s) {
    const std::size_t n = s.period();
    if (n <= 64) return detail::spectral_det_impl<576>(s);
    if (n <= 128) return detail::spectral_det_impl<1344>(s);
    if (n <= 256) return detail::spectral_det_impl<2624>(s);
    if (n <= 512) return detail::spectral_det_impl<5440>(s);
    throw PrecisionError("circulant_det_spectral: no precision tier covers this period");
}

/// |det(A)| predicted for an ideal 2-level autocorrelation sequence with
/// support size (N+1)/2: (N+1)/2 * ((N+1)/4)^((N-1)/2). Requires N = 3 mod 4.
inline Int det_closed_form_ideal(std::size_t n) {
    if (n % 4 != 3) throw std::invalid_argument("det_closed_form_ideal: N must be 3 mod 4");
    return Int((n + 1) / 2) * ipow(Int((n + 1) / 4), (n - 1) / 2);
}

/// |det(A)| predicted for a Legendre sequence with p = 1 mod 4:
/// (p-1)/2 * ((p-1)/4)^((p-1)/2).
inline Int det_closed_form_legendre(std::int64_t p) {
    if (p < 5 || p % 4 != 1) throw std::invalid_argument("det_closed_form_legendre: p must be 1 mod 4");
    return Int((p - 1) / 2) * ipow(Int((p - 1) / 4), static_cast<std::size_t>((p - 1) / 2));
}

/// Determinant of the n x n matrix with x on the diagonal and y elsewhere:
/// (x + (n-1)y) (x - y)^(n-1).
inline Int gram_det(const Int& x, const Int& y, std::size_t n) {
    if (n < 1) throw std::invalid_argument("gram_det: n must be >= 1");
    return (x + Int(n - 1) * y) * ipow(x - y, n - 1);
}

/// Integer Bezout witness u(x) P_s(x) + v(x) (1 - x^N) = det(A), with
/// deg u <= N-1 and deg v <= N-2, from the exact solve of the structured
/// (2N-1)-variable coefficient-matching system.
struct BezoutWitness {
    std::vector<Int> u;  // u_0..u_{N-1}
    std::vector<Int> v;  // v_0..v_{N-2}; empty when N = 1
    Int det_value;
};

namespace detail {

/// Solves M z = rhs exactly for a nonsingular integer matrix: Bareiss forward
/// elimination on the augmented matrix, then rational back-substitution.
inline std::vector<Rat> solve_exact(std::vector<Int> m, std::vector<Int> rhs, std::size_t n) {
    const std::size_t cols = n + 1;
    std::vector<Int> a(n * cols);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * cols + j] = std::move(m[i * n + j]);
        a[i * cols + n] = std::move(rhs[i]);
    }
    auto at = [&](std::size_t i, std::size_t j) -> Int& { return a[i * cols + j]; };

    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t pivot_row = k + 1;
            while (pivot_row < n && at(pivot_row, k) == 0) ++pivot_row;
            if (pivot_row == n) throw std::domain_error("solve_exact: singular matrix");
            for (std::size_t j = k; j < cols; ++j) std::swap(at(k, j), at(pivot_row, j));
        }
        const Int& pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                Int t = at(i, j) * pivot - at(i, k) * at(k, j);
                t /= prev;
                at(i, j) = std::move(t);
            }
            at(i, k) = 0;
        }
        prev = pivot;
    }
    if (at(n - 1, n - 1) == 0) throw std::domain_error("solve_exact: singular matrix");

    std::vector<Rat> z(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat acc(at(i, n));
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rat(at(i, j)) * z[j];
        z[i] = acc / Rat(at(i, i));
    }
    return z;
}

inline std::vector<Int> poly_mul_int(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

inline Int poly_eval_int(const std::vector<Int>& a, const Int& x) {
    Int acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

}  // namespace detail

inline BezoutWitness bezout_witness(const BinarySequence& s, const Int& det_a) {
    const std::size_t n = s.period();
    if (det_a == 0) throw std::domain_error("bezout_witness: no witness exists when det(A) = 0");

    // Coefficient-matching system for u(x) P_s(x) + v(x) (1 - x^N) = det(A):
    // unknowns u_0..u_{N-1}, v_0..v_{N-2}; row t matches the coefficient of
    // x^t. Rows 0..N-2 carry +v_t, row N-1 has u-terms only, rows N..2N-2
    // carry -v_{t-N}.
    const std::size_t dim = 2 * n - 1;
    std::vector<Int> m(dim * dim, 0);
    std::vector<Int> rhs(dim, 0);
    rhs[0] = det_a;
    for (std::size_t t = 0; t < dim; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            if (t < i || t - i >= n) continue;
            m[t * dim + i] = s[t - i];
        }
        if (t < n - 1) m[t * dim + n + t] = 1;
        if (t >= n) m[t * dim + n + (t - n)] = -1;
    }

    const auto z = detail::solve_exact(std::move(m), std::move(rhs), dim);
    BezoutWitness w;
    w.det_value = det_a;
    w.u.resize(n);
    w.v.resize(n - 1);
    for (std::size_t i = 0; i < dim; ++i) {
        if (denominator(z[i]) != 1)
            throw std::logic_error("bezout_witness: solution is not integral (invariant violation)");
        Int value = numerator(z[i]);
        if (i < n)
            w.u[i] = std::move(value);
        else
            w.v[i - n] = std::move(value);
    }

    // replay Eq: u * P_s + v * (1 - x^N) must collapse to the constant det(A)
    std::vector<Int> ps(n);
    for (std::size_t i = 0; i < n; ++i) ps[i] = s[i];
    std::vector<Int> identity = detail::poly_mul_int(w.u, ps);
    std::vector<Int> one_minus_xn(n + 1, 0);
    one_minus_xn[0] = 1;
    one_minus_xn[n] = -1;
    const std::vector<Int> v_term = detail::poly_mul_int(w.v, one_minus_xn);
    if (identity.size() < 2 * n) identity.resize(2 * n, 0);
    for (std::size_t i = 0; i < v_term.size(); ++i) identity[i] += v_term[i];
    for (std::size_t i = 0; i < identity.size(); ++i) {
        const Int expect = i == 0 ? det_a : Int(0);
        if (identity[i] != expect)
            throw std::logic_error("bezout_witness: polynomial identity replay failed");
    }
    // and the x = 2 specialization
    const Int m2 = s.poly_eval_2();
    if (detail::poly_eval_int(w.u, 2) * m2 + detail::poly_eval_int(w.v, 2) * (Int(1) - pow2(n)) != det_a)
        throw std::logic_error("bezout_witness: x = 2 identity failed");
    return w;
}

inline BezoutWitness bezout_witness(const BinarySequence& s, std::size_t det_bound = 512) {
    return bezout_witness(s, circulant_det_exact(s, det_bound));
}

}  // namespace twoadic
