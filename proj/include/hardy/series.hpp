#pragma once

#include "hardy/real.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hardy::series {

// Formal power series truncated at a fixed order N: coeffs[n] holds the
// coefficient of z^n, size is always N+1. The scalar backend T is Rational
// (exact) or Real (run precision); mixing backends is a compile error.
template <class T>
struct TruncatedSeries {
    std::vector<T> coeffs;

    TruncatedSeries() = default;
    explicit TruncatedSeries(int order) : coeffs(static_cast<size_t>(order) + 1, T(0)) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }
    explicit TruncatedSeries(std::vector<T> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw std::invalid_argument("series needs at least the constant term");
    }

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const T& operator[](int n) const { return coeffs[static_cast<size_t>(n)]; }
    T& operator[](int n) { return coeffs[static_cast<size_t>(n)]; }

    // z as a series of the given order
    static TruncatedSeries identity(int order) {
        TruncatedSeries s(order);
        if (order >= 1) s[1] = T(1);
        return s;
    }
};

template <class T>
TruncatedSeries<T> add(const TruncatedSeries<T>& f, const TruncatedSeries<T>& g) {
    int n = std::min(f.order(), g.order());
    TruncatedSeries<T> r(n);
    for (int i = 0; i <= n; ++i) r[i] = f[i] + g[i];
    return r;
}

template <class T>
TruncatedSeries<T> scale(const TruncatedSeries<T>& f, const T& c) {
    TruncatedSeries<T> r = f;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

// Full convolution c_n = sum_j a_j b_{n-j} through order min(N_f, N_g).
template <class T>
TruncatedSeries<T> cauchy_product(const TruncatedSeries<T>& f, const TruncatedSeries<T>& g) {
    int n = std::min(f.order(), g.order());
    TruncatedSeries<T> r(n);
    for (int i = 0; i <= n; ++i) {
        T acc(0);
        for (int j = 0; j <= i; ++j) acc += f[j] * g[i - j];
        r[i] = acc;
    }
    return r;
}

namespace detail {
inline bool constant_term_is_zero(const Rational& c0) { return c0 == 0; }
inline bool constant_term_is_zero(const Real& c0) {
    return boost::multiprecision::abs(c0) <= pow2(-static_cast<long>(precision_bits()) + 8);
}
} // namespace detail

// Coefficients of outer(inner(z)) through order min(N_outer, N_inner), by
// Horner over truncated series. Requires inner constant term zero; the
// result is then exact through the truncation order. O(N^3) scalar ops.
// An explicit result_order above outer.order() is allowed when the outer
// series is a truncation of an entire function whose dropped terms are
// negligible; coefficients past outer.order() are then approximate.
template <class T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner,
                           int result_order = -1) {
    if (!detail::constant_term_is_zero(inner[0]))
        throw std::invalid_argument("compose: inner series must have zero constant term");
    int n = result_order >= 0 ? std::min(result_order, inner.order())
                              : std::min(outer.order(), inner.order());
    TruncatedSeries<T> r(n);
    r[0] = outer[outer.order()];
    for (int k = outer.order() - 1; k >= 0; --k) {
        r = cauchy_product(r, inner);
        r[0] += outer[k];
    }
    return r;
}

// Series of f(z^k), coefficients relocated to indices k*n, same order as f.
template <class T>
TruncatedSeries<T> substitute_power(const TruncatedSeries<T>& f, int k) {
    if (k < 1) throw std::invalid_argument("substitute_power: k must be >= 1");
    TruncatedSeries<T> r(f.order());
    for (int n = 0; static_cast<long>(k) * n <= f.order(); ++n) r[k * n] = f[n];
    return r;
}

// Term-by-term pFq coefficients at unit weight: t_0 = 1,
// t_{n+1} = t_n * prod(a_i + n) / prod(b_j + n) / (n+1), exact rationals.
TruncatedSeries<Rational> hypergeometric_terms(const std::vector<Rational>& a_list,
                                               const std::vector<Rational>& b_list,
                                               int order);

struct HardySum {
    Real partial;             // sum over n >= 1 of |a_n|^2
    std::vector<Real> terms;  // terms[n] = |a_n|^2 for n = 0..N (n = 0 excluded from partial)
};

// Sum of squared coefficient moduli over n >= 1. Rational backend sums
// exactly, then converts.
HardySum hardy_partial_sum(const TruncatedSeries<Real>& f);
HardySum hardy_partial_sum(const TruncatedSeries<Rational>& f);

struct TailEstimate {
    Real fitted_exponent;  // s in t_n ~ C n^-s on the window
    Real tail_estimate;    // point estimate of the remainder past the last term
    Real tail_bound;       // safety bound: max over fit variants plus margin; +inf if s <= 1
    size_t window_lo = 0;  // absolute n range used for the fit
    size_t window_hi = 0;
    bool diverges = false; // s <= 1
};

// Thrown when the fit window violates the positivity/monotonicity
// precondition; the caller should increase N.
struct FitRejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fits t_n ~ C n^-s by least squares in log-log coordinates over the last
// quarter of the terms (at least 16 points) and integrates the fitted law
// past the last term. terms[i] corresponds to n = first_n + i; terms must be
// positive and monotone decreasing on the window.
TailEstimate fit_tail(const std::vector<Real>& terms, size_t first_n);
TailEstimate fit_tail(const std::vector<Real>& terms, size_t first_n,
                      size_t window_lo, size_t window_hi);

} // namespace hardy::series
