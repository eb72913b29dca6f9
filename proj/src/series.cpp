#include "hardy/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace hardy::series {

TruncatedSeries<Rational> hypergeometric_terms(const std::vector<Rational>& a_list,
                                               const std::vector<Rational>& b_list,
                                               int order) {
    for (const auto& b : b_list) {
        if (denominator(b) == 1 && b <= 0)
            throw std::domain_error("hypergeometric_terms: nonpositive integer lower parameter");
    }
    TruncatedSeries<Rational> r(order);
    Rational t = 1;
    r[0] = t;
    for (int n = 0; n < order; ++n) {
        for (const auto& a : a_list) t *= a + Rational(n);
        for (const auto& b : b_list) t /= b + Rational(n);
        t /= Rational(n + 1);
        r[n + 1] = t;
    }
    return r;
}

HardySum hardy_partial_sum(const TruncatedSeries<Real>& f) {
    HardySum h;
    h.terms.reserve(f.coeffs.size());
    h.partial = 0;
    for (int n = 0; n <= f.order(); ++n) {
        Real sq = f[n] * f[n];
        if (n >= 1) h.partial += sq;
        h.terms.push_back(std::move(sq));
    }
    return h;
}

HardySum hardy_partial_sum(const TruncatedSeries<Rational>& f) {
    HardySum h;
    h.terms.reserve(f.coeffs.size());
    Rational exact = 0;
    for (int n = 0; n <= f.order(); ++n) {
        Rational sq = f[n] * f[n];
        if (n >= 1) exact += sq;
        h.terms.push_back(to_real(sq));
    }
    h.partial = to_real(exact);
    return h;
}

namespace {

// log(t) as double, via mpfr to survive values outside double range.
double log_as_double(const Real& t) {
    return static_cast<double>(boost::multiprecision::log(t));
}

struct PowerFit {
    double logC = 0, s = 0, b = 0; // log t = logC - s log n + b / n
    bool ok = false;
};

PowerFit least_squares(const std::vector<double>& logn, const std::vector<double>& logt,
                       const std::vector<double>& invn, bool with_curvature) {
    // normal equations for up to 3 regressors: [1, -log n, 1/n]
    size_t m = logn.size();
    size_t k = with_curvature ? 3 : 2;
    std::array<std::array<double, 4>, 3> a{}; // augmented
    for (size_t i = 0; i < m; ++i) {
        double row[3] = {1.0, -logn[i], invn[i]};
        for (size_t r = 0; r < k; ++r) {
            for (size_t c = 0; c < k; ++c) a[r][c] += row[r] * row[c];
            a[r][3] += row[r] * logt[i];
        }
    }
    // Gaussian elimination with partial pivoting
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < k; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        if (std::fabs(a[col][col]) < 1e-300) return {};
        for (size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            for (size_t c = col; c <= 3; ++c) a[r][c] -= f * a[col][c];
        }
    }
    PowerFit fit;
    fit.logC = a[0][3] / a[0][0];
    fit.s = a[1][3] / a[1][1];
    fit.b = with_curvature ? a[2][3] / a[2][2] : 0.0;
    fit.ok = std::isfinite(fit.logC) && std::isfinite(fit.s) && std::isfinite(fit.b);
    return fit;
}

// Remainder of sum_{n > N} C n^-s (1 + b/n), Euler-Maclaurin corrected,
// evaluated in log space. Returns +inf flag via the bool.
std::pair<Real, bool> integrate_tail(const PowerFit& fit, double N) {
    if (fit.s <= 1.0) return {Real(0), true};
    double bracket = N / (fit.s - 1.0) - 0.5 + fit.b / fit.s;
    if (bracket <= 0) bracket = N / (fit.s - 1.0);
    double log_tail = fit.logC - fit.s * std::log(N) + std::log(bracket);
    // exp via mpfr so extreme exponents do not overflow double
    Real lt(log_tail);
    return {boost::multiprecision::exp(lt), false};
}

} // namespace

TailEstimate fit_tail(const std::vector<Real>& terms, size_t first_n,
                      size_t window_lo, size_t window_hi) {
    if (window_hi <= window_lo || window_hi - window_lo < 8)
        throw std::invalid_argument("fit_tail: window must contain at least 8 points");
    if (window_lo < first_n || window_hi > first_n + terms.size())
        throw std::invalid_argument("fit_tail: window out of range");

    std::vector<double> logn, logt, invn;
    Real prev;
    for (size_t n = window_lo; n < window_hi; ++n) {
        const Real& t = terms[n - first_n];
        if (!(t > 0)) throw FitRejected("fit_tail: nonpositive term in window");
        if (n > window_lo && t > prev) throw FitRejected("fit_tail: window not monotone decreasing");
        prev = t;
        logn.push_back(std::log(static_cast<double>(n)));
        logt.push_back(log_as_double(t));
        invn.push_back(1.0 / static_cast<double>(n));
    }

    PowerFit plain = least_squares(logn, logt, invn, false);
    PowerFit curved = least_squares(logn, logt, invn, true);
    if (!plain.ok) throw FitRejected("fit_tail: singular fit");

    // The curvature term models the O(1/n) correction of a power law. When
    // the data is far from a power law (e.g. geometric decay) the curved fit
    // extrapolates wildly; fall back to the plain fit there.
    PowerFit chosen = plain;
    if (curved.ok && std::fabs(curved.b) <= 100.0 && std::fabs(curved.s - plain.s) <= 2.0)
        chosen = curved;

    TailEstimate est;
    est.window_lo = window_lo;
    est.window_hi = window_hi;
    est.fitted_exponent = Real(chosen.s);
    double last_n = static_cast<double>(first_n + terms.size() - 1);
    auto [tail, div] = integrate_tail(chosen, last_n);
    est.diverges = div;
    if (div) {
        est.tail_estimate = Real(std::numeric_limits<double>::infinity());
        est.tail_bound = est.tail_estimate;
        return est;
    }
    est.tail_estimate = tail;
    // The bound takes the larger of the two fit variants plus a one-percent
    // margin for extrapolation model error.
    est.tail_bound = tail;
    auto [tail2, div2] = integrate_tail(plain, last_n);
    if (!div2 && tail2 > est.tail_bound) est.tail_bound = tail2;
    est.tail_bound *= Real(101) / 100;
    return est;
}

TailEstimate fit_tail(const std::vector<Real>& terms, size_t first_n) {
    size_t n = terms.size();
    size_t count = std::max<size_t>(n / 4, std::min<size_t>(16, n));
    size_t lo = first_n + n - count;
    if (lo < first_n + 1 && first_n == 0) lo = 1; // log n needs n >= 1
    return fit_tail(terms, first_n, lo, first_n + n);
}

} // namespace hardy::series
