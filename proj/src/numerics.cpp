#include "hardy/numerics.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace hardy::numerics {

using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

Rational bernoulli(unsigned m) {
    static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= m) {
        // sum_{j=0}^{m} binom(m+1, j) B_j = 0
        unsigned k = static_cast<unsigned>(cache.size());
        Rational acc = 0;
        Rational binom = 1; // binom(k+1, j), starting at j = 0
        for (unsigned j = 0; j < k; ++j) {
            acc += binom * cache[j];
            binom *= Rational(k + 1 - j, j + 1);
        }
        cache.push_back(-acc / Rational(k + 1));
    }
    return cache[m];
}

Real log_gamma(const Real& x) {
    if (!(x > 0)) throw std::domain_error("log_gamma: argument must be positive");

    const unsigned p = precision_bits();
    Real out;
    {
        PrecisionGuard guard(p + 32);
        Real xw(x); // lift to working precision, exact
        xw.precision(Real::default_precision());

        // Promote the argument until the Stirling series reaches 2^-(P+40):
        // the minimal term behaves like e^(-2*pi*x0).
        const double x0_target = 0.1103 * (p + 48) + 4.0;
        Real x0 = xw;
        Real shift_log = 0; // sum of ln(x+j) over promoted arguments
        while (x0 < x0_target) {
            shift_log += log(x0);
            x0 += 1;
        }

        const Real pi = boost::math::constants::pi<Real>();
        Real result = (x0 - Real(1) / 2) * log(x0) - x0 + log(2 * pi) / 2;

        const Real cutoff = pow2(-static_cast<long>(p) - 40) * (1 + abs(result));
        const Real x0sq = x0 * x0;
        Real xpow = x0; // x0^(2k-1)
        Real prev_term = 0;
        for (unsigned k = 1; k < 10 * p; ++k) {
            Real term = to_real(bernoulli(2 * k) / Rational(2 * k * (2 * k - 1))) / xpow;
            if (k > 1 && abs(term) > abs(prev_term)) break; // asymptotic floor
            result += term;
            if (abs(term) < cutoff) break;
            prev_term = term;
            xpow *= x0sq;
        }

        out = result - shift_log;
    }
    return round_to_current(out);
}

Real beta(const Real& x, const Real& y) {
    if (!(x > 0) || !(y > 0)) throw std::domain_error("beta: arguments must be positive");
    // Symmetric computation path: log_gamma(x) + log_gamma(y) is commutative.
    return exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

Real elliptic_k(const Real& t) {
    if (t < 0 || t >= 1) throw std::domain_error("elliptic_k: need 0 <= t < 1");
    if (1 - t < pow2(-static_cast<long>(precision_bits() / 2)))
        throw std::domain_error("elliptic_k: modulus too close to 1");

    const unsigned p = precision_bits();
    Real out;
    {
        PrecisionGuard guard(p + 32);
        // lift the argument to working precision (exact zero padding);
        // otherwise expression results inherit the caller's precision
        Real tw(t);
        tw.precision(Real::default_precision());
        Real a = 1;
        Real b = sqrt((1 - tw) * (1 + tw));
        const Real tol = pow2(-static_cast<long>(p) - 24);
        for (unsigned i = 0; i < 10 * p; ++i) {
            if (abs(a - b) <= tol * a) break;
            Real am = (a + b) / 2;
            b = sqrt(a * b);
            a = am;
        }
        const Real pi = boost::math::constants::pi<Real>();
        out = pi / (2 * a);
    }
    return round_to_current(out);
}

Real mu(const Real& t) {
    if (!(t > 0) || !(t < 1)) throw std::domain_error("mu: need 0 < t < 1");
    const Real comp = sqrt((1 - t) * (1 + t));
    return real_pi() * elliptic_k(comp) / (2 * elliptic_k(t));
}

Real solve_decreasing(const std::function<Real(const Real&)>& f,
                      Real lo, Real hi, const Real& target) {
    const unsigned p = precision_bits();
    if (!(f(lo) >= target && f(hi) <= target))
        throw std::runtime_error("solve_decreasing: bracket does not enclose target");
    const Real width_tol = pow2(-static_cast<long>(p) - 4) * (abs(lo) + abs(hi) + 1);
    unsigned iters = 0;
    while (hi - lo > width_tol) {
        if (++iters > 10 * p)
            throw std::runtime_error("solve_decreasing: iteration cap exceeded");
        Real mid = (lo + hi) / 2;
        if (f(mid) >= target) lo = mid;
        else hi = mid;
    }
    return (lo + hi) / 2;
}

Real solve_increasing(const std::function<Real(const Real&)>& f,
                      Real lo, Real hi, const Real& target) {
    return solve_decreasing([&f](const Real& t) { return -f(t); },
                            std::move(lo), std::move(hi), -target);
}

Real invert_mu(const Real& target) {
    if (!(target > 0)) throw std::domain_error("invert_mu: target must be positive");
    // mu maps this bracket onto roughly [0.23, 20.5]; endpoints stay safely
    // away from the near-1 rejection region of elliptic_k.
    Real lo = pow2(-28);
    Real hi = 1 - pow2(-28);
    return solve_decreasing([](const Real& t) { return mu(t); }, lo, hi, target);
}

Rational gen_binomial(const Rational& a, unsigned k) {
    Rational r = 1;
    for (unsigned j = 0; j < k; ++j) {
        r *= (a - Rational(j)) / Rational(j + 1);
    }
    return r;
}

Rational catalan(unsigned k) {
    // binom(2k, k) / (k+1), exact in integers
    Rational r = gen_binomial(Rational(2 * k), k);
    return r / Rational(k + 1);
}

} // namespace hardy::numerics
