#pragma once

#include "hardy/real.hpp"

#include <functional>

namespace hardy::numerics {

// ln Gamma(x) for x > 0. Stirling series with argument promotion; relative
// error bounded by 2^(-P+8) at the run precision P (computed internally with
// 32 guard bits).
Real log_gamma(const Real& x);

// Beta(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), x, y > 0.
Real beta(const Real& x, const Real& y);

// Complete elliptic integral K(1,t) = \int_0^1 dx / sqrt((1-x^2)(1-t^2 x^2))
// for 0 <= t < 1, via the arithmetic-geometric mean. Arguments within
// 2^(-P/2) of 1 are rejected.
Real elliptic_k(const Real& t);

// mu(t) = pi K(1, sqrt(1-t^2)) / (2 K(1,t)) for 0 < t < 1. Strictly
// decreasing from +inf (t -> 0) to 0 (t -> 1).
Real mu(const Real& t);

// Solves mu(t) = target for t in (0,1), target > 0.
// |mu(t) - target| <= 2^(-P/2) guaranteed; in practice the bracket is
// narrowed to ~full precision.
Real invert_mu(const Real& target);

// Solves f(t) = target for a strictly decreasing continuous f on [lo, hi].
// Bisection; iteration cap 10*P, numeric error on bracket failure or cap.
Real solve_decreasing(const std::function<Real(const Real&)>& f,
                      Real lo, Real hi, const Real& target);

// Solves f(t) = target for a strictly increasing f on [lo, hi].
Real solve_increasing(const std::function<Real(const Real&)>& f,
                      Real lo, Real hi, const Real& target);

// Generalized binomial coefficient binom(a, k) = a(a-1)...(a-k+1)/k!, exact.
Rational gen_binomial(const Rational& a, unsigned k);

// k-th Catalan number binom(2k,k)/(k+1), exact (integer-valued).
Rational catalan(unsigned k);

// Bernoulli number B_m (B_1 = -1/2 convention), exact. Cached.
Rational bernoulli(unsigned m);

} // namespace hardy::numerics
