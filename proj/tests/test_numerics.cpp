#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardy/numerics.hpp"
#include "oracles.hpp"

using namespace hardy;
using namespace testutil;
using boost::multiprecision::abs;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

static const int g_init = [] { set_precision_bits(128); return 0; }();

TEST_CASE("bernoulli numbers") {
    CHECK(numerics::bernoulli(0) == 1);
    CHECK(numerics::bernoulli(1) == Rational(-1, 2));
    CHECK(numerics::bernoulli(2) == Rational(1, 6));
    CHECK(numerics::bernoulli(4) == Rational(-1, 30));
    CHECK(numerics::bernoulli(6) == Rational(1, 42));
    CHECK(numerics::bernoulli(8) == Rational(-1, 30));
    CHECK(numerics::bernoulli(10) == Rational(5, 66));
    CHECK(numerics::bernoulli(12) == Rational(-691, 2730));
    for (unsigned m = 3; m < 40; m += 2) CHECK(numerics::bernoulli(m) == 0);
}

TEST_CASE("generalized binomial") {
    CHECK(numerics::gen_binomial(Rational(7), 3) == 35);
    CHECK(numerics::gen_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(numerics::gen_binomial(Rational(-2, 3), 3) == Rational(-40, 81));
    for (Rational a : {Rational(2, 3), Rational(1, 2), Rational(-3, 4)}) {
        CHECK(numerics::gen_binomial(a, 0) == 1);
        // Pascal recurrence holds for arbitrary upper argument
        for (unsigned k = 1; k <= 50; ++k) {
            Rational lhs = numerics::gen_binomial(a, k);
            Rational rhs = numerics::gen_binomial(a - 1, k - 1) + numerics::gen_binomial(a - 1, k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("catalan numbers") {
    const long expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (unsigned k = 0; k <= 10; ++k) CHECK(numerics::catalan(k) == expect[k]);
    CHECK(numerics::catalan(15) == 9694845);
    // convolution recurrence C_{k+1} = sum_j C_j C_{k-j}
    for (unsigned k = 0; k <= 20; ++k) {
        Rational acc = 0;
        for (unsigned j = 0; j <= k; ++j) acc += numerics::catalan(j) * numerics::catalan(k - j);
        CHECK(acc == numerics::catalan(k + 1));
    }
}

TEST_CASE("log_gamma against frozen references") {
    CHECK(rel_err(numerics::log_gamma(Real(1) / 3), ref_lgamma_third()) < 1e-33);
    CHECK(rel_err(numerics::log_gamma(Real(1) / 2), ref_lgamma_half()) < 1e-33);
    CHECK(rel_err(numerics::log_gamma(Real(5)), log(Real(24))) < 1e-33);
    CHECK(abs(numerics::log_gamma(Real(1))) < 1e-35);
    CHECK(abs(numerics::log_gamma(Real(2))) < 1e-35);
}

TEST_CASE("log_gamma functional equation") {
    for (Real x : {Real(3) / 10, Real(7) / 10, Real(13) / 10, Real(21) / 4}) {
        Real lhs = numerics::log_gamma(x + 1);
        Real rhs = numerics::log_gamma(x) + log(x);
        CHECK(abs(lhs - rhs) < 1e-33 * (1 + abs(lhs)));
    }
}

TEST_CASE("log_gamma against tanh-sinh quadrature") {
    Real gq = gamma_third();
    CHECK(rel_err(gq, ref_gamma_third()) < 1e-30);
    CHECK(rel_err(boost::multiprecision::exp(numerics::log_gamma(Real(1) / 3)), gq) < 1e-30);
}

TEST_CASE("log_gamma domain") {
    CHECK_THROWS_AS(numerics::log_gamma(Real(0)), std::domain_error);
    CHECK_THROWS_AS(numerics::log_gamma(Real(-2)), std::domain_error);
}

TEST_CASE("beta values and symmetry") {
    Real third = Real(1) / 3, quarter = Real(1) / 4, half = Real(1) / 2;
    CHECK(rel_err(numerics::beta(third, third), ref_beta_third()) < 1e-33);
    CHECK(rel_err(numerics::beta(quarter, half), ref_beta_quarter_half()) < 1e-33);
    CHECK(numerics::beta(quarter, half) == numerics::beta(half, quarter));
    // Beta(1/3,1/3) = sqrt(3) Gamma(1/3)^3 / (2 pi), via the reflection formula
    Real g3 = gamma_third();
    Real viaq = sqrt(Real(3)) * g3 * g3 * g3 / (2 * real_pi());
    CHECK(rel_err(numerics::beta(third, third), viaq) < 1e-29);
    CHECK_THROWS_AS(numerics::beta(Real(0), Real(1)), std::domain_error);
}

TEST_CASE("elliptic_k against frozen references and quadrature") {
    CHECK(rel_err(numerics::elliptic_k(Real(0)), real_pi() / 2) < 1e-36);
    CHECK(rel_err(numerics::elliptic_k(1 / sqrt(Real(2))), ref_k_invsqrt2()) < 1e-33);
    CHECK(rel_err(numerics::elliptic_k(Real(1) / 2), ref_k_half()) < 1e-33);
    for (Real t : {Real(3) / 10, Real(9) / 10}) {
        CHECK(rel_err(numerics::elliptic_k(t), elliptic_k_integral(t)) < 1e-29);
    }
    CHECK_THROWS_AS(numerics::elliptic_k(Real(1)), std::domain_error);
    CHECK_THROWS_AS(numerics::elliptic_k(Real(-1) / 2), std::domain_error);
    CHECK_THROWS_AS(numerics::elliptic_k(1 - pow2(-100)), std::domain_error);
}

TEST_CASE("mu values") {
    // mu(1/sqrt2) = pi/2 by symmetry of the complementary modulus
    CHECK(rel_err(numerics::mu(1 / sqrt(Real(2))), real_pi() / 2) < 1e-33);
    CHECK(rel_err(numerics::mu(Real(9) / 10), ref_mu_09()) < 1e-33);
    CHECK_THROWS_AS(numerics::mu(Real(0)), std::domain_error);
    CHECK_THROWS_AS(numerics::mu(Real(1)), std::domain_error);
}

TEST_CASE("mu functional equation") {
    // mu(t) * mu(sqrt(1-t^2)) = pi^2/4
    for (Real t : {Real(37) / 100, Real(6) / 10, Real(95) / 100}) {
        Real comp = sqrt((1 - t) * (1 + t));
        Real prod = numerics::mu(t) * numerics::mu(comp);
        CHECK(rel_err(prod, real_pi() * real_pi() / 4) < 1e-33);
    }
}

TEST_CASE("invert_mu round trips") {
    for (Real t : {Real(3) / 10, Real(6) / 10, Real(9) / 10}) {
        Real back = numerics::invert_mu(numerics::mu(t));
        CHECK(abs(back - t) < 1e-33);
    }
    CHECK(abs(numerics::invert_mu(Real(1)) - ref_mu_inv_1()) < 1e-33);
    CHECK_THROWS_AS(numerics::invert_mu(Real(0)), std::domain_error);
}

TEST_CASE("bisection solvers") {
    auto sq = [](const Real& t) { return t * t; };
    Real r = numerics::solve_increasing(sq, Real(0), Real(3), Real(2));
    CHECK(abs(r - sqrt(Real(2))) < 1e-35);
    auto inv = [](const Real& t) { return 1 / t; };
    Real s = numerics::solve_decreasing(inv, Real(1) / 10, Real(10), Real(3));
    CHECK(abs(s - Real(1) / 3) < 1e-35);
    // bracket that does not enclose the target
    CHECK_THROWS_AS(numerics::solve_increasing(sq, Real(0), Real(1), Real(2)),
                    std::runtime_error);
}

TEST_CASE("results sharpen with the run precision") {
    set_precision_bits(256);
    CHECK(rel_err(numerics::log_gamma(Real(1) / 3), ref_lgamma_third()) < 1e-44);
    CHECK(rel_err(numerics::elliptic_k(Real(1) / 2), ref_k_half()) < 1e-44);
    set_precision_bits(128);
    // PrecisionGuard restores both the global and the mpfr default
    {
        PrecisionGuard guard(512);
        CHECK(precision_bits() == 512);
    }
    CHECK(precision_bits() == 128);
    CHECK(rel_err(numerics::log_gamma(Real(1) / 2), ref_lgamma_half()) < 1e-33);
}
