#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace hardy {

// Arbitrary-precision scalar types. One global binary precision P (bits) is
// fixed per run; all Real arithmetic inherits it.
using Real = boost::multiprecision::mpfr_float;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Sets the working precision for all subsequently created Real values.
// bits must be >= 53.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// Decimal digits needed to represent `bits` binary digits, plus guard.
unsigned bits_to_digits10(unsigned bits);

// 2^e as a Real at current precision (e may be negative).
Real pow2(long e);

Real to_real(const Rational& q);
Real real_pi();

// Temporarily raises the default precision; restores it on scope exit.
// Values computed inside keep their elevated precision until reassigned,
// so callers should round results via round_to_current().
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_bits_;
};

// Rounds x to the current global precision.
Real round_to_current(const Real& x);

} // namespace hardy
