#include "hardy/real.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <stdexcept>

namespace hardy {

namespace {
unsigned g_precision_bits = 128;
}

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 2;
}

void set_precision_bits(unsigned bits) {
    if (bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
    g_precision_bits = bits;
    Real::default_precision(bits_to_digits10(bits));
}

unsigned precision_bits() { return g_precision_bits; }

Real pow2(long e) {
    Real r = 1;
    return boost::multiprecision::ldexp(r, static_cast<int>(e));
}

Real to_real(const Rational& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

Real real_pi() {
    return boost::math::constants::pi<Real>();
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_bits_(g_precision_bits) {
    if (bits > g_precision_bits) {
        g_precision_bits = bits;
        Real::default_precision(bits_to_digits10(bits));
    }
}

PrecisionGuard::~PrecisionGuard() {
    g_precision_bits = saved_bits_;
    Real::default_precision(bits_to_digits10(saved_bits_));
}

Real round_to_current(const Real& x) {
    Real y(x);
    y.precision(Real::default_precision());
    return y;
}

} // namespace hardy
