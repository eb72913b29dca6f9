#pragma once

#include "hardy/real.hpp"
#include "hardy/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hardy::catalog {

enum class Shape {
    disc,
    strip,
    triangle,
    square,
    parabola,
    hyperbola_focal,
    hyperbola_branches,
    ellipse,
    ellipse_doubling,
    annulus,
};

// A verification case: a planar domain V, the disc map onto it, and the
// closed form of the expected squared exit modulus at the base point.
struct DomainCase {
    Shape shape;
    std::string id;     // canonical id, e.g. "hyperbola-focal:p=1/3"
    std::string param;  // raw parameter token after '=', empty if none
    // Set when the closed-form target does not exist (hyperbola parameters
    // past the integrability threshold); the series is expected to diverge.
    bool diagnostic = false;
};

// Canonical ids of the built-in cases, in catalog order.
const std::vector<std::string>& registry_ids();

// Parses an id like "strip", "ellipse:t=0.8", "hyperbola-branches:theta=pi/8".
// Parameter tokens accept decimals, fractions a/b, pi/b, and for the ellipse
// also "1/sqrt2" and "omega" (the modulus with K(1,omega) = pi).
// Throws std::invalid_argument on malformed ids or out-of-range parameters.
DomainCase parse_case(const std::string& id);

// Resolved numeric parameter (p, theta or t) at run precision; 0 if none.
Real param_value(const DomainCase& c);

// Image of 0 under the map, as coordinates in the plane.
std::pair<double, double> base_point(const DomainCase& c);

// One verified identity: squared map coefficients against the closed form.
struct Identity {
    std::string statement;    // human-readable form of the identity
    std::vector<long> n;      // series indices of the nonzero coefficients, ascending, all >= 1
    std::vector<Real> terms;  // squared coefficient magnitudes, aligned with n
    Real partial;             // sum of terms (summed smallest-first)
    Real rhs;                 // closed-form target; 0 when diagnostic
    bool diagnostic = false;
};

// Squared coefficients of the map through series order `order`, plus the
// closed-form value of the expected exit functional at the base point.
// square_m is the truncation of the double sum used for the square target.
Identity identity(const DomainCase& c, int order, int square_m = 2000);

// Identity for the map precomposed with the disc automorphism
// m_w(z) = (z+w)/(1+wz), real w in (-1,1): same domain, base point moved to
// f(w). Supported for strip, parabola and hyperbola-branches.
Identity moebius_identity(const DomainCase& c, const Real& w, int order);

// Taylor coefficients of the map itself at the given truncation order.
series::TruncatedSeries<Real> map_series(const DomainCase& c, int order);

// Exact rational Taylor coefficients of exp(arctan z), the annulus map.
series::TruncatedSeries<Rational> annulus_series_rational(int order);

// The expected squared exit modulus functional: the unique continuous G with
// Laplacian -4 in V, G = |z|^2 on the boundary... evaluated minus |z|^2, i.e.
// twice the expected exit time of Brownian motion from (x, y).
Real g_value(const DomainCase& c, const Real& x, const Real& y);

// Double-precision geometry snapshot for the walk-on-spheres sampler; caches
// the resolved parameters so the hot loop does no multiprecision work.
struct Geometry {
    Shape shape = Shape::disc;
    double s = 0, c = 0;    // shape-specific: sin^2/cos^2 halves, sin/cos theta
    double ax = 0, bx = 0;  // ellipse semi-axes (major, minor)
    double r_in = 0, r_out = 0;  // annulus radii
    double bx0 = 0, by0 = 0;     // base point
};

Geometry geometry(const DomainCase& c);
bool contains(const Geometry& g, double x, double y);
// Positive lower bound on the distance from an interior point to the
// boundary; 0 at or outside the boundary.
double boundary_gap(const Geometry& g, double x, double y);

} // namespace hardy::catalog
