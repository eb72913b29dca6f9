#include "hardy/catalog.hpp"
#include "hardy/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hardy::catalog {

using boost::multiprecision::abs;
using boost::multiprecision::atan;
using boost::multiprecision::cos;
using boost::multiprecision::cosh;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::sin;
using boost::multiprecision::sinh;
using boost::multiprecision::sqrt;

namespace {

Real parse_number(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty parameter value");
    if (tok == "1/sqrt2") return 1 / sqrt(Real(2));
    if (tok == "omega") {
        // the modulus with K(1, omega) = pi
        return numerics::solve_increasing(
            [](const Real& t) { return numerics::elliptic_k(t); },
            Real(1) / 2, 1 - pow2(-28), real_pi());
    }
    auto parse_plain = [](const std::string& s) -> Real {
        if (s == "pi") return real_pi();
        try {
            return Real(s);
        } catch (...) {
            throw std::invalid_argument("bad parameter value: " + s);
        }
    };
    auto slash = tok.find('/');
    if (slash != std::string::npos) {
        return parse_plain(tok.substr(0, slash)) / parse_plain(tok.substr(slash + 1));
    }
    return parse_plain(tok);
}

struct ShapeSpec {
    const char* name;
    Shape shape;
    const char* key; // parameter key, nullptr when the shape takes none
};

constexpr ShapeSpec kShapes[] = {
    {"disc", Shape::disc, nullptr},
    {"strip", Shape::strip, nullptr},
    {"triangle", Shape::triangle, nullptr},
    {"square", Shape::square, nullptr},
    {"parabola", Shape::parabola, nullptr},
    {"hyperbola-focal", Shape::hyperbola_focal, "p"},
    {"hyperbola-branches", Shape::hyperbola_branches, "theta"},
    {"ellipse", Shape::ellipse, "t"},
    {"ellipse-doubling", Shape::ellipse_doubling, "t"},
    {"annulus", Shape::annulus, nullptr},
};

const ShapeSpec& spec_for(Shape s) {
    for (const auto& sp : kShapes)
        if (sp.shape == s) return sp;
    throw std::logic_error("unknown shape");
}

} // namespace

const std::vector<std::string>& registry_ids() {
    static const std::vector<std::string> ids = {
        "disc",
        "strip",
        "triangle",
        "square",
        "parabola",
        "hyperbola-focal:p=1/3",
        "hyperbola-focal:p=1/4",
        "hyperbola-branches:theta=pi/8",
        "ellipse:t=1/sqrt2",
        "ellipse-doubling:t=1/sqrt2",
        "annulus",
    };
    return ids;
}

DomainCase parse_case(const std::string& id) {
    std::string name = id;
    std::string rest;
    if (auto colon = id.find(':'); colon != std::string::npos) {
        name = id.substr(0, colon);
        rest = id.substr(colon + 1);
    }
    for (const auto& sp : kShapes) {
        if (name != sp.name) continue;
        DomainCase c;
        c.shape = sp.shape;
        if (!sp.key) {
            if (!rest.empty())
                throw std::invalid_argument("case '" + name + "' takes no parameter");
            c.id = name;
            return c;
        }
        std::string prefix = std::string(sp.key) + "=";
        if (rest.compare(0, prefix.size(), prefix) != 0)
            throw std::invalid_argument("case '" + name + "' needs parameter " + prefix + "...");
        c.param = rest.substr(prefix.size());
        Real v = parse_number(c.param);
        switch (sp.shape) {
        case Shape::hyperbola_focal:
            if (!(v > 0) || !(v < 1))
                throw std::invalid_argument("hyperbola-focal: need 0 < p < 1");
            c.diagnostic = v >= Real(1) / 2;
            break;
        case Shape::hyperbola_branches:
            if (!(v > 0) || !(v < real_pi() / 2))
                throw std::invalid_argument("hyperbola-branches: need 0 < theta < pi/2");
            c.diagnostic = v >= real_pi() / 4;
            break;
        default:
            if (!(v > 0) || !(v < 1))
                throw std::invalid_argument("ellipse: need 0 < t < 1");
            break;
        }
        c.id = std::string(sp.name) + ":" + prefix + c.param;
        return c;
    }
    throw std::invalid_argument("unknown case id: " + id);
}

Real param_value(const DomainCase& c) {
    if (c.param.empty()) return Real(0);
    return parse_number(c.param);
}

std::pair<double, double> base_point(const DomainCase& c) {
    switch (c.shape) {
    case Shape::parabola:
    case Shape::hyperbola_focal:
    case Shape::annulus:
        return {1.0, 0.0};
    case Shape::ellipse_doubling:
        return {-1.0, 0.0};
    default:
        return {0.0, 0.0};
    }
}

namespace {

// ---- map coefficient kernels ----

// u_k = (1/3)_k (2/3)_k / ((4/3)_k k!): f_triangle = (3/B) sum u_k z^(3k+1)
std::vector<Real> triangle_u(int count) {
    std::vector<Real> u(count);
    Real v = 1;
    for (int k = 0; k < count; ++k) {
        u[k] = v;
        Real kk(k);
        v *= (kk + Real(1) / 3) * (kk + Real(2) / 3) / ((kk + Real(4) / 3) * (kk + 1));
    }
    return u;
}

// v_k = (1/4)_k (1/2)_k / ((5/4)_k k!): f_square = (4/B) sum v_k z^(4k+1)
std::vector<Real> square_v(int count) {
    std::vector<Real> u(count);
    Real v = 1;
    for (int k = 0; k < count; ++k) {
        u[k] = v;
        Real kk(k);
        v *= (kk + Real(1) / 4) * (kk + Real(1) / 2) / ((kk + Real(5) / 4) * (kk + 1));
    }
    return u;
}

// inner_n = sum_{j=0}^{n} 1/((2j+1)(2(n-j)+1)), the self-convolution of the
// odd harmonic weights.
std::vector<Real> parabola_inner(int count) {
    std::vector<Real> h(count);
    for (int j = 0; j < count; ++j) h[j] = Real(1) / (2 * j + 1);
    std::vector<Real> inner(count);
    for (int n = 0; n < count; ++n) {
        Real acc = 0;
        int half = n / 2;
        for (int j = 0; j <= half; ++j) {
            Real prod = h[j] * h[n - j];
            acc += (j == n - j) ? prod : 2 * prod;
        }
        inner[n] = acc;
    }
    return inner;
}

// Even Taylor coefficients of cosh(p ln((1+z)/(1-z))): returns g_{2n} for
// n = 0..count-1. From (1-z^2) w'' - 2z w' = ... reduced to the three-term
// relation (k+2)(k+1) g_{k+2} = (2k^2 + 4p^2) g_k - (k-2)(k-1) g_{k-2}.
std::vector<Real> focal_g_even(const Real& p, int count) {
    std::vector<Real> g(count);
    if (count > 0) g[0] = 1;
    Real p2_4 = 4 * p * p;
    Real gm2 = 0, gm0 = 1; // g_{k-2}, g_k with k even
    for (int n = 1; n < count; ++n) {
        long k = 2 * (n - 1);
        Real next = ((Real(2 * k * k) + p2_4) * gm0 - Real((k - 2) * (k - 1)) * gm2)
                    / Real((k + 2) * (k + 1));
        g[n] = next;
        gm2 = gm0;
        gm0 = next;
    }
    return g;
}

// Odd Taylor coefficients of sin(c arctan z): returns a_{2k+1} for
// k = 0..count-1, from (k+2)(k+1) a_{k+2} = -(2k^2 + c^2) a_k - (k-2)(k-1) a_{k-2}.
std::vector<Real> branches_a_odd(const Real& c, int count) {
    std::vector<Real> a(count);
    if (count > 0) a[0] = c;
    Real c2 = c * c;
    Real am2 = 0, am0 = c; // a_{k-2}, a_k with k odd
    for (int n = 1; n < count; ++n) {
        long k = 2 * n - 1;
        Real next = -((Real(2 * k * k) + c2) * am0 + Real((k - 2) * (k - 1)) * am2)
                    / Real((k + 2) * (k + 1));
        a[n] = next;
        am2 = am0;
        am0 = next;
    }
    return a;
}

// A_n = a_{2n+1} of the ellipse map sin((pi/(2K)) K(z/sqrt(t), t)). The
// forward recurrence is dominated by a t^{-n} solution, so it runs at a
// precision boosted by roughly count*log2(1/t) bits and rounds back down.
std::vector<Real> ellipse_A(const Real& t, int count) {
    // The dominant solution outgrows the wanted one by t^(-4) per index, so
    // roundoff injected early is amplified by 4*count*log2(1/t) bits.
    double td = static_cast<double>(t);
    unsigned extra = static_cast<unsigned>(std::ceil(4.0 * count * std::log2(1.0 / td))) + 64;
    std::vector<Real> A(count);
    {
        PrecisionGuard guard(precision_bits() + extra);
        Real tw(t); // lift to working precision, exact
        tw.precision(Real::default_precision());
        Real k1 = numerics::elliptic_k(tw);
        Real pi = real_pi();
        Real a0 = pi / (2 * sqrt(tw) * k1);
        Real r = tw + 1 / tw;
        Real s = pi * pi / (4 * tw * k1 * k1);
        Real prev = 0, cur = a0;
        for (int n = 0; n < count; ++n) {
            A[n] = cur;
            Real m(2 * n + 1);
            Real next = ((r * m * m - s) * cur - Real(2 * n * (2 * n - 1)) * prev)
                        / Real((2 * n + 2) * (2 * n + 3));
            prev = cur;
            cur = next;
        }
    }
    for (auto& x : A) x = round_to_current(x);
    return A;
}

std::vector<Real> ellipse_conv(const std::vector<Real>& A, int count) {
    std::vector<Real> conv(count);
    for (int n = 0; n < count; ++n) {
        Real acc = 0;
        int half = n / 2;
        for (int j = 0; j <= half; ++j) {
            Real prod = A[j] * A[n - j];
            acc += (j == n - j) ? prod : 2 * prod;
        }
        conv[n] = acc;
    }
    return conv;
}

std::vector<Rational> annulus_a(int count) {
    std::vector<Rational> a(count);
    if (count > 0) a[0] = 1;
    if (count > 1) a[1] = 1;
    for (int n = 1; n + 1 < count; ++n)
        a[n + 1] = (a[n] - Rational(n - 1) * a[n - 1]) / Rational(n + 1);
    return a;
}

// sum over odd k of the alternating lattice sum
// (-1)^(m+n) / ((2m-1)(2n-1)((2m-1)^2+(2n-1)^2)), m, n = 1..M.
Real square_double_sum(int M) {
    Real total = 0;
    for (int m = M; m >= 1; --m) {
        long om = 2L * m - 1;
        Real row = 0;
        for (int n = M; n >= 1; --n) {
            long on = 2L * n - 1;
            long d = om * on * (om * om + on * on);
            Real term = Real(1) / Real(d);
            if ((m + n) & 1) row -= term;
            else row += term;
        }
        total += row;
    }
    return total;
}

Real sum_ascending(const std::vector<Real>& terms) {
    Real acc = 0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) acc += *it;
    return acc;
}

// G for the square with corners (+-1/sqrt2, +-1/sqrt2): the quadratic part
// 2X(a-X) absorbs the closed Fourier sine sum, the correction series decays
// like exp(-k pi dy/a) after orienting the axes for the faster decay.
Real g_square_value(Real x, Real y) {
    const Real a = sqrt(Real(2));
    const Real pi = real_pi();
    Real X = x + a / 2, Y = y + a / 2;
    if (std::min(static_cast<double>(X), static_cast<double>(a - X)) >
        std::min(static_cast<double>(Y), static_cast<double>(a - Y)))
        std::swap(X, Y);

    Real base = 2 * X * (a - X);
    Real w = pi * abs(Y - a / 2) / a;             // in [0, pi/2]
    Real qa = exp(w - pi / 2);                    // e^{-(pi/2 - w)} <= 1
    Real qb = exp(-(pi / 2 + w));
    Real qc = exp(-pi);
    Real qa2 = qa * qa, qb2 = qb * qb, qc2 = qc * qc;
    Real ak = qa, bk = qb, ck = qc;               // k-th powers, k odd

    Real alpha = pi * X / a;
    Real c2 = 2 * cos(2 * alpha);
    Real sk = sin(alpha), skm2 = -sk;             // sin(k alpha), k = 1 and k = -1

    const Real coef = 16 * a * a / (pi * pi * pi);
    const Real tol = pow2(-static_cast<long>(precision_bits()) - 8);
    Real corr = 0;
    for (long k = 1; k <= 200001; k += 2) {
        Real k3 = Real(k) * Real(k) * Real(k);
        Real envelope = coef / k3 * (ak + bk);
        corr += coef / k3 * sk * (ak + bk) / (1 + ck);
        if (envelope < tol) break;
        Real snext = c2 * sk - skm2;
        skm2 = sk;
        sk = snext;
        ak *= qa2;
        bk *= qb2;
        ck *= qc2;
    }
    return base - corr;
}

std::string real_str(const Real& v, int digits = 6) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

} // namespace

Real g_value(const DomainCase& c, const Real& x, const Real& y) {
    const Real pi = real_pi();
    switch (c.shape) {
    case Shape::disc:
        return 1 - (x * x + y * y);
    case Shape::strip:
        return pi * pi / 8 - 2 * x * x;
    case Shape::triangle: {
        Real s3 = sqrt(Real(3));
        return (2 * x + 1) * (1 - x - s3 * y) * (1 - x + s3 * y) / 3;
    }
    case Shape::square:
        return g_square_value(x, y);
    case Shape::parabola:
        return 2 * (2 * x - y * y - 1);
    case Shape::hyperbola_focal: {
        Real p = param_value(c);
        Real S = sin(pi * p / 2);
        S *= S;
        Real C = cos(pi * p / 2);
        C *= C;
        Real u = (S * x + C) / sqrt(C);
        return 2 * C / (S * (C - S)) * (u * u - S * y * y - 1);
    }
    case Shape::hyperbola_branches: {
        Real th = param_value(c);
        Real s = sin(th), co = cos(th);
        Real s2 = sin(2 * th), c2 = cos(2 * th);
        return s2 * s2 / (2 * c2) * (1 + (y / co) * (y / co) - (x / s) * (x / s));
    }
    case Shape::ellipse:
    case Shape::ellipse_doubling: {
        Real t = param_value(c);
        Real xi = numerics::mu(t);
        if (c.shape == Shape::ellipse) xi /= 2;
        Real sh = sinh(xi), ch = cosh(xi);
        return 2 * sh * sh * ch * ch / (sh * sh + ch * ch)
               * (1 - (x / ch) * (x / ch) - (y / sh) * (y / sh));
    }
    case Shape::annulus: {
        Real r2 = x * x + y * y;
        return 4 * sinh(pi / 2) / pi * log(r2) / 2 + cosh(pi / 2) - r2;
    }
    }
    throw std::logic_error("unreachable");
}

series::TruncatedSeries<Rational> annulus_series_rational(int order) {
    auto a = annulus_a(order + 1);
    series::TruncatedSeries<Rational> s(order);
    for (int n = 0; n <= order; ++n) s[n] = a[n];
    return s;
}

Identity identity(const DomainCase& c, int order, int square_m) {
    if (order < 1) throw std::invalid_argument("identity: order must be >= 1");
    const Real pi = real_pi();
    Identity out;
    out.diagnostic = c.diagnostic;

    switch (c.shape) {
    case Shape::disc: {
        out.statement = "sum_{n>=1} |a_n|^2 = 1 for f(z) = z";
        out.n = {1};
        out.terms = {Real(1)};
        out.rhs = 1;
        break;
    }
    case Shape::strip: {
        out.statement = "sum_{j>=0} 1/(2j+1)^2 = pi^2/8";
        int count = (order - 1) / 2 + 1;
        for (int j = 0; j < count; ++j) {
            out.n.push_back(2L * j + 1);
            Real d(2 * j + 1);
            out.terms.push_back(1 / (d * d));
        }
        out.rhs = pi * pi / 8;
        break;
    }
    case Shape::triangle: {
        out.statement =
            "4F3(1/3,1/3,2/3,2/3; 4/3,4/3,1; 1) = B(1/3,1/3)^2 / 27";
        int count = (order - 1) / 3 + 1;
        auto u = triangle_u(count);
        Real pref = 3 / numerics::beta(Real(1) / 3, Real(1) / 3);
        for (int k = 0; k < count; ++k) {
            out.n.push_back(3L * k + 1);
            Real a = pref * u[k];
            out.terms.push_back(a * a);
        }
        out.rhs = Real(1) / 3;
        break;
    }
    case Shape::square: {
        out.statement =
            "4F3(1/4,1/4,1/2,1/2; 5/4,5/4,1; 1) / B(1/4,1/2)^2 = "
            "(8/pi^4) sum_{m,n>=1} (-1)^(m+n)/((2m-1)(2n-1)((2m-1)^2+(2n-1)^2))";
        int count = (order - 1) / 4 + 1;
        auto v = square_v(count);
        Real pref = 4 / numerics::beta(Real(1) / 4, Real(1) / 2);
        for (int k = 0; k < count; ++k) {
            out.n.push_back(4L * k + 1);
            Real a = pref * v[k];
            out.terms.push_back(a * a);
        }
        Real pi4 = pi * pi * pi * pi;
        out.rhs = 128 / pi4 * square_double_sum(square_m);
        break;
    }
    case Shape::parabola: {
        out.statement =
            "sum_{n>=0} (sum_{j=0}^{n} 1/((2j+1)(2(n-j)+1)))^2 = pi^4/32";
        int count = order / 2; // index 2n+2 <= order
        auto inner = parabola_inner(count);
        Real pref = 8 / (pi * pi);
        for (int n = 0; n < count; ++n) {
            out.n.push_back(2L * n + 2);
            Real a = pref * inner[n];
            out.terms.push_back(a * a);
        }
        out.rhs = 2;
        break;
    }
    case Shape::hyperbola_focal: {
        Real p = param_value(c);
        out.statement =
            "sum_{n>=1} (sum_j binom(2p,2j) binom(p+n-j-1,n-j))^2 = "
            "2 sin^4(pi p/2)/cos(pi p), p = " + c.param;
        if (c.diagnostic) out.statement += " (diverges: p >= 1/2)";
        int count = order / 2 + 1; // g_{2n}, 2n <= order
        auto g = focal_g_even(p, count);
        Real S = sin(pi * p / 2);
        S *= S;
        for (int n = 1; n < count; ++n) {
            out.n.push_back(2L * n);
            Real a = g[n] / S;
            out.terms.push_back(a * a);
        }
        out.rhs = c.diagnostic ? Real(0) : Real(2 / cos(pi * p));
        break;
    }
    case Shape::hyperbola_branches: {
        Real th = param_value(c);
        out.statement =
            "sum_{n>=1} a_n(theta)^2 = sin^2(2 theta)/(2 cos(2 theta)) "
            "for f = sin((4 theta/pi) arctan z), theta = " + c.param;
        if (c.diagnostic) out.statement += " (diverges: theta >= pi/4)";
        int count = (order - 1) / 2 + 1;
        Real cc = 4 * th / pi;
        auto a = branches_a_odd(cc, count);
        for (int k = 0; k < count; ++k) {
            out.n.push_back(2L * k + 1);
            out.terms.push_back(a[k] * a[k]);
        }
        Real c2 = cos(2 * th);
        Real s2 = sin(2 * th);
        out.rhs = c.diagnostic ? Real(0) : Real(s2 * s2 / (2 * c2));
        break;
    }
    case Shape::ellipse: {
        Real t = param_value(c);
        Real m = numerics::mu(t);
        out.statement =
            "sum_{n>=0} A_n(t)^2 = sinh^2(mu)/(2 cosh(mu)), t = " + c.param +
            ", mu = " + real_str(m);
        int count = (order - 1) / 2 + 1;
        auto A = ellipse_A(t, count);
        for (int k = 0; k < count; ++k) {
            out.n.push_back(2L * k + 1);
            out.terms.push_back(A[k] * A[k]);
        }
        out.rhs = sinh(m) * sinh(m) / (2 * cosh(m));
        break;
    }
    case Shape::ellipse_doubling: {
        Real t = param_value(c);
        Real m = numerics::mu(t);
        out.statement =
            "sum_{n>=0} (sum_j A_j(t) A_{n-j}(t))^2 = sinh^4(mu)/(2 cosh(2 mu)), t = " +
            c.param + ", mu = " + real_str(m);
        int count = order / 2; // index 2n+2 <= order
        auto A = ellipse_A(t, count);
        auto conv = ellipse_conv(A, count);
        for (int n = 0; n < count; ++n) {
            out.n.push_back(2L * n + 2);
            Real a = 2 * conv[n];
            out.terms.push_back(a * a);
        }
        out.rhs = 2 * sinh(m) * sinh(m) * sinh(m) * sinh(m) / cosh(2 * m);
        break;
    }
    case Shape::annulus: {
        out.statement =
            "1 + 1/2^2 + 1/6^2 + 7^2/24^2 + ... = cosh(pi/2) - 1 "
            "for f = exp(arctan z)";
        auto a = annulus_a(order + 1);
        for (int n = 1; n <= order; ++n) {
            out.n.push_back(n);
            Real v = to_real(a[n] * a[n]);
            out.terms.push_back(v);
        }
        out.rhs = cosh(pi / 2) - 1;
        break;
    }
    }
    out.partial = sum_ascending(out.terms);
    return out;
}

series::TruncatedSeries<Real> map_series(const DomainCase& c, int order) {
    const Real pi = real_pi();
    series::TruncatedSeries<Real> f(order);
    switch (c.shape) {
    case Shape::disc:
        if (order >= 1) f[1] = 1;
        break;
    case Shape::strip:
        for (int j = 0; 2 * j + 1 <= order; ++j)
            f[2 * j + 1] = Real((j & 1) ? -1 : 1) / (2 * j + 1);
        break;
    case Shape::triangle: {
        int count = (order - 1) / 3 + 1;
        auto u = triangle_u(count);
        Real pref = 3 / numerics::beta(Real(1) / 3, Real(1) / 3);
        for (int k = 0; k < count; ++k) f[3 * k + 1] = pref * u[k];
        break;
    }
    case Shape::square: {
        int count = (order - 1) / 4 + 1;
        auto v = square_v(count);
        Real pref = 4 / numerics::beta(Real(1) / 4, Real(1) / 2);
        for (int k = 0; k < count; ++k) f[4 * k + 1] = pref * v[k];
        break;
    }
    case Shape::parabola: {
        f[0] = 1;
        int count = order / 2;
        auto inner = parabola_inner(count);
        Real pref = 8 / (pi * pi);
        for (int n = 0; n < count; ++n) f[2 * n + 2] = pref * inner[n];
        break;
    }
    case Shape::hyperbola_focal: {
        Real p = param_value(c);
        int count = order / 2 + 1;
        auto g = focal_g_even(p, count);
        Real S = sin(pi * p / 2);
        S *= S;
        f[0] = 1;
        for (int n = 1; n < count; ++n) f[2 * n] = g[n] / S;
        break;
    }
    case Shape::hyperbola_branches: {
        Real th = param_value(c);
        int count = (order - 1) / 2 + 1;
        auto a = branches_a_odd(4 * th / pi, count);
        for (int k = 0; k < count; ++k) f[2 * k + 1] = a[k];
        break;
    }
    case Shape::ellipse: {
        Real t = param_value(c);
        int count = (order - 1) / 2 + 1;
        auto A = ellipse_A(t, count);
        for (int k = 0; k < count; ++k) f[2 * k + 1] = A[k];
        break;
    }
    case Shape::ellipse_doubling: {
        Real t = param_value(c);
        int count = order / 2;
        auto A = ellipse_A(t, count);
        auto conv = ellipse_conv(A, count);
        f[0] = -1;
        for (int n = 0; n < count; ++n) f[2 * n + 2] = 2 * conv[n];
        break;
    }
    case Shape::annulus: {
        auto a = annulus_a(order + 1);
        for (int n = 0; n <= order; ++n) f[n] = to_real(a[n]);
        break;
    }
    }
    return f;
}

namespace {

// Taylor coefficients of arctan(m_w(z)) for m_w = (z+w)/(1+wz): the
// derivative is (1-w^2)/q(z) with q(z) = (1+w^2) + 4wz + (1+w^2)z^2, so the
// reciprocal follows a two-term back substitution and integration is exact.
std::vector<Real> arctan_moebius(const Real& w, int order) {
    Real q0 = 1 + w * w, q1 = 4 * w, q2 = 1 + w * w;
    std::vector<Real> h(order); // h[n] = coefficient of z^n in (1-w^2)/q
    if (order > 0) h[0] = (1 - w * w) / q0;
    if (order > 1) h[1] = -q1 * h[0] / q0;
    for (int n = 2; n < order; ++n) h[n] = -(q1 * h[n - 1] + q2 * h[n - 2]) / q0;
    std::vector<Real> a(order + 1);
    a[0] = atan(w);
    for (int n = 1; n <= order; ++n) a[n] = h[n - 1] / n;
    return a;
}

} // namespace

Identity moebius_identity(const DomainCase& c, const Real& w, int order) {
    if (!(abs(w) < 1)) throw std::invalid_argument("moebius_identity: need |w| < 1");
    const Real pi = real_pi();
    Identity out;

    switch (c.shape) {
    case Shape::strip: {
        auto a = arctan_moebius(w, order);
        out.statement = "sum_{n>=1} a_n^2 = pi^2/8 - 2 arctan(w)^2 "
                        "for f = arctan((z+w)/(1+wz)), w = " + real_str(w);
        for (int n = 1; n <= order; ++n) {
            out.n.push_back(n);
            out.terms.push_back(a[n] * a[n]);
        }
        out.rhs = pi * pi / 8 - 2 * a[0] * a[0];
        break;
    }
    case Shape::parabola: {
        // f(m_w(z)) = 1 + (2/pi^2) (L(z) + c)^2 with L = ln((1+z)/(1-z)),
        // c = L(w): the logarithm turns the Moebius shift into a translation.
        Real cshift = log((1 + w) / (1 - w));
        out.statement = "parabola identity at base f(w), w = " + real_str(w);
        int half = order / 2;
        auto inner = parabola_inner(half);
        Real pref = 2 / (pi * pi);
        for (int n = 1; n <= order; ++n) {
            Real an;
            if (n & 1) {
                an = pref * 2 * cshift * Real(2) / n;
            } else {
                an = pref * 4 * inner[n / 2 - 1];
            }
            out.n.push_back(n);
            out.terms.push_back(an * an);
        }
        Real a0 = 1 + pref * cshift * cshift;
        out.rhs = 2 * (2 * a0 - 1);
        break;
    }
    case Shape::hyperbola_branches: {
        Real th = param_value(c);
        if (c.diagnostic)
            throw std::invalid_argument("moebius_identity: divergent parameter");
        Real cc = 4 * th / pi;
        auto at = arctan_moebius(w, order);
        Real alpha = cc * at[0];
        series::TruncatedSeries<Real> u(order); // c*(arctan(m_w) - arctan(w))
        for (int n = 1; n <= order; ++n) u[n] = cc * at[n];

        // sin(alpha + u) = sin(alpha) cos(u) + cos(alpha) sin(u); the outer
        // sine/cosine series are entire, truncated where the 1/k! envelope
        // is negligible against the largest power of u.
        double norm1 = 0; // l1 bound on u over the closed disc
        for (int n = 1; n <= order; ++n) norm1 += std::fabs(static_cast<double>(u[n]));
        int K = 8;
        {
            double lg = 0, target = -std::log(2.0) * (precision_bits() + 16.0);
            for (int k = 1; k <= 4 * order + 64; ++k) {
                lg += std::log(std::max(norm1, 1e-30)) - std::log(static_cast<double>(k));
                if (lg < target) { K = k; break; }
                K = k;
            }
        }
        series::TruncatedSeries<Real> sin_outer(K), cos_outer(K);
        Real fact = 1;
        for (int k = 0; k <= K; ++k) {
            if (k > 0) fact *= k;
            Real inv = 1 / fact;
            int r = k & 3;
            if (r == 0) cos_outer[k] = inv;
            else if (r == 1) sin_outer[k] = inv;
            else if (r == 2) cos_outer[k] = -inv;
            else sin_outer[k] = -inv;
        }
        auto cos_u = series::compose(cos_outer, u, order);
        auto sin_u = series::compose(sin_outer, u, order);
        Real sa = sin(alpha), ca = cos(alpha);
        out.statement = "hyperbola-branches identity at base f(w), theta = " +
                        c.param + ", w = " + real_str(w);
        for (int n = 1; n <= order; ++n) {
            Real an = sa * cos_u[n] + ca * sin_u[n];
            out.n.push_back(n);
            out.terms.push_back(an * an);
        }
        Real x0 = sa; // f(m_w(0)) = sin(c arctan w)
        out.rhs = g_value(c, x0, Real(0));
        break;
    }
    default:
        throw std::invalid_argument(
            "moebius_identity: supported for strip, parabola, hyperbola-branches");
    }
    out.partial = sum_ascending(out.terms);
    return out;
}

// ---- double-precision geometry for the sampler ----

Geometry geometry(const DomainCase& c) {
    Geometry g;
    g.shape = c.shape;
    auto [bx, by] = base_point(c);
    g.bx0 = bx;
    g.by0 = by;
    switch (c.shape) {
    case Shape::hyperbola_focal: {
        double p = static_cast<double>(param_value(c));
        double s = std::sin(M_PI * p / 2), co = std::cos(M_PI * p / 2);
        g.s = s * s;
        g.c = co * co;
        break;
    }
    case Shape::hyperbola_branches: {
        double th = static_cast<double>(param_value(c));
        g.s = std::sin(th);
        g.c = std::cos(th);
        break;
    }
    case Shape::ellipse:
    case Shape::ellipse_doubling: {
        Real t = param_value(c);
        double xi = static_cast<double>(numerics::mu(t));
        if (c.shape == Shape::ellipse) xi /= 2;
        g.ax = std::cosh(xi);
        g.bx = std::sinh(xi);
        break;
    }
    case Shape::annulus:
        g.r_in = std::exp(-M_PI / 4);
        g.r_out = std::exp(M_PI / 4);
        break;
    default:
        break;
    }
    return g;
}

bool contains(const Geometry& g, double x, double y) {
    switch (g.shape) {
    case Shape::disc:
        return x * x + y * y < 1.0;
    case Shape::strip:
        return std::fabs(x) < M_PI / 4;
    case Shape::triangle: {
        const double s3 = std::sqrt(3.0);
        return 2 * x + 1 > 0 && 1 - x - s3 * y > 0 && 1 - x + s3 * y > 0;
    }
    case Shape::square: {
        const double h = 1.0 / std::sqrt(2.0);
        return std::fabs(x) < h && std::fabs(y) < h;
    }
    case Shape::parabola:
        return y * y < 2 * x - 1;
    case Shape::hyperbola_focal: {
        double u = (g.s * x + g.c) / std::sqrt(g.c);
        return x > 0 && u * u - g.s * y * y > 1;
    }
    case Shape::hyperbola_branches: {
        double u = x / g.s, v = y / g.c;
        return u * u < v * v + 1;
    }
    case Shape::ellipse:
    case Shape::ellipse_doubling: {
        double u = x / g.ax, v = y / g.bx;
        return u * u + v * v < 1;
    }
    case Shape::annulus: {
        double r = std::hypot(x, y);
        return r > g.r_in && r < g.r_out;
    }
    }
    return false;
}

namespace {

// Distance to an origin-centred ellipse with semi-axes A >= B from an
// interior point, by bisecting F(t) = (Ax/(t+A^2))^2 + (By/(t+B^2))^2 - 1
// on its unique root above max(Ax - A^2, By - B^2).
double ellipse_interior_gap(double A, double B, double x, double y) {
    x = std::fabs(x);
    y = std::fabs(y);
    if (y < 1e-14) {
        double xc = (A * A - B * B) / A;
        if (x < xc) {
            double x0 = A * A * x / (A * A - B * B);
            double y0 = B * std::sqrt(std::max(0.0, 1 - (x0 / A) * (x0 / A)));
            return std::hypot(x - x0, y0);
        }
        return A - x;
    }
    auto F = [&](double t) {
        double u = A * x / (t + A * A), v = B * y / (t + B * B);
        return u * u + v * v - 1;
    };
    double lo = std::max(A * x - A * A, B * y - B * B);
    double hi = std::max(lo + B * B, A * std::hypot(x, y));
    while (F(hi) > 0) hi *= 2;
    for (int i = 0; i < 200 && hi - lo > 1e-17 * (std::fabs(lo) + 1); ++i) {
        double mid = 0.5 * (lo + hi);
        if (F(mid) > 0) lo = mid;
        else hi = mid;
    }
    double t = 0.5 * (lo + hi);
    double x0 = A * A * x / (t + A * A), y0 = B * B * y / (t + B * B);
    return std::hypot(x - x0, y - y0);
}

// Distance from (px, py) to the parabola boundary y^2 = 2x - 1: critical
// parameters solve v^3 + (3 - 2 px) v - 2 py = 0.
double parabola_gap(double px, double py) {
    double P = 3 - 2 * px, Q = -2 * py;
    double best = 1e300;
    auto consider = [&](double v) {
        double d = std::hypot((1 + v * v) / 2 - px, v - py);
        best = std::min(best, d);
    };
    double half_q = Q / 2, third_p = P / 3;
    double disc = half_q * half_q + third_p * third_p * third_p;
    if (disc >= 0) {
        double s = std::sqrt(disc);
        consider(std::cbrt(-half_q + s) + std::cbrt(-half_q - s));
    } else {
        double r = 2 * std::sqrt(-third_p);
        double phi = std::acos(std::clamp(3 * Q / (P * r), -1.0, 1.0)) / 3;
        for (int k = 0; k < 3; ++k)
            consider(r * std::cos(phi - 2 * M_PI * k / 3));
    }
    return best;
}

// Projection distance onto the convex branch {(xc cosh u, yc sinh u)}: finds
// the critical point of the squared distance by damped Newton from the
// y-matched seed, with a coarse-sample fallback.
double branch_projection(double xc, double yc, double px, double py) {
    auto dist = [&](double u) {
        return std::hypot(xc * std::cosh(u) - px, yc * std::sinh(u) - py);
    };
    auto phi = [&](double u) {
        double ch = std::cosh(u), sh = std::sinh(u);
        return (xc * ch - px) * xc * sh + (yc * sh - py) * yc * ch;
    };
    double best = 1e300;
    for (double seed : {std::asinh(py / yc), 0.0}) {
        double u = seed;
        bool ok = false;
        for (int i = 0; i < 60; ++i) {
            double ch = std::cosh(u), sh = std::sinh(u);
            double f = (xc * ch - px) * xc * sh + (yc * sh - py) * yc * ch;
            double fp = xc * xc * sh * sh + (xc * ch - px) * xc * ch +
                        yc * yc * ch * ch + (yc * sh - py) * yc * sh;
            if (fp <= 0) break;
            double step = f / fp;
            u -= step;
            if (std::fabs(step) < 1e-14 * (1 + std::fabs(u))) { ok = true; break; }
        }
        if (ok && std::isfinite(u) && std::fabs(phi(u)) < 1e-6 * (1 + px * px + py * py))
            best = std::min(best, dist(u));
    }
    if (best > 1e299) {
        // coarse sampling fallback; halved so it stays a lower bound
        double u0 = std::asinh(py / yc);
        double dmin = 1e300;
        for (int i = 0; i <= 256; ++i)
            dmin = std::min(dmin, dist(u0 - 8 + i / 16.0));
        return dmin / 2;
    }
    return best * (1 - 1e-9);
}

} // namespace

double boundary_gap(const Geometry& g, double x, double y) {
    if (!contains(g, x, y)) return 0.0;
    switch (g.shape) {
    case Shape::disc:
        return 1 - std::hypot(x, y);
    case Shape::strip:
        return M_PI / 4 - std::fabs(x);
    case Shape::triangle: {
        const double s3 = std::sqrt(3.0);
        double d1 = x + 0.5;
        double d2 = (1 - x - s3 * y) / 2;
        double d3 = (1 - x + s3 * y) / 2;
        return std::min({d1, d2, d3});
    }
    case Shape::square: {
        const double h = 1.0 / std::sqrt(2.0);
        return std::min(h - std::fabs(x), h - std::fabs(y));
    }
    case Shape::parabola:
        return parabola_gap(x, y);
    case Shape::hyperbola_focal: {
        // boundary point ((sqrt(C) cosh u - C)/S, sinh u / sqrt(S))
        double rS = std::sqrt(g.s), rC = std::sqrt(g.c);
        // affine coordinates where the branch is X^2 - Y^2 = 1 scaled
        return branch_projection(rC / g.s, 1 / rS, x + g.c / g.s, y);
    }
    case Shape::hyperbola_branches: {
        double d1 = branch_projection(g.s, g.c, x, y);
        double d2 = branch_projection(g.s, g.c, -x, y);
        return std::min(d1, d2);
    }
    case Shape::ellipse:
    case Shape::ellipse_doubling:
        return ellipse_interior_gap(g.ax, g.bx, x, y) * (1 - 1e-12);
    case Shape::annulus: {
        double r = std::hypot(x, y);
        return std::min(r - g.r_in, g.r_out - r);
    }
    }
    return 0.0;
}

} // namespace hardy::catalog
