#include "greybody/potentials.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <variant>

#include "greybody/errors.hpp"
#include "greybody/numerics.hpp"

namespace greybody {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void check_outside_horizon(double r, double r_h, const char* what) {
    if (!(r >= r_h * (1.0 + kHorizonEdge))) {
        throw DomainError(std::string(what) + ": r = " + num(r) +
                          " is at or inside the outer-horizon guard r_h (1 + 1e-10) with r_h = " +
                          num(r_h));
    }
}

void check_positive_radius(double r, const char* what) {
    if (!(r > 0.0)) {
        throw DomainError(std::string(what) + ": r = " + num(r) + " must be positive");
    }
}

void check_angular(int l, const char* what) {
    if (l < 0) {
        throw ValidationError(std::string(what) + ": angular index " + std::to_string(l) +
                              " must be nonnegative");
    }
}

} // namespace

// --- Reissner-Nordstrom -----------------------------------------------------

double rn_delta(const RNGeometry& g, double r) {
    check_positive_radius(r, "rn_delta");
    if (classify(g) == ExtremalityClass::SuperExtremal) {
        return 1.0 - 2.0 * g.G * g.M / r + g.G * (g.Q * g.Q + g.P * g.P) / (r * r);
    }
    const RNHorizons h = rn_horizons(g);
    return detail::rn_delta_u(g, h, r, r - h.r_plus);
}

double rn_delta_deriv(const RNGeometry& g, double r) {
    check_positive_radius(r, "rn_delta_deriv");
    if (classify(g) == ExtremalityClass::SuperExtremal) {
        return 2.0 * g.G * g.M / (r * r) - 2.0 * g.G * (g.Q * g.Q + g.P * g.P) / (r * r * r);
    }
    // Product-rule form of d/dr [(r - r_plus)(r - r_minus)/r^2]; stays accurate
    // near the horizon where the textbook form cancels.
    const RNHorizons h = rn_horizons(g);
    const double u = r - h.r_plus;
    const double c = h.r_plus - h.r_minus;
    return (2.0 * u + c) / (r * r) - 2.0 * u * (u + c) / (r * r * r);
}

double rn_potential(const RNGeometry& g, int l, double r) {
    check_angular(l, "rn_potential");
    if (classify(g) == ExtremalityClass::SuperExtremal) {
        check_positive_radius(r, "rn_potential");
        const double D = rn_delta(g, r);
        return D * (static_cast<double>(l) * (l + 1) / (r * r) + rn_delta_deriv(g, r) / r);
    }
    const RNHorizons h = rn_horizons(g);
    check_outside_horizon(r, h.r_plus, "rn_potential");
    return detail::rn_potential_u(g, h, l, r, r - h.r_plus);
}

// --- Schwarzschild-Tangherlini ----------------------------------------------

double tangherlini_f(const TangherliniGeometry& g, double r) {
    check_positive_radius(r, "tangherlini_f");
    const double r0 = tangherlini_radius(g);
    return detail::tang_f_u(g, r0, r, r - r0);
}

double tangherlini_f_deriv(const TangherliniGeometry& g, double r) {
    check_positive_radius(r, "tangherlini_f_deriv");
    const double r0 = tangherlini_radius(g);
    const int n = g.d - 3;
    return n * std::pow(r0 / r, n) / r;
}

double tangherlini_potential(const TangherliniGeometry& g, int l, double r) {
    check_angular(l, "tangherlini_potential");
    const double r0 = tangherlini_radius(g);
    check_outside_horizon(r, r0, "tangherlini_potential");
    return detail::tang_potential_u(g, r0, l, r, r - r0);
}

// --- charged dilatonic 2+1 ---------------------------------------------------

double dilatonic2p1_lapse(const Dilatonic2p1Geometry& g, double r) {
    check_positive_radius(r, "dilatonic2p1_lapse");
    const Horizons2p1 h = dilatonic2p1_horizons(g);
    return detail::d2p1_lapse_u(g, h, r, r - h.r_plus);
}

double dilatonic2p1_potential(const Dilatonic2p1Geometry& g, int m, double r,
                              Dilatonic2p1Variant variant) {
    check_angular(m, "dilatonic2p1_potential");
    const Horizons2p1 h = dilatonic2p1_horizons(g);
    check_outside_horizon(r, h.r_plus, "dilatonic2p1_potential");
    return detail::d2p1_potential_raw(g, m, r, variant == Dilatonic2p1Variant::Linearized);
}

// --- charged dilatonic 3+1 ---------------------------------------------------

double dilatonic3p1_potential(const Dilatonic3p1Geometry& g, int l, double r) {
    check_angular(l, "dilatonic3p1_potential");
    check_outside_horizon(r, g.r_plus(), "dilatonic3p1_potential");
    return detail::d3p1_potential_u(g, l, r, r - g.r_plus());
}

// --- tortoise maps -----------------------------------------------------------

RNTortoise::RNTortoise(const RNGeometry& g) : geom_(g), cls_(classify(g)) {
    if (cls_ == ExtremalityClass::SuperExtremal) {
        B_ = std::sqrt(g.G * (g.Q * g.Q + g.P * g.P) - g.G * g.G * g.M * g.M);
    } else {
        const RNHorizons h = rn_horizons(g);
        r_plus_ = h.r_plus;
        r_minus_ = h.r_minus;
        A_ = h.A;
    }
}

void RNTortoise::check_domain(double r) const {
    if (cls_ == ExtremalityClass::SuperExtremal) {
        check_positive_radius(r, "RNTortoise");
    } else {
        check_outside_horizon(r, r_plus_, "RNTortoise");
    }
}

double RNTortoise::operator()(double r) const {
    check_domain(r);
    const double GM = geom_.G * geom_.M;
    switch (cls_) {
    case ExtremalityClass::SubExtremal: {
        // ln(u^2 - A^2) and ln((u-A)/(u+A)) regrouped through the horizon
        // factors, which are individually positive on the domain.
        const double lp = std::log(r - r_plus_);
        const double lm = std::log(r - r_minus_);
        const double coeff = (GM * GM + A_ * A_) / (2.0 * A_);
        return r + GM * (lp + lm) + coeff * (lp - lm);
    }
    case ExtremalityClass::Extremal: {
        const double u = r - GM;
        return r + 2.0 * GM * std::log(u) - GM * GM / u;
    }
    case ExtremalityClass::SuperExtremal: {
        const double u = r - GM;
        return r + GM * std::log(u * u + B_ * B_) +
               (GM * GM - B_ * B_) / B_ * std::atan(u / B_);
    }
    }
    throw Error("RNTortoise: unreachable extremality class");
}

double RNTortoise::drstar_dr(double r) const {
    check_domain(r);
    return 1.0 / rn_delta(geom_, r);
}

TangherliniTortoise::TangherliniTortoise(const TangherliniGeometry& g)
    : geom_(g), r0_(tangherlini_radius(g)) {}

double TangherliniTortoise::operator()(double r) const {
    check_outside_horizon(r, r0_, "TangherliniTortoise");
    const int n = geom_.d - 3;
    const double t = r / r0_;
    // Partial fractions of 1/(t^n - 1): residue zeta_k / n at each n-th root of
    // unity.  The imaginary parts cancel pairwise for real t, so only the real
    // part of each complex log contributes.
    double acc = t;
    for (int k = 0; k < n; ++k) {
        const std::complex<double> zeta = std::polar(1.0, 2.0 * M_PI * k / n);
        acc += std::real(zeta / static_cast<double>(n) * std::log(t - zeta));
    }
    return r0_ * acc;
}

double TangherliniTortoise::drstar_dr(double r) const {
    check_outside_horizon(r, r0_, "TangherliniTortoise");
    return 1.0 / tangherlini_f(geom_, r);
}

Dilatonic2p1Tortoise::Dilatonic2p1Tortoise(const Dilatonic2p1Geometry& g)
    : geom_(g), h_(dilatonic2p1_horizons(g)) {}

double Dilatonic2p1Tortoise::operator()(double r) const {
    check_outside_horizon(r, h_.r_plus, "Dilatonic2p1Tortoise");
    const double denom = 4.0 * geom_.Lambda * (h_.r_plus - h_.r_minus);
    // At Q = 0 the inner horizon sits at zero and its log term drops out.
    const double inner = (h_.r_minus == 0.0) ? 0.0 : h_.r_minus * std::log(r - h_.r_minus);
    return (h_.r_plus * std::log(r - h_.r_plus) - inner) / denom;
}

double Dilatonic2p1Tortoise::drstar_dr(double r) const {
    check_outside_horizon(r, h_.r_plus, "Dilatonic2p1Tortoise");
    return 2.0 * r / detail::d2p1_lapse_u(geom_, h_, r, r - h_.r_plus);
}

Dilatonic3p1Tortoise::Dilatonic3p1Tortoise(const Dilatonic3p1Geometry& g) : geom_(g) {}

double Dilatonic3p1Tortoise::operator()(double r) const {
    check_outside_horizon(r, geom_.r_plus(), "Dilatonic3p1Tortoise");
    const double rp = geom_.r_plus();
    return r + rp * std::log(r - rp);
}

double Dilatonic3p1Tortoise::drstar_dr(double r) const {
    check_outside_horizon(r, geom_.r_plus(), "Dilatonic3p1Tortoise");
    return r / (r - geom_.r_plus());
}

// --- profiles ----------------------------------------------------------------

double potential(const Geometry& g, const Mode& mode, double r,
                 Dilatonic2p1Variant variant_2p1) {
    return std::visit(
        [&](const auto& geom) -> double {
            using T = std::decay_t<decltype(geom)>;
            if constexpr (std::is_same_v<T, RNGeometry>) {
                return rn_potential(geom, mode.angular, r);
            } else if constexpr (std::is_same_v<T, TangherliniGeometry>) {
                return tangherlini_potential(geom, mode.angular, r);
            } else if constexpr (std::is_same_v<T, Dilatonic2p1Geometry>) {
                return dilatonic2p1_potential(geom, mode.angular, r, variant_2p1);
            } else {
                return dilatonic3p1_potential(geom, mode.angular, r);
            }
        },
        g);
}

PotentialProfile potential_profile(const Geometry& g, const Mode& mode,
                                   const std::vector<double>& radii,
                                   Dilatonic2p1Variant variant_2p1) {
    PotentialProfile out;
    if (radii.empty()) {
        return out;
    }
    const double r_h = outer_horizon(g);
    out.r = radii;
    out.V.reserve(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] >= r_h * (1.0 + kHorizonEdge))) {
            throw DomainError("potential_profile: grid point at index " + std::to_string(i) +
                              " (r = " + num(radii[i]) +
                              ") is at or inside the outer horizon r_h = " + num(r_h));
        }
        out.V.push_back(potential(g, mode, radii[i], variant_2p1));
    }
    return out;
}

PotentialProfile potential_profile(const Geometry& g, const Mode& mode,
                                   const ProfileOptions& options) {
    if (options.points < 2) {
        throw ValidationError("potential_profile: need at least 2 grid points, got " +
                              std::to_string(options.points));
    }
    if (!(options.lo_factor > 1.0) || !(options.hi_factor > options.lo_factor)) {
        throw ValidationError("potential_profile: grid factors must satisfy 1 < lo < hi, got lo = " +
                              num(options.lo_factor) + ", hi = " + num(options.hi_factor));
    }
    const double r_h = outer_horizon(g);
    return potential_profile(g, mode,
                             log_grid(options.lo_factor * r_h, options.hi_factor * r_h,
                                      options.points),
                             options.variant_2p1);
}

// --- internal evaluators -------------------------------------------------------

namespace detail {

double rn_delta_u(const RNGeometry&, const RNHorizons& h, double r, double u) {
    return u * (u + (h.r_plus - h.r_minus)) / (r * r);
}

double rn_potential_u(const RNGeometry&, const RNHorizons& h, int l, double r, double u) {
    const double c = h.r_plus - h.r_minus;
    const double delta = u * (u + c) / (r * r);
    const double ddelta = (2.0 * u + c) / (r * r) - 2.0 * u * (u + c) / (r * r * r);
    return delta * (static_cast<double>(l) * (l + 1) / (r * r) + ddelta / r);
}

double tang_f_u(const TangherliniGeometry& g, double r0, double r, double u) {
    // 1 - x^n = (1 - x)(1 + x + ... + x^{n-1}) with x = r0/r and 1 - x = u/r.
    const int n = g.d - 3;
    const double x = r0 / r;
    double s = 1.0;
    double xk = 1.0;
    for (int k = 1; k < n; ++k) {
        xk *= x;
        s += xk;
    }
    return (u / r) * s;
}

double tang_potential_u(const TangherliniGeometry& g, double r0, int l, double r, double u) {
    const double d = static_cast<double>(g.d);
    const double f = tang_f_u(g, r0, r, u);
    const double fp = (d - 3.0) * std::pow(r0 / r, g.d - 3) / r;
    const double c1 = (d - 2.0) * (d - 4.0) / 4.0;
    const double c2 = (d - 2.0) / 2.0;
    const double lam = static_cast<double>(l) * (l + d - 3.0);
    return c1 * f * f / (r * r) + c2 * f * fp / r + lam * f / (r * r);
}

double d2p1_lapse_u(const Dilatonic2p1Geometry& g, const Horizons2p1& h, double r, double u) {
    return 8.0 * g.Lambda * u * (r - h.r_minus);
}

double d2p1_potential_raw(const Dilatonic2p1Geometry& g, int m, double r, bool linearized) {
    const double M = g.M, Q = g.Q, L = g.Lambda;
    const double md = static_cast<double>(m);
    double v = -(8.0 * md * md * L + 6.0 * md * L);
    if (!linearized) {
        v += 14.0 * L * L * r;
    }
    v += (5.0 * M * M / 8.0 + 2.0 * md * md * M) / r;
    v -= (4.0 * M * Q * Q + 8.0 * md * md * Q * Q) / (r * r);
    v += 6.0 * Q * Q * Q * Q / (r * r * r);
    return v;
}

double d3p1_potential_u(const Dilatonic3p1Geometry& g, int l, double r, double u) {
    // V = l(l+1) f / R^2 with f = u/r and R^2 = r (r - r_minus).
    const double c = g.r_plus() - g.r_minus();
    return static_cast<double>(l) * (l + 1) * u / (r * r * (u + c));
}

} // namespace detail

} // namespace greybody
