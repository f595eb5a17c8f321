#pragma once

#include <cstddef>
#include <vector>

#include "greybody/geometry.hpp"

namespace greybody {

//! Radial points closer to the outer horizon than r_h * (1 + kHorizonEdge)
//! are rejected with DomainError instead of silently returning huge logarithms.
inline constexpr double kHorizonEdge = 1e-10;

// --- Reissner-Nordstrom -----------------------------------------------------

//! Lapse Delta = 1 - 2GM/r + G(Q^2+P^2)/r^2.  Defined for all r > 0.
double rn_delta(const RNGeometry& g, double r);

//! d Delta / dr = 2GM/r^2 - 2G(Q^2+P^2)/r^3.
double rn_delta_deriv(const RNGeometry& g, double r);

//! Scalar barrier V = l(l+1) Delta / r^2 + Delta Delta' / r, outside the horizon.
double rn_potential(const RNGeometry& g, int l, double r);

// --- Schwarzschild-Tangherlini ----------------------------------------------

//! f = 1 - (r0/r)^{d-3}, evaluated in product form so that values remain
//! accurate arbitrarily close to r0.
double tangherlini_f(const TangherliniGeometry& g, double r);

//! df/dr = (d-3) r0^{d-3} / r^{d-2}.
double tangherlini_f_deriv(const TangherliniGeometry& g, double r);

//! V = (d-2)(d-4)/4 f^2/r^2 + (d-2)/2 f f'/r + l(l+d-3) f/r^2.
//! At d = 4 this is identical to the uncharged Reissner-Nordstrom barrier.
double tangherlini_potential(const TangherliniGeometry& g, int l, double r);

// --- charged dilatonic 2+1 ---------------------------------------------------

//! Lapse f = -2Mr + 8 Lambda r^2 + 8 Q^2.
double dilatonic2p1_lapse(const Dilatonic2p1Geometry& g, double r);

//! The 2+1 barrier carries a term linear in r; Linearized drops it (the
//! small-8Lambda*r^2/f approximation used for the closed-form bound).
enum class Dilatonic2p1Variant { Full, Linearized };

//! V = -(8m^2 L + 6mL) [+ 14 L^2 r] + (5M^2/8 + 2m^2 M)/r
//!     - (4MQ^2 + 8m^2 Q^2)/r^2 + 6Q^4/r^3, outside the outer horizon.
double dilatonic2p1_potential(const Dilatonic2p1Geometry& g, int m, double r,
                              Dilatonic2p1Variant variant = Dilatonic2p1Variant::Full);

// --- charged dilatonic 3+1 ---------------------------------------------------

//! V = l(l+1) f / R^2 with f = 1 - 2M/r and R^2 = r(r - Q^2/M).
double dilatonic3p1_potential(const Dilatonic3p1Geometry& g, int l, double r);

// --- tortoise maps -----------------------------------------------------------

//! Closed-form r*(r) for Reissner-Nordstrom, all three extremality branches:
//!   sub-extremal: r + GM ln(u^2 - A^2) + (G^2M^2 + A^2)/(2A) ln((u-A)/(u+A))
//!   extremal:     r + GM ln(u^2) - G^2M^2/u
//!   super-extremal: r + GM ln(u^2 + B^2) + (G^2M^2 - B^2)/B arctan(u/B)
//! with u = r - GM, A^2 = -B^2 = G^2M^2 - G(Q^2+P^2).  The additive constants
//! are fixed by these expressions as written.
class RNTortoise {
public:
    explicit RNTortoise(const RNGeometry& g);

    double operator()(double r) const;
    //! Defining derivative d r*/dr = 1/Delta.
    double drstar_dr(double r) const;
    ExtremalityClass extremality() const { return cls_; }

private:
    void check_domain(double r) const;
    RNGeometry geom_;
    ExtremalityClass cls_;
    double r_plus_ = 0.0, r_minus_ = 0.0, A_ = 0.0, B_ = 0.0;
};

//! Closed-form r*(r) for Tangherlini: with t = r/r0 and n = d-3,
//! r* = r0 (t + sum_k Re[(zeta_k / n) ln(t - zeta_k)]) over the n-th roots of
//! unity zeta_k, the partial-fraction antiderivative of 1/f.
class TangherliniTortoise {
public:
    explicit TangherliniTortoise(const TangherliniGeometry& g);

    double operator()(double r) const;
    //! Defining derivative d r*/dr = 1/f.
    double drstar_dr(double r) const;

private:
    TangherliniGeometry geom_;
    double r0_;
};

//! Closed-form r*(r) for the 2+1 dilatonic family:
//! r* = [r_plus ln(r - r_plus) - r_minus ln(r - r_minus)] / (4 L (r_plus - r_minus)).
class Dilatonic2p1Tortoise {
public:
    explicit Dilatonic2p1Tortoise(const Dilatonic2p1Geometry& g);

    double operator()(double r) const;
    //! Defining derivative d r*/dr = 2r/f.
    double drstar_dr(double r) const;

private:
    Dilatonic2p1Geometry geom_;
    Horizons2p1 h_;
};

//! Closed-form r*(r) for the 3+1 dilatonic family: r + 2M ln(r - 2M).
class Dilatonic3p1Tortoise {
public:
    explicit Dilatonic3p1Tortoise(const Dilatonic3p1Geometry& g);

    double operator()(double r) const;
    //! Defining derivative d r*/dr = 1/f.
    double drstar_dr(double r) const;

private:
    Dilatonic3p1Geometry geom_;
};

// --- profiles ----------------------------------------------------------------

struct ProfileOptions {
    std::size_t points = 512;
    double lo_factor = 1.001; //!< grid start as multiple of the outer horizon
    double hi_factor = 50.0;  //!< grid end as multiple of the outer horizon
    Dilatonic2p1Variant variant_2p1 = Dilatonic2p1Variant::Full;
};

struct PotentialProfile {
    std::vector<double> r;
    std::vector<double> V;
};

//! Barrier of any family on an explicit radial grid.  A grid point at or inside
//! the outer horizon raises DomainError naming the offending index; an empty
//! grid yields an empty profile.
PotentialProfile potential_profile(const Geometry& g, const Mode& mode,
                                   const std::vector<double>& radii,
                                   Dilatonic2p1Variant variant_2p1 = Dilatonic2p1Variant::Full);

//! Same on the default log-spaced grid [lo_factor, hi_factor] * r_horizon.
PotentialProfile potential_profile(const Geometry& g, const Mode& mode,
                                   const ProfileOptions& options = {});

//! Barrier of any family at a single radius (dispatch on the variant).
double potential(const Geometry& g, const Mode& mode, double r,
                 Dilatonic2p1Variant variant_2p1 = Dilatonic2p1Variant::Full);

namespace detail {

// Evaluators used by the quadrature and the scattering integrator.  Each takes
// u = r - r_h explicitly so callers constructing r = r_h (1 + e^s) can pass the
// offset without subtractive cancellation; no horizon-edge guard is applied.

double rn_delta_u(const RNGeometry& g, const RNHorizons& h, double r, double u);
double rn_potential_u(const RNGeometry& g, const RNHorizons& h, int l, double r, double u);

double tang_f_u(const TangherliniGeometry& g, double r0, double r, double u);
double tang_potential_u(const TangherliniGeometry& g, double r0, int l, double r, double u);

double d2p1_lapse_u(const Dilatonic2p1Geometry& g, const Horizons2p1& h, double r, double u);
double d2p1_potential_raw(const Dilatonic2p1Geometry& g, int m, double r, bool linearized);

double d3p1_potential_u(const Dilatonic3p1Geometry& g, int l, double r, double u);

} // namespace detail

} // namespace greybody
