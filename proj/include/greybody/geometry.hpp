#pragma once

#include <string>
#include <variant>

#include "greybody/errors.hpp"

namespace greybody {

//! Reissner-Nordstrom family: mass M, electric charge Q, magnetic charge P,
//! Newton constant G.  Horizons at r = GM +/- sqrt(G^2 M^2 - G(Q^2 + P^2)).
struct RNGeometry {
    RNGeometry(double G_, double M_, double Q_, double P_ = 0.0);

    double G;
    double M;
    double Q;
    double P;

    //! G^2 M^2 - G (Q^2 + P^2), the squared horizon half-separation.
    double discriminant() const { return G * G * M * M - G * (Q * Q + P * P); }
};

enum class ExtremalityClass { SubExtremal, Extremal, SuperExtremal };

//! Classify by the sign of G M^2 - (Q^2 + P^2); ties within rel_tol are Extremal.
ExtremalityClass classify(const RNGeometry& g, double rel_tol = 1e-12);

struct RNHorizons {
    double r_plus;
    double r_minus;
    double A; //!< half-separation (r_plus - r_minus) / 2; zero when extremal
};

//! Horizon radii r_plus = GM + A, r_minus = GM - A.
//! Throws NoHorizonError for super-extremal geometries.
RNHorizons rn_horizons(const RNGeometry& g);

//! How the Tangherlini horizon radius is derived from (d, G, M).
//! DimensionallyConsistent solves r0^{d-3} = 16 pi G M / ((d-2) Omega_{d-2});
//! MassCoefficientLiteral uses that right-hand side as r0 directly (a convention
//! in which the combination 16 pi G M / ((d-2) Omega_{d-2}) is itself a length).
enum class RadiusConvention { DimensionallyConsistent, MassCoefficientLiteral };

//! Schwarzschild-Tangherlini family in d >= 4 spacetime dimensions.
struct TangherliniGeometry {
    TangherliniGeometry(int d_, double G_, double M_,
                        RadiusConvention convention_ = RadiusConvention::DimensionallyConsistent);

    int d;
    double G;
    double M;
    RadiusConvention convention;
};

//! Area of the unit (n)-sphere, 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double unit_sphere_area(int n);

//! Horizon radius r0 under an explicit convention.
double tangherlini_radius(const TangherliniGeometry& g, RadiusConvention convention);

//! Horizon radius r0 under the geometry's own convention.  Reduces to 2GM at
//! d = 4 under either convention.
double tangherlini_radius(const TangherliniGeometry& g);

//! Charged dilatonic black hole in 2+1 dimensions: lapse
//! f(r) = -2 M r + 8 Lambda r^2 + 8 Q^2.  Two horizons exist iff M > 8 Q sqrt(Lambda).
struct Dilatonic2p1Geometry {
    Dilatonic2p1Geometry(double M_, double Q_, double Lambda_);

    double M;
    double Q;
    double Lambda;
};

struct Horizons2p1 {
    double r_plus;
    double r_minus;
};

//! Roots of the 2+1 lapse, r = (M +/- sqrt(M^2 - 64 Q^2 Lambda)) / (8 Lambda).
//! The inner root is recovered from the root product Q^2 / Lambda to avoid
//! cancellation at small charge.  Throws NoHorizonError when M <= 8 Q sqrt(Lambda).
Horizons2p1 dilatonic2p1_horizons(const Dilatonic2p1Geometry& g);

//! Charged dilatonic black hole in 3+1 dimensions: f = 1 - 2M/r,
//! R^2 = r^2 (1 - Q^2 / (M r)).  Requires 2 M^2 > Q^2 so that r_minus < r_plus.
struct Dilatonic3p1Geometry {
    Dilatonic3p1Geometry(double M_, double Q_);

    double M;
    double Q;

    double r_plus() const { return 2.0 * M; }
    double r_minus() const { return Q * Q / M; }
};

//! One scattering mode: frequency omega > 0 and angular number (l, or m in 2+1).
struct Mode {
    Mode(double omega_, int angular_);

    double omega;
    int angular;
};

enum class Family { ReissnerNordstrom, Tangherlini, Dilatonic2p1, Dilatonic3p1 };

using Geometry = std::variant<RNGeometry, TangherliniGeometry,
                              Dilatonic2p1Geometry, Dilatonic3p1Geometry>;

Family family_of(const Geometry& g);

//! Short machine name: rn, tangherlini, dilatonic2p1, dilatonic3p1.
std::string family_name(Family f);

//! Parse a family name as printed by family_name.  Throws ValidationError.
Family family_from_name(const std::string& name);

//! Outer horizon radius for any family (r_plus, r0, r_plus, 2M respectively).
double outer_horizon(const Geometry& g);

} // namespace greybody
