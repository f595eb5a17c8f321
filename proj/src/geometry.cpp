#include "greybody/geometry.hpp"

#include <cmath>
#include <sstream>

#include "greybody/numerics.hpp"

namespace greybody {

namespace {

void require_positive(double v, const char* name, const char* family) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << family << ": " << name << " must be positive and finite, got " << v;
        throw ValidationError(os.str());
    }
}

void require_finite(double v, const char* name, const char* family) {
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << family << ": " << name << " must be finite, got " << v;
        throw ValidationError(os.str());
    }
}

} // namespace

RNGeometry::RNGeometry(double G_, double M_, double Q_, double P_)
    : G(G_), M(M_), Q(Q_), P(P_) {
    require_positive(G, "G", "RNGeometry");
    require_positive(M, "M", "RNGeometry");
    require_finite(Q, "Q", "RNGeometry");
    require_finite(P, "P", "RNGeometry");
}

ExtremalityClass classify(const RNGeometry& g, double rel_tol) {
    const double mass_side = g.G * g.M * g.M;
    const double charge_side = g.Q * g.Q + g.P * g.P;
    const double scale = std::max(mass_side, charge_side);
    if (std::abs(mass_side - charge_side) <= rel_tol * scale)
        return ExtremalityClass::Extremal;
    return mass_side > charge_side ? ExtremalityClass::SubExtremal
                                   : ExtremalityClass::SuperExtremal;
}

RNHorizons rn_horizons(const RNGeometry& g) {
    switch (classify(g)) {
    case ExtremalityClass::SuperExtremal: {
        std::ostringstream os;
        os << "rn_horizons: super-extremal geometry (G M^2 = " << g.G * g.M * g.M
           << " < Q^2 + P^2 = " << g.Q * g.Q + g.P * g.P << ") has no horizon";
        throw NoHorizonError(os.str());
    }
    case ExtremalityClass::Extremal:
        return {g.G * g.M, g.G * g.M, 0.0};
    case ExtremalityClass::SubExtremal:
    default: {
        const double A = std::sqrt(g.discriminant());
        return {g.G * g.M + A, g.G * g.M - A, A};
    }
    }
}

TangherliniGeometry::TangherliniGeometry(int d_, double G_, double M_,
                                         RadiusConvention convention_)
    : d(d_), G(G_), M(M_), convention(convention_) {
    if (d < 4) {
        std::ostringstream os;
        os << "TangherliniGeometry: spacetime dimension d must be >= 4, got " << d;
        throw DimensionError(os.str());
    }
    require_positive(G, "G", "TangherliniGeometry");
    require_positive(M, "M", "TangherliniGeometry");
}

double unit_sphere_area(int n) {
    const double half = 0.5 * static_cast<double>(n + 1);
    return 2.0 * std::pow(M_PI, half) / std::tgamma(half);
}

double tangherlini_radius(const TangherliniGeometry& g, RadiusConvention convention) {
    const double mass_coefficient =
        16.0 * M_PI * g.G * g.M / ((g.d - 2) * unit_sphere_area(g.d - 2));
    if (convention == RadiusConvention::MassCoefficientLiteral)
        return mass_coefficient;
    if (g.d == 4)
        return mass_coefficient; // exponent 1/(d-3) = 1
    return std::pow(mass_coefficient, 1.0 / static_cast<double>(g.d - 3));
}

double tangherlini_radius(const TangherliniGeometry& g) {
    return tangherlini_radius(g, g.convention);
}

Dilatonic2p1Geometry::Dilatonic2p1Geometry(double M_, double Q_, double Lambda_)
    : M(M_), Q(Q_), Lambda(Lambda_) {
    require_positive(M, "M", "Dilatonic2p1Geometry");
    require_finite(Q, "Q", "Dilatonic2p1Geometry");
    require_positive(Lambda, "Lambda", "Dilatonic2p1Geometry");
}

Horizons2p1 dilatonic2p1_horizons(const Dilatonic2p1Geometry& g) {
    const double disc = g.M * g.M - 64.0 * g.Q * g.Q * g.Lambda;
    if (!(disc > 0.0)) {
        std::ostringstream os;
        os << "dilatonic2p1_horizons: lapse has no two distinct real roots, need M > 8 Q sqrt(Lambda) "
           << "(M = " << g.M << ", 8 Q sqrt(Lambda) = "
           << 8.0 * std::abs(g.Q) * std::sqrt(g.Lambda) << ")";
        throw NoHorizonError(os.str());
    }
    // roots of 8 Lambda r^2 - 2 M r + 8 Q^2
    const auto roots = stable_quadratic_roots(8.0 * g.Lambda, -2.0 * g.M,
                                              8.0 * g.Q * g.Q, 2.0 * std::sqrt(disc));
    return {roots.larger, roots.smaller};
}

Dilatonic3p1Geometry::Dilatonic3p1Geometry(double M_, double Q_) : M(M_), Q(Q_) {
    require_positive(M, "M", "Dilatonic3p1Geometry");
    require_finite(Q, "Q", "Dilatonic3p1Geometry");
    if (!(2.0 * M * M > Q * Q)) {
        std::ostringstream os;
        os << "Dilatonic3p1Geometry: need 2 M^2 > Q^2 for an exterior region "
           << "(2 M^2 = " << 2.0 * M * M << ", Q^2 = " << Q * Q << ")";
        throw NoHorizonError(os.str());
    }
}

Mode::Mode(double omega_, int angular_) : omega(omega_), angular(angular_) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        std::ostringstream os;
        os << "Mode: omega must be positive and finite, got " << omega;
        throw ValidationError(os.str());
    }
    if (angular < 0) {
        std::ostringstream os;
        os << "Mode: angular number must be >= 0, got " << angular;
        throw ValidationError(os.str());
    }
}

Family family_of(const Geometry& g) {
    switch (g.index()) {
    case 0: return Family::ReissnerNordstrom;
    case 1: return Family::Tangherlini;
    case 2: return Family::Dilatonic2p1;
    default: return Family::Dilatonic3p1;
    }
}

std::string family_name(Family f) {
    switch (f) {
    case Family::ReissnerNordstrom: return "rn";
    case Family::Tangherlini: return "tangherlini";
    case Family::Dilatonic2p1: return "dilatonic2p1";
    case Family::Dilatonic3p1: return "dilatonic3p1";
    }
    return "unknown";
}

Family family_from_name(const std::string& name) {
    if (name == "rn") return Family::ReissnerNordstrom;
    if (name == "tangherlini") return Family::Tangherlini;
    if (name == "dilatonic2p1") return Family::Dilatonic2p1;
    if (name == "dilatonic3p1") return Family::Dilatonic3p1;
    throw ValidationError("unknown family '" + name +
                          "' (expected rn, tangherlini, dilatonic2p1 or dilatonic3p1)");
}

double outer_horizon(const Geometry& g) {
    return std::visit(
        [](const auto& geom) -> double {
            using T = std::decay_t<decltype(geom)>;
            if constexpr (std::is_same_v<T, RNGeometry>)
                return rn_horizons(geom).r_plus;
            else if constexpr (std::is_same_v<T, TangherliniGeometry>)
                return tangherlini_radius(geom);
            else if constexpr (std::is_same_v<T, Dilatonic2p1Geometry>)
                return dilatonic2p1_horizons(geom).r_plus;
            else
                return geom.r_plus();
        },
        g);
}

} // namespace greybody
