#include <doctest.h>

#include <cmath>
#include <vector>

#include "greybody/errors.hpp"
#include "greybody/geometry.hpp"
#include "greybody/numerics.hpp"
#include "greybody/potentials.hpp"

using namespace greybody;

// Anchor values in this file were frozen from a 50-digit evaluation of the
// defining formulas; the short rationals are exact.

namespace {

// Textbook forms written out independently of the library implementation.
double delta_direct(double G, double M, double Q, double P, double r) {
    return 1.0 - 2.0 * G * M / r + G * (Q * Q + P * P) / (r * r);
}

double lapse_2p1_direct(double M, double Q, double L, double r) {
    return -2.0 * M * r + 8.0 * L * r * r + 8.0 * Q * Q;
}

} // namespace

TEST_CASE("rn lapse and derivative") {
    const RNGeometry g(1.0, 2.0, 1.0);
    CHECK(rn_delta(g, 4.0) == doctest::Approx(0.0625).epsilon(1e-15));
    for (double r : {3.5, 4.0, 7.0, 40.0, 1234.5}) {
        CHECK(rel_close(rn_delta(g, r), delta_direct(1.0, 2.0, 1.0, 0.0, r), 1e-13));
        const double fd = richardson_derivative([&](double x) { return rn_delta(g, x); }, r,
                                                1e-4 * r);
        CHECK(rel_close(rn_delta_deriv(g, r), fd, 1e-9));
    }

    // Near the horizon the factored form keeps full relative accuracy.
    const RNHorizons h = rn_horizons(g);
    const double u = 1e-12 * h.r_plus;
    const double near = detail::rn_delta_u(g, h, h.r_plus + u, u);
    CHECK(rel_close(near, u * (h.r_plus - h.r_minus) / (h.r_plus * h.r_plus), 1e-10));

    const RNGeometry super(1.0, 1.0, 2.0);
    CHECK(rn_delta(super, 3.0) == doctest::Approx(7.0 / 9.0).epsilon(1e-15));
    CHECK_THROWS_AS(rn_delta(g, 0.0), DomainError);
    CHECK_THROWS_AS(rn_delta(g, -1.0), DomainError);
}

TEST_CASE("rn potential") {
    const RNGeometry schw(1.0, 2.0, 0.0);
    // l=1, r=8: Delta = 1/2, Delta' = 1/16, V = (1/2)(2/64 + 1/128).
    CHECK(rn_potential(schw, 1, 8.0) == doctest::Approx(0.01953125).epsilon(1e-15));

    const RNGeometry g(1.0, 2.0, 1.0);
    const RNHorizons h = rn_horizons(g);
    for (double r : {1.0001 * h.r_plus, 1.5 * h.r_plus, 4.0, 10.0, 300.0}) {
        const double D = delta_direct(1.0, 2.0, 1.0, 0.0, r);
        const double Dp = 2.0 * 2.0 / (r * r) - 2.0 * 1.0 / (r * r * r);
        for (int l : {0, 1, 2, 5}) {
            const double want = D * (l * (l + 1) / (r * r) + Dp / r);
            CHECK(rel_close(rn_potential(g, l, r), want, 1e-10));
        }
    }

    // Positive everywhere outside the horizon for these parameters.
    for (double r : log_grid(h.r_plus * (1.0 + 1e-9), 1e6 * h.r_plus, 200)) {
        CHECK(rn_potential(g, 0, r) > 0.0);
        CHECK(rn_potential(g, 2, r) > 0.0);
    }

    // Vanishes linearly at the horizon (factored evaluator, no guard).
    const double u = 1e-12 * h.r_plus;
    const double v_near = detail::rn_potential_u(g, h, 1, h.r_plus + u, u);
    CHECK(std::abs(v_near) < 1e-11);
    CHECK(v_near > 0.0);

    CHECK_THROWS_AS(rn_potential(g, 1, h.r_plus), DomainError);
    CHECK_THROWS_AS(rn_potential(g, 1, h.r_plus * (1.0 + 1e-11)), DomainError);
    CHECK_NOTHROW(rn_potential(g, 1, h.r_plus * (1.0 + 2e-10)));
    CHECK_THROWS_AS(rn_potential(g, -1, 8.0), ValidationError);
    CHECK_THROWS_AS(rn_potential(g, 1, 0.5 * h.r_plus), DomainError);
}

TEST_CASE("tangherlini lapse and potential") {
    const TangherliniGeometry g5(5, 1.0, 1.0);
    const double r0 = tangherlini_radius(g5);
    CHECK(rel_close(r0, 0.92131773192356127804, 1e-15));

    // f in product form against the textbook form away from the horizon.
    for (int d : {4, 5, 6, 7, 8, 11}) {
        const TangherliniGeometry g(d, 1.0, 1.0);
        const double rh = tangherlini_radius(g);
        for (double r : {1.0001 * rh, 1.5 * rh, 3.0 * rh, 50.0 * rh}) {
            const double direct = 1.0 - std::pow(rh / r, d - 3);
            CHECK(rel_close(tangherlini_f(g, r), direct, 1e-12));
        }
        // FD cross-check where (r0/r)^{d-3} is large enough that the slope
        // rises above the rounding floor of f itself.
        for (double r : {1.0001 * rh, 1.5 * rh, 2.5 * rh}) {
            const double fd = richardson_derivative(
                [&](double x) { return tangherlini_f(g, x); }, r, 1e-5 * r);
            CHECK(rel_close(tangherlini_f_deriv(g, r), fd, 1e-8));
        }
        // f -> 1 far out, and the factored form is clean at tiny offsets.
        const double u = 1e-13 * rh;
        const double fnear = detail::tang_f_u(g, rh, rh + u, u);
        CHECK(rel_close(fnear, (d - 3) * u / rh, 1e-9));
    }

    CHECK(tangherlini_potential(g5, 0, 2.0 * r0) ==
          doctest::Approx(0.28992236891038619242).epsilon(1e-15));
    CHECK(rel_close(tangherlini_potential(g5, 0, 2.0 * r0), (63.0 / 256.0) / (r0 * r0), 1e-14));

    // d=4 is the uncharged 3+1 barrier.
    const TangherliniGeometry g4(4, 1.0, 2.0);
    const RNGeometry schw(1.0, 2.0, 0.0);
    for (double r : log_grid(4.0 * 1.001, 200.0, 64)) {
        for (int l : {0, 1, 3}) {
            CHECK(rel_close(tangherlini_potential(g4, l, r), rn_potential(schw, l, r), 1e-13));
        }
    }

    CHECK_THROWS_AS(tangherlini_potential(g5, 0, r0), DomainError);
    CHECK_THROWS_AS(tangherlini_potential(g5, -2, 2.0 * r0), ValidationError);

    // The literal-coefficient convention moves the horizon, and the potential
    // follows the geometry's convention.
    const TangherliniGeometry g5lit(5, 1.0, 1.0, RadiusConvention::MassCoefficientLiteral);
    const double r0lit = tangherlini_radius(g5lit);
    CHECK(rel_close(r0lit, r0 * r0, 1e-13)); // d=5: literal = consistent^2 at GM=1
    CHECK_THROWS_AS(tangherlini_potential(g5lit, 0, 0.99 * r0lit), DomainError);
    CHECK(tangherlini_potential(g5lit, 0, 2.0 * r0lit) > 0.0);
}

TEST_CASE("dilatonic 2+1 potential") {
    const Dilatonic2p1Geometry g(10.0, 1.0, 0.1);
    const Horizons2p1 h = dilatonic2p1_horizons(g);

    for (double r : {1.001 * h.r_plus, 30.0, 55.5, 400.0}) {
        CHECK(rel_close(dilatonic2p1_lapse(g, r), lapse_2p1_direct(10.0, 1.0, 0.1, r), 1e-11));
    }

    CHECK(dilatonic2p1_potential(g, 0, 30.0, Dilatonic2p1Variant::Linearized) ==
          doctest::Approx(2.0391111111111111111).epsilon(1e-15));
    // Full form carries the extra 14 Lambda^2 r.
    CHECK(dilatonic2p1_potential(g, 0, 30.0) ==
          doctest::Approx(2.0391111111111111111 + 14.0 * 0.01 * 30.0).epsilon(1e-15));

    // m enters through -(8m^2 + 6m) Lambda and the 1/r, 1/r^2 coefficients.
    const double v0 = dilatonic2p1_potential(g, 0, 40.0, Dilatonic2p1Variant::Linearized);
    const double v1 = dilatonic2p1_potential(g, 1, 40.0, Dilatonic2p1Variant::Linearized);
    const double want_shift = -(8.0 + 6.0) * 0.1 + 2.0 * 10.0 / 40.0 - 8.0 / 1600.0;
    CHECK(rel_close(v1 - v0, want_shift, 1e-12));

    // r = 20 sits inside the outer horizon (~24.59) for these parameters.
    CHECK_THROWS_AS(dilatonic2p1_potential(g, 0, 20.0), DomainError);
    CHECK_THROWS_AS(dilatonic2p1_potential(g, -1, 30.0), ValidationError);

    // This family's barrier does not vanish at the horizon: the lapse root is
    // not a factor of V.  Pin that down since the tunnelling integral hinges on it.
    const double v_h = detail::d2p1_potential_raw(g, 0, h.r_plus, true);
    CHECK(std::abs(v_h) > 1e-2);
}

TEST_CASE("dilatonic 3+1 potential") {
    const Dilatonic3p1Geometry g(10.0, 1.0);
    CHECK(dilatonic3p1_potential(g, 1, 40.0) ==
          doctest::Approx(1.0 / 1596.0).epsilon(1e-15));

    // Against the textbook form V = l(l+1)(1 - 2M/r) / (r^2 (1 - Q^2/(M r))).
    for (double r : {20.5, 25.0, 40.0, 333.0}) {
        const double f = 1.0 - 20.0 / r;
        const double R2 = r * r * (1.0 - 0.1 / r);
        CHECK(rel_close(dilatonic3p1_potential(g, 2, r), 6.0 * f / R2, 1e-12));
    }

    // l = 0 kills the barrier identically.
    CHECK(dilatonic3p1_potential(g, 0, 25.0) == 0.0);

    // Vanishes at the horizon; factored evaluator at tiny offset.
    const double u = 1e-12 * g.r_plus();
    CHECK(std::abs(detail::d3p1_potential_u(g, 1, g.r_plus() + u, u)) < 1e-12);

    CHECK_THROWS_AS(dilatonic3p1_potential(g, 1, 20.0), DomainError);
    CHECK_THROWS_AS(dilatonic3p1_potential(g, 1, 5.0), DomainError);
    CHECK_THROWS_AS(dilatonic3p1_potential(g, -1, 40.0), ValidationError);
}

TEST_CASE("rn tortoise, all extremality branches") {
    const RNGeometry sub(1.0, 2.0, 1.0);
    const RNTortoise ts(sub);
    CHECK(ts.extremality() == ExtremalityClass::SubExtremal);
    CHECK(ts(8.0) == doctest::Approx(13.792217517810486758).epsilon(1e-15));

    const RNGeometry ext(1.0, 1.0, 1.0);
    const RNTortoise te(ext);
    CHECK(te.extremality() == ExtremalityClass::Extremal);
    CHECK(te(2.0) == doctest::Approx(1.0).epsilon(1e-15));

    const RNGeometry super(1.0, 1.0, 2.0);
    const RNTortoise tu(super);
    CHECK(tu.extremality() == ExtremalityClass::SuperExtremal);
    CHECK(tu(3.0) == doctest::Approx(3.9562487094430132627).epsilon(1e-15));

    // d r*/dr equals 1/Delta on every branch, by finite differences of the map
    // itself and against the lapse written out directly.
    struct Case { RNGeometry g; std::vector<double> radii; };
    const std::vector<Case> cases = {
        {sub, {3.8, 5.0, 8.0, 60.0}},
        {ext, {1.1, 2.0, 7.5, 90.0}},
        {super, {0.4, 1.0, 3.0, 44.0}},
    };
    for (const auto& c : cases) {
        const RNTortoise t(c.g);
        for (double r : c.radii) {
            const double direct = 1.0 / delta_direct(c.g.G, c.g.M, c.g.Q, c.g.P, r);
            CHECK(rel_close(t.drstar_dr(r), direct, 1e-12));
            const double fd = richardson_derivative([&](double x) { return t(x); }, r, 1e-5 * r);
            CHECK(rel_close(fd, direct, 1e-7));
        }
    }

    // Diverges to -infinity at the horizon, grows like r far away.
    const RNHorizons h = rn_horizons(sub);
    CHECK(ts(h.r_plus * (1.0 + 1e-9)) < -30.0);
    CHECK(ts(1e8) > 1e8);

    CHECK_THROWS_AS(ts(h.r_plus), DomainError);
    CHECK_THROWS_AS(te(1.0), DomainError);
    CHECK_NOTHROW(tu(0.05)); // no horizon: any positive radius is fine
    CHECK_THROWS_AS(tu(0.0), DomainError);
}

TEST_CASE("tangherlini tortoise") {
    // d=5 by hand: 1/(t^2-1) splits into (1/2)/(t-1) - (1/2)/(t+1).
    const TangherliniGeometry g5(5, 1.0, 1.0);
    const double r0 = tangherlini_radius(g5);
    const TangherliniTortoise t5(g5);
    for (double r : {1.2 * r0, 2.0 * r0, 9.0 * r0}) {
        const double t = r / r0;
        const double hand = r0 * (t + 0.5 * std::log(t - 1.0) - 0.5 * std::log(t + 1.0));
        CHECK(rel_close(t5(r), hand, 1e-13));
    }

    for (int d : {4, 5, 6, 7, 9, 10}) {
        const TangherliniGeometry g(d, 1.0, 1.3);
        const double rh = tangherlini_radius(g);
        const TangherliniTortoise t(g);
        for (double r : {1.001 * rh, 1.7 * rh, 6.0 * rh, 80.0 * rh}) {
            const double direct = 1.0 / (1.0 - std::pow(rh / r, d - 3));
            CHECK(rel_close(t.drstar_dr(r), direct, 1e-12));
            const double fd = richardson_derivative([&](double x) { return t(x); }, r, 1e-5 * r);
            CHECK(rel_close(fd, direct, 1e-7));
        }
        CHECK_THROWS_AS(t(rh), DomainError);
    }

    // d=4 differs from the uncharged RN map only by an additive constant.
    const TangherliniGeometry g4(4, 1.0, 2.0);
    const TangherliniTortoise t4(g4);
    const RNTortoise trn(RNGeometry(1.0, 2.0, 0.0));
    const double shift = t4(5.0) - trn(5.0);
    for (double r : {4.2, 6.0, 17.0, 250.0}) {
        CHECK(rel_close(t4(r) - trn(r), shift, 1e-10));
    }
}

TEST_CASE("dilatonic 2+1 tortoise") {
    const Dilatonic2p1Geometry g(10.0, 1.0, 0.1);
    const Dilatonic2p1Tortoise t(g);
    CHECK(t(40.0) == doctest::Approx(6.797322916870112866).epsilon(1e-15));

    const Horizons2p1 h = dilatonic2p1_horizons(g);
    for (double r : {1.0001 * h.r_plus, 30.0, 70.0, 1000.0}) {
        const double direct = 2.0 * r / lapse_2p1_direct(10.0, 1.0, 0.1, r);
        CHECK(rel_close(t.drstar_dr(r), direct, 1e-11));
        // step must stay well inside the distance to the horizon
        const double step = std::min(1e-5 * r, 1e-2 * (r - h.r_plus));
        const double fd = richardson_derivative([&](double x) { return t(x); }, r, step);
        CHECK(rel_close(fd, direct, 1e-7));
    }

    // Uncharged: inner horizon at zero, log term drops cleanly.
    const Dilatonic2p1Geometry g0(10.0, 0.0, 0.1);
    const Dilatonic2p1Tortoise t0(g0);
    const Horizons2p1 h0 = dilatonic2p1_horizons(g0);
    CHECK(h0.r_minus == 0.0);
    for (double r : {26.0, 50.0}) {
        const double hand = h0.r_plus * std::log(r - h0.r_plus) / (4.0 * 0.1 * h0.r_plus);
        CHECK(rel_close(t0(r), hand, 1e-13));
        const double fd = richardson_derivative([&](double x) { return t0(x); }, r, 1e-5 * r);
        CHECK(rel_close(fd, 2.0 * r / lapse_2p1_direct(10.0, 0.0, 0.1, r), 1e-7));
    }

    CHECK_THROWS_AS(t(h.r_plus), DomainError);
    CHECK_THROWS_AS(t(20.0), DomainError);
}

TEST_CASE("dilatonic 3+1 tortoise") {
    const Dilatonic3p1Geometry g(10.0, 1.0);
    const Dilatonic3p1Tortoise t(g);
    CHECK(t(40.0) == doctest::Approx(40.0 + 20.0 * std::log(20.0)).epsilon(1e-15));

    for (double r : {20.5, 21.0, 35.0, 500.0}) {
        const double direct = r / (r - 20.0);
        CHECK(rel_close(t.drstar_dr(r), direct, 1e-13));
        const double fd = richardson_derivative([&](double x) { return t(x); }, r, 1e-5 * r);
        CHECK(rel_close(fd, direct, 1e-7));
    }
    CHECK_THROWS_AS(t(20.0), DomainError);
}

TEST_CASE("potential profiles and dispatch") {
    const Geometry g = RNGeometry(1.0, 2.0, 1.0);
    const Mode mode(2.0, 1);
    const double rh = outer_horizon(g);

    const PotentialProfile prof = potential_profile(g, mode);
    REQUIRE(prof.r.size() == 512);
    REQUIRE(prof.V.size() == 512);
    CHECK(rel_close(prof.r.front(), 1.001 * rh, 1e-14));
    CHECK(rel_close(prof.r.back(), 50.0 * rh, 1e-14));
    for (std::size_t i = 0; i < prof.r.size(); ++i) {
        CHECK(prof.V[i] == rn_potential(std::get<RNGeometry>(g), 1, prof.r[i]));
    }

    // Explicit grids: offending index is named; empty grid is a no-op.
    std::vector<double> radii = {4.0, 5.0, 6.0, 2.0, 7.0};
    CHECK_THROWS_WITH_AS(potential_profile(g, mode, radii),
                         doctest::Contains("index 3"), DomainError);
    CHECK(potential_profile(g, mode, std::vector<double>{}).r.empty());

    ProfileOptions bad;
    bad.points = 1;
    CHECK_THROWS_AS(potential_profile(g, mode, bad), ValidationError);
    ProfileOptions rev;
    rev.lo_factor = 3.0;
    rev.hi_factor = 2.0;
    CHECK_THROWS_AS(potential_profile(g, mode, rev), ValidationError);

    // Dispatch hits each family, and the 2+1 variant flag reaches the barrier.
    const Geometry g2 = Dilatonic2p1Geometry(10.0, 1.0, 0.1);
    CHECK(rel_close(potential(g2, Mode(2.0, 0), 30.0, Dilatonic2p1Variant::Linearized),
                    2.0391111111111111111, 1e-15));
    const Geometry g3 = Dilatonic3p1Geometry(10.0, 1.0);
    CHECK(rel_close(potential(g3, Mode(2.0, 1), 40.0), 1.0 / 1596.0, 1e-15));
    const Geometry g4 = TangherliniGeometry(5, 1.0, 1.0);
    const double r05 = tangherlini_radius(std::get<TangherliniGeometry>(g4));
    CHECK(rel_close(potential(g4, Mode(2.0, 0), 2.0 * r05), 0.28992236891038619242, 1e-15));
}
