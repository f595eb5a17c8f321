#include <doctest.h>

#include <cmath>

#include "greybody/bounds.hpp"
#include "greybody/errors.hpp"
#include "greybody/geometry.hpp"
#include "greybody/numerics.hpp"

using namespace greybody;

// Anchors frozen from a 50-digit evaluation; short rationals are exact.

TEST_CASE("rn closed bound") {
    // G=1 M=2 Q=1 l=1 w=2: the barrier integral is exactly 1/6.
    const RNGeometry g(1.0, 2.0, 1.0);
    const BoundReport r = bound_rn_closed(g, Mode(2.0, 1));
    CHECK(r.barrier_integral == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(r.bound == doctest::Approx(0.9727286440190829103).epsilon(1e-15));

    // GM=2, A=1 (Q = sqrt(3)), l=0, w=2: z = 1/27.
    const RNGeometry g2(1.0, 2.0, std::sqrt(3.0));
    const BoundReport r2 = bound_rn_closed(g2, Mode(2.0, 0));
    CHECK(r2.barrier_integral == doctest::Approx(1.0 / 27.0).epsilon(1e-13));
    CHECK(r2.bound == doctest::Approx(0.9986295113640518702).epsilon(1e-13));

    // Uncharged reduction: the Schwarzschild expression on a parameter grid.
    for (double GM : {0.5, 2.0, 7.0}) {
        for (int l : {0, 1, 2, 5}) {
            for (double w : {0.1, 1.0, 3.0}) {
                const RNGeometry s(1.0, GM, 0.0);
                const BoundReport a = bound_rn_closed(s, Mode(w, l));
                const BoundReport b = bound_schwarzschild(1.0, GM, Mode(w, l));
                CHECK(rel_close(a.bound, b.bound, 1e-14));
                CHECK(rel_close(a.barrier_integral, (2.0 * l * (l + 1) + 1.0) / (8.0 * GM * w),
                                1e-14));
            }
        }
    }

    // Schwarzschild GM=2 l=0 w=2: z = 1/32.
    CHECK(bound_schwarzschild(1.0, 2.0, Mode(2.0, 0)).bound ==
          doctest::Approx(0.99902407293122355664).epsilon(1e-15));

    // Extremal geometry is fine (A = 0); super-extremal has no exterior region.
    const RNGeometry ext(1.0, 1.0, 1.0);
    const BoundReport re = bound_rn_closed(ext, Mode(1.0, 1));
    CHECK(rel_close(re.barrier_integral, 0.5 * (2.0 / 1.0 + 1.0 / 3.0), 1e-14));
    CHECK_THROWS_AS(bound_rn_closed(RNGeometry(1.0, 1.0, 2.0), Mode(1.0, 0)), NoHorizonError);

    // z scales as 1/omega exactly.
    const double z1 = bound_rn_closed(g, Mode(1.0, 2)).barrier_integral;
    const double z4 = bound_rn_closed(g, Mode(4.0, 2)).barrier_integral;
    CHECK(rel_close(z1, 4.0 * z4, 1e-15));
}

TEST_CASE("tangherlini closed bound") {
    // d=5 with GM = 3 pi / 8 puts the horizon at r0 = 1; l=1 w=2 gives z = 9/8.
    const TangherliniGeometry g(5, 1.0, 1.1780972450961724644);
    CHECK(rel_close(tangherlini_radius(g), 1.0, 1e-14));
    const BoundReport r = bound_tangherlini_closed(g, Mode(2.0, 1));
    CHECK(r.barrier_integral == doctest::Approx(9.0 / 8.0).epsilon(1e-13));
    CHECK(r.bound == doctest::Approx(0.34503177777025192203).epsilon(1e-13));

    // d=4 is the Schwarzschild expression.
    const TangherliniGeometry g4(4, 1.0, 2.0);
    for (int l : {0, 1, 3}) {
        const BoundReport a = bound_tangherlini_closed(g4, Mode(1.5, l));
        const BoundReport b = bound_schwarzschild(1.0, 2.0, Mode(1.5, l));
        CHECK(rel_close(a.bound, b.bound, 1e-14));
    }

    // Deeper in d the s-wave integral grows like (d-2)(d-3)/(8 w r0).
    const TangherliniGeometry g7(7, 1.0, 1.0);
    const double r07 = tangherlini_radius(g7);
    CHECK(rel_close(bound_tangherlini_closed(g7, Mode(2.0, 0)).barrier_integral,
                    20.0 / (16.0 * r07), 1e-14));
}

TEST_CASE("dilatonic 3+1 closed bound") {
    const Dilatonic3p1Geometry g(10.0, 1.0);
    const BoundReport r = bound_dilatonic3p1_closed(g, Mode(2.0, 1));
    CHECK(r.barrier_integral == doctest::Approx(0.025062709117721410215).epsilon(1e-15));
    CHECK(r.bound == doctest::Approx(0.99937212355747749233).epsilon(1e-15));

    // Equivalent product form 4 a^p b^p / (a^p + b^p)^2 with a = 2M^2,
    // b = 2M^2 - Q^2, p = l(l+1) M / (w Q^2).
    const double a = 200.0, b = 199.0, p = 10.0;
    const double prod = 4.0 * std::pow(a, p) * std::pow(b, p) /
                        std::pow(std::pow(a, p) + std::pow(b, p), 2);
    CHECK(rel_close(r.bound, prod, 1e-12));

    // Q -> 0 limit is l(l+1)/(4 M w), reached continuously.
    CHECK(bound_dilatonic3p1_closed(Dilatonic3p1Geometry(10.0, 0.0), Mode(2.0, 1))
              .barrier_integral == doctest::Approx(0.025).epsilon(1e-15));
    const double ztiny =
        bound_dilatonic3p1_closed(Dilatonic3p1Geometry(10.0, 1e-8), Mode(2.0, 1))
            .barrier_integral;
    CHECK(rel_close(ztiny, 0.025, 1e-12));

    // l = 0 has no barrier at all: the bound saturates at 1.
    CHECK(bound_dilatonic3p1_closed(g, Mode(2.0, 0)).bound == 1.0);
}

TEST_CASE("dilatonic 2+1 closed bound") {
    // m=0 M=10 Q=0 Lambda=0.3 w=2, with the full five-term breakdown.
    const Dilatonic2p1Geometry g(10.0, 0.0, 0.3);
    Dilatonic2p1Breakdown bd{};
    const BoundReport r = bound_dilatonic2p1_closed(g, Mode(2.0, 0), &bd);
    CHECK(bd.x == doctest::Approx(0.78571428571428571429).epsilon(1e-15));
    CHECK(bd.series == doctest::Approx(0.52604309216397929434).epsilon(1e-14));
    CHECK(bd.t1 == 0.0);
    CHECK(bd.t2 == doctest::Approx(5.7291666666666666667).epsilon(1e-15));
    CHECK(bd.t3 == doctest::Approx(-5.2604309216397929434).epsilon(1e-14));
    CHECK(bd.t4 == doctest::Approx(0.98633079780746117689).epsilon(1e-14));
    CHECK(bd.t5 == 0.0);
    CHECK(bd.z == doctest::Approx(0.72753327141716745007).epsilon(1e-13));
    CHECK(r.bound == doctest::Approx(0.61367073592160454213).epsilon(1e-13));

    // Charged point used by the frequency sweep figure.
    const Dilatonic2p1Geometry gq(10.0, 1.0, 0.1);
    CHECK(bound_dilatonic2p1_closed(gq, Mode(2.0, 0)).bound ==
          doctest::Approx(0.058927452933712557509).epsilon(1e-13));

    // m = 1 brings in t1 and the m^2 pieces.
    const BoundReport rm = bound_dilatonic2p1_closed(gq, Mode(2.0, 1));
    CHECK(rm.barrier_integral == doctest::Approx(2.1680920894970077536).epsilon(1e-13));
    CHECK(rm.bound == doctest::Approx(0.051001880164652968768).epsilon(1e-13));

    // Large Lambda drives the regularized z negative; the bound stays in (0, 1].
    const Dilatonic2p1Geometry gl(10.0, 0.0, 2.5);
    Dilatonic2p1Breakdown bdl{};
    const BoundReport rl = bound_dilatonic2p1_closed(gl, Mode(1.0, 0), &bdl);
    CHECK(bdl.z < 0.0);
    CHECK(rl.barrier_integral == -bdl.z);
    CHECK(rl.bound > 0.0);
    CHECK(rl.bound <= 1.0);
}

TEST_CASE("quadrature agrees with the closed forms") {
    const QuadratureConfig cfg;

    // RN: the exact integral is 2/3 here.
    const Geometry grn = RNGeometry(1.0, 2.0, 1.0);
    const QuadratureBound qr = bound_quadrature(grn, Mode(2.0, 1), cfg);
    CHECK(qr.integral == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(rel_close(qr.bound, bound_rn_closed(RNGeometry(1.0, 2.0, 1.0), Mode(2.0, 1)).bound,
                    1e-9));
    CHECK(qr.s_lo < 0.0);
    CHECK(qr.s_hi > 0.0);
    CHECK(qr.error_estimate <= 1e-8 * qr.integral + 1e-12);

    // All extremality classes and a charge spread, l = 0,1,2.
    for (double Q : {0.0, 1.0, 1.9, 2.0}) {
        const RNGeometry g(1.0, 2.0, Q); // extremal at Q = 2
        for (int l : {0, 1, 2}) {
            const Mode mode(0.7, l);
            const double closed = bound_rn_closed(g, mode).barrier_integral;
            const double quad = bound_quadrature(Geometry(g), mode, cfg).barrier_integral;
            CHECK(rel_close(closed, quad, 1e-8));
        }
    }

    // Tangherlini d = 4..8; frozen d=5 GM=1 l=1 integral.
    const Geometry g5 = TangherliniGeometry(5, 1.0, 1.0);
    CHECK(bound_quadrature(g5, Mode(2.0, 1), cfg).integral ==
          doctest::Approx(4.8843084682683067007).epsilon(1e-9));
    for (int d : {4, 5, 6, 7, 8}) {
        const TangherliniGeometry g(d, 1.0, 1.0);
        for (int l : {0, 2}) {
            const Mode mode(1.3, l);
            CHECK(rel_close(bound_tangherlini_closed(g, mode).bound,
                            bound_quadrature(Geometry(g), mode, cfg).bound, 1e-9));
        }
    }

    // 3+1: frozen M=10 Q=1 l=1 integral, plus a charge spread at l = 1, 2.
    const Geometry g31 = Dilatonic3p1Geometry(10.0, 1.0);
    CHECK(bound_quadrature(g31, Mode(2.0, 1), cfg).integral ==
          doctest::Approx(0.10025083647088564086).epsilon(1e-9));
    for (double Q : {0.0, 4.0, 13.0}) {
        const Dilatonic3p1Geometry g(10.0, Q);
        for (int l : {1, 2}) {
            const Mode mode(0.4, l);
            CHECK(rel_close(bound_dilatonic3p1_closed(g, mode).bound,
                            bound_quadrature(Geometry(g), mode, cfg).bound, 1e-9));
        }
    }
    // l = 0: no barrier, zero integral, bound 1 on both routes.
    const QuadratureBound q0 = bound_quadrature(g31, Mode(2.0, 0), cfg);
    CHECK(q0.integral == 0.0);
    CHECK(q0.bound == 1.0);
}

TEST_CASE("2+1 quadrature names its divergent term") {
    const Geometry g = Dilatonic2p1Geometry(10.0, 1.0, 0.1);

    QuadratureConfig full;
    full.linearized_2p1 = false;
    CHECK_THROWS_WITH_AS(bound_quadrature(g, Mode(2.0, 0), full),
                         doctest::Contains("14 Lambda^2 r"), DivergentIntegralError);

    try {
        bound_quadrature(g, Mode(2.0, 1));
        FAIL("expected DivergentIntegralError");
    } catch (const DivergentIntegralError& e) {
        CHECK(e.term == "(8 m^2 + 6 m) Lambda");
    }

    try {
        bound_quadrature(g, Mode(2.0, 0));
        FAIL("expected DivergentIntegralError");
    } catch (const DivergentIntegralError& e) {
        CHECK(e.term == "V(r_plus) != 0");
        CHECK(std::string(e.what()).find("horizon") != std::string::npos);
    }

    // The closed form stays available for the same inputs.
    CHECK(bound_dilatonic2p1_closed(std::get<Dilatonic2p1Geometry>(g), Mode(2.0, 0)).bound >
          0.0);
}

TEST_CASE("quadrature config validation and failure") {
    const Geometry g = RNGeometry(1.0, 2.0, 1.0);

    QuadratureConfig bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(bound_quadrature(g, Mode(1.0, 1), bad), ValidationError);
    bad = {};
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(bound_quadrature(g, Mode(1.0, 1), bad), ValidationError);
    bad = {};
    bad.max_depth = 0;
    CHECK_THROWS_AS(bound_quadrature(g, Mode(1.0, 1), bad), ValidationError);

    // A depth-1 run cannot hit a 1e-14 relative target on this integrand.
    QuadratureConfig strict;
    strict.max_depth = 1;
    strict.rel_tol = 1e-14;
    strict.abs_tol = 1e-16;
    CHECK_THROWS_AS(bound_quadrature(g, Mode(1.0, 1), strict), ConvergenceError);
}
