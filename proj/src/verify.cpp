#include "greybody/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "greybody/bounds.hpp"
#include "greybody/comparators.hpp"
#include "greybody/errors.hpp"
#include "greybody/geometry.hpp"
#include "greybody/numerics.hpp"
#include "greybody/potentials.hpp"
#include "greybody/scattering.hpp"
#include "greybody/sweep.hpp"

namespace greybody {

namespace {

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

//! Randomized instances are drawn through fixed maps from raw mt19937 words,
//! not through std::uniform_real_distribution, whose output is
//! implementation-defined.  A seed therefore pins the same instances
//! everywhere.
struct Rng {
    std::mt19937 gen;

    explicit Rng(std::uint32_t seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(gen()) * (1.0 / 4294967296.0));
    }
    double log_uniform(double lo, double hi) {
        return lo * std::exp(uniform(0.0, 1.0) * std::log(hi / lo));
    }
    int pick(int n) {
        return static_cast<int>((static_cast<std::uint64_t>(gen()) * n) >> 32);
    }
};

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

std::vector<double> column(const Table& t, const std::string& name) {
    std::size_t idx = t.columns.size();
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i] == name) idx = i;
    if (idx == t.columns.size())
        throw ValidationError("verification: table has no column " + name);
    std::vector<double> out;
    out.reserve(t.rows.size());
    for (const auto& row : t.rows) out.push_back(std::stod(row.at(idx)));
    return out;
}

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) return false;
    return true;
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

// --- check 1 ---------------------------------------------------------------

CheckResult check_reduction_identities() {
    const double masses[] = {0.5, 1.0, 2.0, 5.0, 10.0};
    const double omegas[] = {0.3, 1.0, 2.0, 10.0};
    int n = 0;
    double worst = 0.0;
    for (double gm : masses) {
        for (int l = 0; l <= 4; ++l) {
            for (double omega : omegas) {
                const Mode mode(omega, l);
                const double z = (2.0 * l * (l + 1) + 1.0) / (8.0 * gm * omega);
                const double t = sech_squared(z);
                const BoundReport rn = bound_closed(Geometry(RNGeometry(1.0, gm, 0.0)), mode);
                const BoundReport tang =
                    bound_closed(Geometry(TangherliniGeometry(4, 1.0, gm)), mode);
                worst = std::max({worst, rel_diff(rn.barrier_integral, z),
                                  rel_diff(rn.bound, t), rel_diff(tang.barrier_integral, z),
                                  rel_diff(tang.bound, t)});
                n += 4;
            }
        }
    }
    return {"", worst <= 1e-14,
            fmt("%d identities against the Schwarzschild closed form, worst rel %.2e "
                "(tol 1e-14)",
                n, worst)};
}

// --- check 2 ---------------------------------------------------------------

CheckResult check_closed_vs_quadrature(std::uint32_t seed) {
    Rng rng(seed + 1);
    const QuadratureConfig qc;
    int n = 0;
    double worst = 0.0;
    auto compare = [&](const Geometry& g, int l, double omega) {
        const Mode mode(omega, l);
        const BoundReport closed = bound_closed(g, mode);
        const QuadratureBound quad = bound_quadrature(g, mode, qc);
        worst = std::max(worst, rel_diff(quad.barrier_integral, closed.barrier_integral));
        ++n;
    };
    const double omegas[] = {0.4, 1.7, 4.1};
    for (int i = 0; i < 20; ++i) {
        const double m = rng.uniform(0.4, 5.0);
        const double q = rng.uniform(0.0, 0.95);
        const Geometry g = RNGeometry(1.0, m, q * m);
        for (int l = 0; l <= 2; ++l)
            for (double omega : omegas) compare(g, l, omega);
    }
    for (int d = 4; d <= 8; ++d) {
        const Geometry g = TangherliniGeometry(d, 1.0, rng.uniform(0.5, 3.0));
        for (int l = 0; l <= 2; ++l)
            for (double omega : omegas) compare(g, l, omega);
    }
    for (int i = 0; i < 10; ++i) {
        const double m = rng.uniform(0.5, 8.0);
        const double q = rng.uniform(0.0, 0.95);
        const Geometry g = Dilatonic3p1Geometry(m, q * std::sqrt(2.0) * m);
        for (int l = 1; l <= 2; ++l)
            for (double omega : {0.7, 2.3}) compare(g, l, omega);
    }
    return {"", worst <= 1e-7,
            fmt("%d closed barrier integrals against quadrature, worst rel %.2e (tol 1e-7)",
                n, worst)};
}

// --- checks 3 and 7 share one battery of numeric transmissions --------------

struct Battery {
    int runs = 0;
    int violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    double max_flux = 0.0;
    std::string worst;
};

Battery run_battery(std::uint32_t seed) {
    Rng rng(seed + 3);
    Battery b;
    auto run = [&b](const Geometry& g, int l, double c, const std::string& tag) {
        const double omega = c / outer_horizon(g);
        const Mode mode(omega, l);
        const OracleResult oracle = transmission_numeric(g, mode);
        const double bound = bound_closed(g, mode).bound;
        const double margin = oracle.T + 1e-6 - bound;
        b.max_flux = std::max(b.max_flux, oracle.flux_residual);
        ++b.runs;
        if (margin < 0.0) ++b.violations;
        if (margin < b.min_margin) {
            b.min_margin = margin;
            b.worst = fmt("%s l=%d omega=%.4g", tag.c_str(), l, omega);
        }
    };
    for (int i = 0; i < 50; ++i) {
        const double m = rng.uniform(0.4, 5.0);
        const double q = rng.uniform(0.0, 0.9);
        const int l = rng.pick(3);
        const double c = rng.log_uniform(0.1, 10.0);
        run(RNGeometry(1.0, m, q * m), l, c, fmt("rn M=%.4g q=%.3g", m, q));
    }
    for (int i = 0; i < 50; ++i) {
        const int d = 4 + rng.pick(5);
        const double m = rng.uniform(0.5, 3.0);
        const int l = rng.pick(3);
        const double c = rng.log_uniform(0.1, 10.0);
        run(TangherliniGeometry(d, 1.0, m), l, c, fmt("tangherlini d=%d M=%.4g", d, m));
    }
    for (int i = 0; i < 50; ++i) {
        const double m = rng.uniform(0.5, 8.0);
        const double q = rng.uniform(0.0, 0.95);
        const int l = 1 + rng.pick(2);
        const double c = rng.log_uniform(0.1, 10.0);
        run(Dilatonic3p1Geometry(m, q * std::sqrt(2.0) * m), l, c,
            fmt("dilatonic3p1 M=%.4g q=%.3g", m, q));
    }
    return b;
}

CheckResult check_oracle_dominance(const Battery& b) {
    return {"", b.violations == 0,
            fmt("%d randomized transmissions, %d below the bound, smallest margin %.2e "
                "at %s",
                b.runs, b.violations, b.min_margin, b.worst.c_str())};
}

CheckResult check_oracle_self_consistency(const Battery& b) {
    struct Case {
        Geometry g;
        int l;
        double omega;
    };
    // Instances span T from about 0.1 to about 1 across the three plane-wave
    // families.  Exponentially small transmissions are excluded on purpose:
    // resolving T ~ 1e-6 to 1e-5 relative would need far tighter tolerances
    // than the oracle's dominance role requires, and the stability statement
    // is about the regime where T carries information.
    const std::vector<Case> cases = {
        {RNGeometry(1.0, 2.0, 1.0), 0, 0.3},
        {RNGeometry(1.0, 2.0, 1.0), 1, 0.35},
        {RNGeometry(1.0, 1.0, 0.0), 0, 0.25},
        {RNGeometry(1.0, 0.5, 0.2), 2, 1.0},
        {TangherliniGeometry(5, 1.0, 1.0), 0, 1.0},
        {TangherliniGeometry(6, 1.0, 1.0), 1, 2.2},
        {TangherliniGeometry(7, 1.0, 2.0), 2, 2.5},
        {TangherliniGeometry(8, 1.0, 1.0), 0, 2.0},
        {Dilatonic3p1Geometry(10.0, 1.0), 1, 0.03},
        {Dilatonic3p1Geometry(10.0, 8.0), 1, 0.03},
        {Dilatonic3p1Geometry(1.0, 0.5), 1, 0.25},
        {Dilatonic3p1Geometry(2.0, 1.0), 2, 0.25},
    };
    double worst_shift = 0.0;
    OracleConfig halved;
    halved.integrator_tolerance *= 0.5;
    for (const Case& c : cases) {
        const Mode mode(c.omega, c.l);
        const double t1 = transmission_numeric(c.g, mode).T;
        const double t2 = transmission_numeric(c.g, mode, halved).T;
        worst_shift = std::max(worst_shift, rel_diff(t2, t1));
    }
    const bool ok = b.max_flux <= 1e-6 && worst_shift <= 1e-5;
    return {"", ok,
            fmt("flux residual at most %.2e over %d runs (tol 1e-6); tolerance halving "
                "moves T by at most rel %.2e over %zu cases (tol 1e-5)",
                b.max_flux, b.runs, worst_shift, cases.size())};
}

// --- check 4 ---------------------------------------------------------------

CheckResult check_exact_2p1() {
    const Table t = run_figure("fig7");
    const std::vector<double> bound = column(t, "bound");
    const std::vector<double> exact = column(t, "exact");
    double worst_gap = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < bound.size(); ++i)
        worst_gap = std::max(worst_gap, bound[i] - exact[i]);
    const bool below = worst_gap <= 1e-9;
    const bool increasing = strictly_increasing(exact);
    const bool opens = exact.back() > 0.999;
    return {"", below && increasing && opens,
            fmt("%zu points: max(bound - exact) = %.2e (tol 1e-9), exact %s, "
                "exact(omega = 2) = %.6f",
                bound.size(), worst_gap,
                increasing ? "strictly increasing" : "NOT monotone", exact.back())};
}

// --- check 5 ---------------------------------------------------------------

CheckResult check_monotone_sweeps() {
    int relations = 0;
    std::string failures;
    auto expect = [&](bool ok, const char* what) {
        ++relations;
        if (!ok) {
            if (!failures.empty()) failures += "; ";
            failures += what;
        }
    };

    const Table f2 = run_figure("fig2");
    for (const char* c : {"bound_l0", "bound_l1", "bound_l2"})
        expect(strictly_increasing(column(f2, c)), "fig2 bound not increasing in A");
    {
        const auto l0 = column(f2, "bound_l0");
        const auto l1 = column(f2, "bound_l1");
        const auto l2 = column(f2, "bound_l2");
        bool ordered = true;
        for (std::size_t i = 0; i < l0.size(); ++i)
            ordered = ordered && l1[i] < l0[i] && l2[i] < l1[i];
        expect(ordered, "fig2 bound not decreasing in l");
    }

    const Table f5 = run_figure("fig5");
    std::vector<std::vector<double>> by_d;
    for (const char* c : {"bound_d4", "bound_d5", "bound_d6", "bound_d7", "bound_d8"}) {
        by_d.push_back(column(f5, c));
        expect(strictly_increasing(by_d.back()), "fig5 bound not increasing in M");
    }
    for (std::size_t k = 1; k < by_d.size(); ++k) {
        bool ordered = true;
        for (std::size_t i = 0; i < by_d[k].size(); ++i)
            ordered = ordered && by_d[k][i] < by_d[k - 1][i];
        expect(ordered, "fig5 bound not decreasing in d");
    }

    expect(strictly_decreasing(column(run_figure("fig8"), "bound")),
           "fig8 bound not decreasing in Q");
    expect(strictly_decreasing(column(run_figure("fig10"), "bound")),
           "fig10 bound not decreasing in Q");
    expect(strictly_increasing(column(run_figure("lambda"), "bound")),
           "lambda bound not increasing in Lambda");

    return {"", failures.empty(),
            failures.empty()
                ? fmt("%d ordering relations hold across the fig2, fig5, fig8, fig10 and "
                      "lambda tables",
                      relations)
                : failures};
}

// --- check 6 ---------------------------------------------------------------

CheckResult check_asymptotic_convergence() {
    const RNGeometry g(1.0, 2.0, 1.0);
    auto gap = [&g](double omega) {
        return std::abs(asymptotic_rn(g, omega).value -
                        bound_closed(Geometry(g), Mode(omega, 0)).bound);
    };
    const double low = gap(1.0);
    const double high = gap(10.0);
    return {"", high < low,
            fmt("|asymptotic - bound| shrinks from %.2e at omega = 1 to %.2e at "
                "omega = 10",
                low, high)};
}

// --- check 8 ---------------------------------------------------------------

CheckResult check_tortoise_derivatives() {
    int n = 0;
    double worst = 0.0;
    auto probe = [&n, &worst](const auto& tortoise, double r, double h) {
        const double fd =
            richardson_derivative([&tortoise](double x) { return tortoise(x); }, r, h);
        worst = std::max(worst, rel_diff(fd, tortoise.drstar_dr(r)));
        ++n;
    };
    auto sweep_outside = [&probe](const auto& tortoise, double r_h) {
        for (double gap : log_grid(1e-4, 10.0, 20)) {
            const double r = r_h * (1.0 + gap);
            probe(tortoise, r, std::min(1e-5 * r, 1e-2 * (r - r_h)));
        }
    };
    sweep_outside(RNTortoise(RNGeometry(1.0, 2.0, 1.0)),
                  rn_horizons(RNGeometry(1.0, 2.0, 1.0)).r_plus);
    sweep_outside(RNTortoise(RNGeometry(1.0, 1.0, 1.0)), 1.0);
    {
        const RNTortoise super(RNGeometry(1.0, 1.0, 1.2));
        for (double r : log_grid(0.05, 30.0, 20)) probe(super, r, 1e-5 * r);
    }
    {
        const TangherliniGeometry g(6, 1.0, 1.0);
        sweep_outside(TangherliniTortoise(g), tangherlini_radius(g));
    }
    {
        const Dilatonic2p1Geometry g(10.0, 1.0, 0.1);
        sweep_outside(Dilatonic2p1Tortoise(g), dilatonic2p1_horizons(g).r_plus);
    }
    {
        const Dilatonic3p1Geometry g(10.0, 1.0);
        sweep_outside(Dilatonic3p1Tortoise(g), g.r_plus());
    }
    return {"", worst <= 1e-6,
            fmt("%d finite-difference probes of the tortoise maps, worst rel %.2e "
                "(tol 1e-6)",
                n, worst)};
}

// --- driver ------------------------------------------------------------------

template <typename F>
CheckResult guarded(const char* name, F&& body) {
    CheckResult r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("unexpected exception: ") + e.what();
    }
    r.name = name;
    return r;
}

} // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verification(VerifySuite suite, std::uint32_t seed) {
    VerifyReport rep;
    rep.suite = suite;
    rep.seed = seed;
    const bool full = suite == VerifySuite::Full;

    rep.checks.push_back(guarded("reduction_identities", check_reduction_identities));
    rep.checks.push_back(guarded("closed_form_vs_quadrature",
                                 [seed] { return check_closed_vs_quadrature(seed); }));
    Battery battery;
    if (full)
        rep.checks.push_back(guarded("oracle_dominance", [&battery, seed] {
            battery = run_battery(seed);
            return check_oracle_dominance(battery);
        }));
    rep.checks.push_back(guarded("exact_2p1_comparison", check_exact_2p1));
    rep.checks.push_back(guarded("monotone_sweeps", check_monotone_sweeps));
    rep.checks.push_back(guarded("asymptotic_convergence", check_asymptotic_convergence));
    if (full)
        rep.checks.push_back(guarded("oracle_self_consistency", [&battery] {
            if (battery.runs == 0)
                throw ConvergenceError("dominance battery did not run");
            return check_oracle_self_consistency(battery);
        }));
    rep.checks.push_back(guarded("tortoise_derivatives", check_tortoise_derivatives));
    return rep;
}

Table verify_report_table(const VerifyReport& report) {
    Table t;
    t.comments.push_back(std::string("greybody ") + kToolVersion);
    t.comments.push_back(std::string("verification: ") +
                         (report.suite == VerifySuite::Full ? "full" : "fast"));
    t.comments.push_back("seed: " + std::to_string(report.seed));
    t.columns = {"check", "result", "detail"};
    for (const CheckResult& c : report.checks)
        t.rows.push_back({c.name, c.passed ? "pass" : "fail", c.detail});
    return t;
}

} // namespace greybody
