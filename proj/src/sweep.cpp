#include "greybody/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <thread>
#include <variant>

#include "greybody/errors.hpp"
#include "greybody/numerics.hpp"

namespace greybody {

namespace {

//! Shorter prints for header comments; data cells use format_number.
std::string short_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

const char* angular_letter(Family f) { return f == Family::Dilatonic2p1 ? "m" : "l"; }

const std::set<std::string>& known_keys(Family f) {
    static const std::set<std::string> rn{"G", "M", "Q", "P", "A"};
    static const std::set<std::string> tang{"G", "M", "d"};
    static const std::set<std::string> d2p1{"M", "Q", "Lambda"};
    static const std::set<std::string> d3p1{"M", "Q"};
    switch (f) {
    case Family::ReissnerNordstrom: return rn;
    case Family::Tangherlini: return tang;
    case Family::Dilatonic2p1: return d2p1;
    default: return d3p1;
    }
}

void check_outputs(Family f, const std::vector<Output>& outputs) {
    for (Output o : outputs) {
        switch (o) {
        case Output::Oracle:
            if (f == Family::Dilatonic2p1)
                throw UnsupportedFamilyError(
                    "oracle output: numeric transmission is not defined for the "
                    "2+1 dilatonic family");
            break;
        case Output::BoundQuadrature:
            if (f == Family::Dilatonic2p1)
                throw ValidationError(
                    "bound_quadrature output: the 2+1 barrier integral diverges at the "
                    "horizon; only the regularized closed form is available");
            break;
        case Output::WKB:
        case Output::Asymptotic:
            if (f != Family::ReissnerNordstrom)
                throw ValidationError("output " + output_name(o) +
                                      " is defined for the rn family only");
            break;
        case Output::Exact2p1:
            if (f != Family::Dilatonic2p1)
                throw ValidationError("output exact is defined for the dilatonic2p1 family only");
            break;
        default:
            break;
        }
    }
}

std::string output_comment(Output o, Family family, const RunConfig& cfg) {
    switch (o) {
    case Output::Bound:
        return "output bound: sech^2 of the closed-form barrier integral";
    case Output::BoundQuadrature:
        return "output bound_quadrature: sech^2 of the Gauss-Kronrod barrier integral "
               "(abs_tol " + short_num(cfg.quadrature.abs_tol) +
               ", rel_tol " + short_num(cfg.quadrature.rel_tol) + ")";
    case Output::WKB:
        return "output wkb: semiclassical tunneling estimate exp(-2 pi E / hbar), hbar = " +
               short_num(cfg.wkb.hbar);
    case Output::Asymptotic:
        return "output asymptotic: large-omega transmission from the damped-mode "
               "parameters beta, beta_I";
    case Output::Exact2p1:
        return "output exact: closed-form 2+1 transmission";
    case Output::Oracle:
        return "output oracle: numeric plane-wave matched transmission (tolerance " +
               short_num(cfg.oracle.integrator_tolerance) + ")";
    case Output::Potential:
        if (family == Family::Dilatonic2p1)
            return std::string("output potential: radial barrier (") +
                   (cfg.potential_variant == Dilatonic2p1Variant::Full ? "full" : "linearized") +
                   " variant)";
        return "output potential: radial barrier";
    }
    throw ValidationError("unknown output");
}

std::string param_list(const ParamMap& params) {
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty()) s += ", ";
        s += k + " = " + short_num(v);
    }
    return s;
}

double eval_cell(Family family, const ParamMap& params, int angular, Output output,
                 const RunConfig& cfg) {
    const double omega = params.count("omega") ? params.at("omega") : 1.0;
    const Mode mode(omega, angular);
    const Geometry g = build_geometry(family, params, cfg.radius_convention);
    switch (output) {
    case Output::Bound:
        return bound_closed(g, mode).bound;
    case Output::BoundQuadrature:
        return bound_quadrature(g, mode, cfg.quadrature).bound;
    case Output::WKB:
        return wkb_rn(std::get<RNGeometry>(g), omega, cfg.wkb).value;
    case Output::Asymptotic:
        return asymptotic_rn(std::get<RNGeometry>(g), omega).value;
    case Output::Exact2p1:
        return exact_dilatonic2p1(std::get<Dilatonic2p1Geometry>(g), angular, omega).value;
    case Output::Oracle:
        return transmission_numeric(g, mode, cfg.oracle).T;
    case Output::Potential:
        return potential(g, mode, params.at("r"), cfg.potential_variant);
    }
    throw ValidationError("unknown output");
}

struct ColumnPlan {
    std::string name;
    const SweepVariant* variant; //!< null when the sweep has no variants
    int angular;
    Output output;
};

std::vector<ColumnPlan> build_plan(const SweepSpec& spec) {
    std::vector<ColumnPlan> plan;
    const std::size_t nvar = spec.variants.empty() ? 1 : spec.variants.size();
    for (std::size_t v = 0; v < nvar; ++v) {
        const SweepVariant* var = spec.variants.empty() ? nullptr : &spec.variants[v];
        for (int a : spec.angulars) {
            for (Output o : spec.outputs) {
                std::string name = output_name(o);
                if (var) name += "_" + var->label;
                if (spec.angulars.size() > 1)
                    name += std::string("_") + angular_letter(spec.family) + std::to_string(a);
                plan.push_back({std::move(name), var, a, o});
            }
        }
    }
    return plan;
}

struct RowOutcome {
    std::vector<double> cells;
    std::vector<std::string> errors;
    std::exception_ptr first_error;
};

RowOutcome eval_row(std::size_t index, double value, const SweepSpec& spec,
                    const std::vector<ColumnPlan>& plan, const RunConfig& cfg) {
    RowOutcome out;
    out.cells.assign(plan.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t c = 0; c < plan.size(); ++c) {
        const ColumnPlan& col = plan[c];
        const std::string where = "row " + std::to_string(index) + " (" + spec.swept + " = " +
                                  format_number(value) + ") " + col.name + ": ";
        try {
            ParamMap params = spec.fixed;
            if (col.variant)
                for (const auto& [k, v] : col.variant->overrides) params[k] = v;
            params[spec.swept] = value;
            out.cells[c] = eval_cell(spec.family, params, col.angular, col.output, cfg);
        } catch (const std::exception& e) {
            if (!out.first_error) out.first_error = std::current_exception();
            out.errors.push_back(where + e.what());
        } catch (...) {
            if (!out.first_error) out.first_error = std::current_exception();
            out.errors.push_back(where + "unknown error");
        }
    }
    return out;
}

void parallel_rows(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& work) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) work(i);
        });
    for (std::thread& th : pool) th.join();
}

std::vector<std::string> sweep_comments(const SweepSpec& spec, const RunConfig& cfg) {
    std::vector<std::string> c;
    c.push_back(std::string("greybody ") + kToolVersion);
    c.push_back("family: " + family_name(spec.family));
    c.push_back("sweep: " + spec.swept +
                (spec.grid.scale == GridScale::Log ? " log [" : " linear [") +
                short_num(spec.grid.min) + ", " + short_num(spec.grid.max) + "] x " +
                std::to_string(spec.grid.count));
    std::string ang;
    for (std::size_t i = 0; i < spec.angulars.size(); ++i) {
        if (i) ang += ", ";
        ang += std::to_string(spec.angulars[i]);
    }
    c.push_back(std::string("angular: ") + angular_letter(spec.family) + " = " + ang);
    if (!spec.fixed.empty()) c.push_back("parameters: " + param_list(spec.fixed));
    if (!spec.variants.empty()) {
        std::string vs;
        for (const SweepVariant& v : spec.variants) {
            if (!vs.empty()) vs += "; ";
            vs += v.label + " (" + param_list(v.overrides) + ")";
        }
        c.push_back("variants: " + vs);
    }
    for (Output o : spec.outputs) c.push_back(output_comment(o, spec.family, cfg));
    if (spec.family == Family::Tangherlini)
        c.push_back(std::string("radius convention: ") +
                    (cfg.radius_convention == RadiusConvention::DimensionallyConsistent
                         ? "dimensionally consistent"
                         : "mass-coefficient literal"));
    return c;
}

} // namespace

std::string output_name(Output o) {
    switch (o) {
    case Output::Bound: return "bound";
    case Output::BoundQuadrature: return "bound_quadrature";
    case Output::WKB: return "wkb";
    case Output::Asymptotic: return "asymptotic";
    case Output::Exact2p1: return "exact";
    case Output::Oracle: return "oracle";
    case Output::Potential: return "potential";
    }
    throw ValidationError("unknown output");
}

Output output_from_name(const std::string& name) {
    if (name == "bound") return Output::Bound;
    if (name == "bound_quadrature" || name == "quadrature") return Output::BoundQuadrature;
    if (name == "wkb") return Output::WKB;
    if (name == "asymptotic") return Output::Asymptotic;
    if (name == "exact" || name == "exact2p1") return Output::Exact2p1;
    if (name == "oracle") return Output::Oracle;
    if (name == "potential") return Output::Potential;
    throw ValidationError("unknown output name " + name +
                          "; valid: bound, bound_quadrature, wkb, asymptotic, exact, "
                          "oracle, potential");
}

std::vector<double> make_grid(const GridSpec& grid) {
    if (!std::isfinite(grid.min) || !std::isfinite(grid.max))
        throw ValidationError("grid endpoints must be finite");
    if (grid.count < 2)
        throw ValidationError("grid count must be >= 2, got " + std::to_string(grid.count));
    if (!(grid.min < grid.max))
        throw ValidationError("grid needs min < max, got [" + format_number(grid.min) + ", " +
                              format_number(grid.max) + "]");
    if (grid.scale == GridScale::Log && !(grid.min > 0.0))
        throw ValidationError("log grid needs min > 0, got " + format_number(grid.min));
    return grid.scale == GridScale::Log ? log_grid(grid.min, grid.max, grid.count)
                                        : linear_grid(grid.min, grid.max, grid.count);
}

Geometry build_geometry(Family family, const ParamMap& params, RadiusConvention convention) {
    ParamMap p = params;
    p.erase("omega");
    p.erase("r");
    auto take = [&p](const char* key) -> std::optional<double> {
        auto it = p.find(key);
        if (it == p.end()) return std::nullopt;
        const double v = it->second;
        p.erase(it);
        return v;
    };
    auto require = [&take, family](const char* key) {
        const auto v = take(key);
        if (!v)
            throw ValidationError(family_name(family) + ": missing required parameter " + key);
        return *v;
    };
    auto rest_known = [&p, family] {
        if (p.empty()) return;
        std::string keys;
        for (const auto& [k, v] : p) {
            (void)v;
            if (!keys.empty()) keys += ", ";
            keys += k;
        }
        throw ValidationError(family_name(family) + ": unknown parameter(s) " + keys);
    };

    switch (family) {
    case Family::ReissnerNordstrom: {
        const double G = take("G").value_or(1.0);
        const double M = require("M");
        const auto A = take("A");
        const auto Q = take("Q");
        const double P = take("P").value_or(0.0);
        rest_known();
        if (A && Q) throw ValidationError("rn: give Q or A, not both");
        double q = Q.value_or(0.0);
        if (A) {
            if (P != 0.0) throw ValidationError("rn: parameter A requires P = 0");
            const double q2 = (G * G * M * M - *A * *A) / G;
            if (*A < 0.0 || q2 < 0.0)
                throw ValidationError("rn: A must lie in [0, GM], got " + format_number(*A));
            q = std::sqrt(q2);
        }
        return RNGeometry(G, M, q, P);
    }
    case Family::Tangherlini: {
        const double dv = require("d");
        const double G = take("G").value_or(1.0);
        const double M = require("M");
        rest_known();
        const double dr = std::nearbyint(dv);
        if (!(std::abs(dv - dr) == 0.0))
            throw ValidationError("tangherlini: d must be an integer, got " + format_number(dv));
        return TangherliniGeometry(static_cast<int>(dr), G, M, convention);
    }
    case Family::Dilatonic2p1: {
        const double M = require("M");
        const double Q = require("Q");
        const double L = require("Lambda");
        rest_known();
        return Dilatonic2p1Geometry(M, Q, L);
    }
    case Family::Dilatonic3p1: {
        const double M = require("M");
        const double Q = require("Q");
        rest_known();
        return Dilatonic3p1Geometry(M, Q);
    }
    }
    throw ValidationError("unknown family");
}

void validate_spec(const SweepSpec& spec) {
    if (spec.outputs.empty()) throw ValidationError("sweep: no outputs requested");
    if (spec.angulars.empty()) throw ValidationError("sweep: no angular numbers requested");
    for (int a : spec.angulars)
        if (a < 0)
            throw ValidationError("sweep: angular number must be >= 0, got " +
                                  std::to_string(a));
    check_outputs(spec.family, spec.outputs);
    make_grid(spec.grid);

    const std::set<std::string>& keys = known_keys(spec.family);
    if (spec.swept != "omega" && spec.swept != "r" && !keys.count(spec.swept))
        throw ValidationError("sweep: cannot sweep parameter " + spec.swept + " for family " +
                              family_name(spec.family));
    bool wants_potential = false, wants_other = false;
    for (Output o : spec.outputs) (o == Output::Potential ? wants_potential : wants_other) = true;
    if (spec.swept == "r" && wants_other)
        throw ValidationError("sweep: only the potential output varies with r");
    if (wants_potential && spec.swept != "r" && !spec.fixed.count("r"))
        throw ValidationError("sweep: potential output needs r fixed or swept");
    if (spec.swept == "omega" && !(spec.grid.min > 0.0))
        throw ValidationError("sweep: omega grid must be positive");
    if (wants_other && spec.swept != "omega" && !spec.fixed.count("omega"))
        throw ValidationError("sweep: omega must be fixed or swept");
    if (spec.fixed.count(spec.swept))
        throw ValidationError("sweep: parameter " + spec.swept + " is both fixed and swept");

    auto check_keys = [&keys, &spec](const ParamMap& m, const std::string& where) {
        for (const auto& [k, v] : m) {
            (void)v;
            if (k != "omega" && k != "r" && !keys.count(k))
                throw ValidationError("sweep: unknown parameter " + k + " (" + where +
                                      ") for family " + family_name(spec.family));
        }
    };
    check_keys(spec.fixed, "fixed");
    std::set<std::string> labels;
    for (const SweepVariant& v : spec.variants) {
        if (v.label.empty()) throw ValidationError("sweep: variant label must not be empty");
        if (!labels.insert(v.label).second)
            throw ValidationError("sweep: duplicate variant label " + v.label);
        if (v.overrides.count(spec.swept))
            throw ValidationError("sweep: parameter " + spec.swept +
                                  " is swept and overridden by variant " + v.label);
        check_keys(v.overrides, "variant " + v.label);
    }
}

Table run_point(Family family, const ParamMap& params, const Mode& mode,
                const std::vector<Output>& outputs, const RunConfig& config) {
    if (outputs.empty()) throw ValidationError("point: no outputs requested");
    check_outputs(family, outputs);
    for (Output o : outputs)
        if (o == Output::Potential && !params.count("r"))
            throw ValidationError("point: potential output needs parameter r");

    const Geometry g = build_geometry(family, params, config.radius_convention);

    Table t;
    t.comments.push_back(std::string("greybody ") + kToolVersion);
    t.comments.push_back("family: " + family_name(family));
    t.comments.push_back(std::string("mode: omega = ") + short_num(mode.omega) + ", " +
                         angular_letter(family) + " = " + std::to_string(mode.angular));
    if (!params.empty()) t.comments.push_back("parameters: " + param_list(params));
    for (Output o : outputs) t.comments.push_back(output_comment(o, family, config));
    if (family == Family::Tangherlini)
        t.comments.push_back(std::string("radius convention: ") +
                             (config.radius_convention == RadiusConvention::DimensionallyConsistent
                                  ? "dimensionally consistent"
                                  : "mass-coefficient literal"));

    std::vector<double> row;
    for (Output o : outputs) {
        switch (o) {
        case Output::Bound: {
            const BoundReport r = bound_closed(g, mode);
            t.columns.insert(t.columns.end(), {"bound", "barrier_integral"});
            row.insert(row.end(), {r.bound, r.barrier_integral});
            break;
        }
        case Output::BoundQuadrature: {
            const QuadratureBound r = bound_quadrature(g, mode, config.quadrature);
            t.columns.insert(t.columns.end(),
                             {"bound_quadrature", "barrier_integral_quadrature",
                              "quadrature_error"});
            row.insert(row.end(), {r.bound, r.barrier_integral, r.error_estimate});
            break;
        }
        case Output::WKB: {
            const ComparatorEstimate e = wkb_rn(std::get<RNGeometry>(g), mode.omega, config.wkb);
            t.columns.insert(t.columns.end(), {"wkb", "wkb_exponent", "wkb_out_of_range"});
            row.insert(row.end(),
                       {e.value, e.intermediate("exponent"), e.out_of_range ? 1.0 : 0.0});
            break;
        }
        case Output::Asymptotic: {
            const ComparatorEstimate e = asymptotic_rn(std::get<RNGeometry>(g), mode.omega);
            t.columns.insert(t.columns.end(),
                             {"asymptotic", "asymptotic_beta", "asymptotic_beta_I"});
            row.insert(row.end(),
                       {e.value, e.intermediate("beta"), e.intermediate("beta_I")});
            break;
        }
        case Output::Exact2p1: {
            const ComparatorEstimate e =
                exact_dilatonic2p1(std::get<Dilatonic2p1Geometry>(g), mode.angular, mode.omega);
            t.columns.insert(t.columns.end(),
                             {"exact", "exact_radicand", "exact_cosh_arg_minus",
                              "exact_cosh_arg_plus", "exact_below_threshold"});
            row.insert(row.end(), {e.value, e.intermediate("radicand"),
                                   e.intermediate("cosh_arg_minus"),
                                   e.intermediate("cosh_arg_plus"),
                                   e.below_threshold ? 1.0 : 0.0});
            break;
        }
        case Output::Oracle: {
            const OracleResult r = transmission_numeric(g, mode, config.oracle);
            t.columns.insert(t.columns.end(),
                             {"oracle", "oracle_reflection", "oracle_flux_residual",
                              "oracle_r_inner", "oracle_r_outer", "oracle_tolerance"});
            row.insert(row.end(), {r.T, r.R, r.flux_residual, r.r_match_inner, r.r_match_outer,
                                   r.integrator_tolerance});
            break;
        }
        case Output::Potential: {
            const double v = potential(g, mode, params.at("r"), config.potential_variant);
            t.columns.push_back("potential");
            row.push_back(v);
            break;
        }
        }
    }
    t.rows.push_back(format_row(row));
    return t;
}

Table run_sweep(const SweepSpec& spec, const RunConfig& config) {
    validate_spec(spec);
    const std::vector<double> grid = make_grid(spec.grid);
    const std::vector<ColumnPlan> plan = build_plan(spec);

    std::vector<RowOutcome> outcomes(grid.size());
    parallel_rows(grid.size(), config.workers, [&](std::size_t i) {
        outcomes[i] = eval_row(i, grid[i], spec, plan, config);
    });

    if (config.fail_fast)
        for (const RowOutcome& o : outcomes)
            if (o.first_error) std::rethrow_exception(o.first_error);

    Table t;
    t.comments = sweep_comments(spec, config);
    for (const RowOutcome& o : outcomes)
        for (const std::string& e : o.errors) t.comments.push_back("error: " + e);
    t.columns.push_back(spec.swept);
    for (const ColumnPlan& c : plan) t.columns.push_back(c.name);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<double> row;
        row.reserve(plan.size() + 1);
        row.push_back(grid[i]);
        row.insert(row.end(), outcomes[i].cells.begin(), outcomes[i].cells.end());
        t.rows.push_back(format_row(row));
    }
    return t;
}

FigurePreset figure_preset(const std::string& id) {
    FigurePreset p;
    p.id = id;
    SweepSpec& s = p.spec;
    if (id == "fig1") {
        s.family = Family::ReissnerNordstrom;
        s.fixed = {{"G", 1.0}, {"M", 2.0}, {"Q", 1.0}};
        s.swept = "r";
        s.grid = {GridScale::Linear, 3.8, 20.0, 200};
        s.angulars = {0, 1, 2};
        s.outputs = {Output::Potential};
        p.note = "barrier profiles at Q = 1, M = 2; r window covers the peak and tail";
    } else if (id == "fig2") {
        s.family = Family::ReissnerNordstrom;
        s.fixed = {{"G", 1.0}, {"M", 2.0}, {"omega", 2.0}};
        s.swept = "A";
        s.grid = {GridScale::Linear, 0.05, 2.0, 40};
        s.angulars = {0, 1, 2};
        s.outputs = {Output::Bound};
        p.note = "bound versus horizon half-separation A at GM = 2, omega = 2; "
                 "A = 2 is the uncharged limit";
    } else if (id == "fig3") {
        s.family = Family::ReissnerNordstrom;
        s.fixed = {{"G", 1.0}, {"M", 2.0}, {"Q", 1.0}};
        s.swept = "omega";
        s.grid = {GridScale::Linear, 0.1, 10.0, 100};
        s.angulars = {0};
        s.outputs = {Output::Bound, Output::Asymptotic};
        p.note = "closed bound versus the large-omega estimate at G = 1, M = 2, Q = 1, l = 0";
    } else if (id == "fig4") {
        s.family = Family::Tangherlini;
        s.fixed = {{"G", 1.0}, {"M", 1.0}};
        s.swept = "r";
        s.grid = {GridScale::Linear, 2.1, 8.0, 200};
        s.angulars = {1};
        s.outputs = {Output::Potential};
        s.variants = {{"d4", {{"d", 4.0}}},
                      {"d5", {{"d", 5.0}}},
                      {"d6", {{"d", 6.0}}},
                      {"d7", {{"d", 7.0}}},
                      {"d8", {{"d", 8.0}}}};
        p.note = "barrier profiles at GM = 1, l = 1 for d = 4..8; "
                 "r window starts outside the d = 4 horizon";
    } else if (id == "fig5") {
        s.family = Family::Tangherlini;
        s.fixed = {{"G", 1.0}, {"omega", 2.0}};
        s.swept = "M";
        s.grid = {GridScale::Linear, 0.2, 10.0, 50};
        s.angulars = {1};
        s.outputs = {Output::Bound};
        s.variants = {{"d4", {{"d", 4.0}}},
                      {"d5", {{"d", 5.0}}},
                      {"d6", {{"d", 6.0}}},
                      {"d7", {{"d", 7.0}}},
                      {"d8", {{"d", 8.0}}}};
        p.note = "bound versus mass in d = 4..8 at l = 1, omega = 2";
    } else if (id == "fig6") {
        s.family = Family::Dilatonic2p1;
        s.fixed = {{"M", 10.0}, {"Q", 1.0}, {"Lambda", 0.1}};
        s.swept = "r";
        s.grid = {GridScale::Linear, 25.0, 100.0, 200};
        s.angulars = {1};
        s.outputs = {Output::Potential};
        p.note = "barrier profile at m = 1, Lambda = 0.1, Q = 1, M = 10 "
                 "(outer horizon near 24.6)";
    } else if (id == "fig7") {
        s.family = Family::Dilatonic2p1;
        s.fixed = {{"M", 10.0}, {"Q", 0.0}, {"Lambda", 0.3}};
        s.swept = "omega";
        s.grid = {GridScale::Linear, 0.65, 2.0, 55};
        s.angulars = {0};
        s.outputs = {Output::Bound, Output::Exact2p1};
        p.note = "closed bound versus exact transmission at m = 0, M = 10, Q = 0, "
                 "Lambda = 0.3; grid starts above the propagation threshold 2 Lambda";
    } else if (id == "fig8") {
        s.family = Family::Dilatonic2p1;
        s.fixed = {{"M", 10.0}, {"Lambda", 0.1}, {"omega", 2.0}};
        s.swept = "Q";
        s.grid = {GridScale::Linear, 0.0, 3.9, 40};
        s.angulars = {0};
        s.outputs = {Output::Bound};
        p.note = "bound versus charge at m = 0, M = 10, omega = 2, Lambda = 0.1; "
                 "horizons exist up to Q slightly below 3.95";
    } else if (id == "fig9") {
        s.family = Family::Dilatonic3p1;
        s.fixed = {{"M", 10.0}, {"Q", 1.0}};
        s.swept = "r";
        s.grid = {GridScale::Linear, 20.5, 100.0, 200};
        s.angulars = {1};
        s.outputs = {Output::Potential};
        p.note = "barrier profile at l = 1, Q = 1, M = 10 (horizon at r = 20)";
    } else if (id == "fig10") {
        s.family = Family::Dilatonic3p1;
        s.fixed = {{"M", 10.0}, {"omega", 2.0}};
        s.swept = "Q";
        s.grid = {GridScale::Linear, 0.0, 14.0, 29};
        s.angulars = {1};
        s.outputs = {Output::Bound};
        p.note = "bound versus charge at M = 10, omega = 2, l = 1; "
                 "the geometry is valid for Q^2 < 2 M^2";
    } else if (id == "lambda") {
        s.family = Family::Dilatonic2p1;
        s.fixed = {{"M", 10.0}, {"Q", 1.0}, {"omega", 2.0}};
        s.swept = "Lambda";
        s.grid = {GridScale::Linear, 0.05, 0.75, 29};
        s.angulars = {0};
        s.outputs = {Output::Bound};
        p.note = "bound versus cosmological constant at m = 0, M = 10, omega = 2, Q = 1; "
                 "window ends before the regularized barrier integral changes sign "
                 "(near Lambda = 0.78), beyond which the bound turns around";
    } else {
        throw ValidationError("unknown figure id " + id +
                              "; valid: fig1..fig10, lambda");
    }
    return p;
}

std::vector<std::string> figure_ids() {
    return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6",
            "fig7", "fig8", "fig9", "fig10", "lambda"};
}

Table run_figure(const std::string& id, const RunConfig& config) {
    const FigurePreset p = figure_preset(id);
    Table t = run_sweep(p.spec, config);
    t.comments.insert(t.comments.begin() + 1, {"figure: " + p.id, "note: " + p.note});
    return t;
}

} // namespace greybody
