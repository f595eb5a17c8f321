#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "greybody/errors.hpp"
#include "greybody/sweep.hpp"
#include "greybody/verify.hpp"

using namespace greybody;

namespace {

ParamMap parse_params(const std::vector<std::string>& pairs) {
    ParamMap out;
    for (const std::string& kv : pairs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ValidationError("parameter must look like NAME=VALUE, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const std::string val = kv.substr(eq + 1);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(val, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != val.size() || val.empty())
            throw ValidationError("parameter " + key + ": cannot parse value '" + val + "'");
        out[key] = v;
    }
    return out;
}

std::vector<Output> parse_outputs(const std::vector<std::string>& names) {
    std::vector<Output> out;
    out.reserve(names.size());
    for (const std::string& n : names) out.push_back(output_from_name(n));
    return out;
}

void emit(const Table& t, const std::string& path) {
    if (path.empty()) {
        write_csv(t, std::cout);
        return;
    }
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot open output file " + path);
    write_csv(t, f);
}

int fail(const char* type, const std::exception& e, int code) {
    std::fprintf(stderr, "error (%s): %s\n", type, e.what());
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ValidationError& e) {
        return fail("ValidationError", e, 1);
    } catch (const NoHorizonError& e) {
        return fail("NoHorizonError", e, 1);
    } catch (const DimensionError& e) {
        return fail("DimensionError", e, 1);
    } catch (const DomainError& e) {
        return fail("DomainError", e, 1);
    } catch (const UnsupportedFamilyError& e) {
        return fail("UnsupportedFamilyError", e, 1);
    } catch (const UnsupportedChargeError& e) {
        return fail("UnsupportedChargeError", e, 1);
    } catch (const DivergentIntegralError& e) {
        return fail("DivergentIntegralError", e, 2);
    } catch (const RadicandError& e) {
        return fail("RadicandError", e, 2);
    } catch (const ExtremalSingularityError& e) {
        return fail("ExtremalSingularityError", e, 2);
    } catch (const ConvergenceError& e) {
        return fail("ConvergenceError", e, 2);
    } catch (const Error& e) {
        return fail("Error", e, 2);
    } catch (const std::exception& e) {
        return fail("std::exception", e, 2);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigorous lower bounds on black-hole greybody factors, with "
                 "quadrature, semiclassical and numeric-scattering cross-checks"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key=value file");

    const QuadratureConfig quad_defaults;
    const OracleConfig oracle_defaults;
    double quad_abs_tol = quad_defaults.abs_tol;
    double quad_rel_tol = quad_defaults.rel_tol;
    double oracle_tol = oracle_defaults.integrator_tolerance;
    unsigned workers = 1;
    bool skip_errors = false;
    std::string radius_convention = "consistent";

    app.add_option("--quad-abs-tol", quad_abs_tol, "absolute tolerance for barrier quadrature")
        ->envname("GREYBODY_QUAD_ABS_TOL")
        ->capture_default_str();
    app.add_option("--quad-rel-tol", quad_rel_tol, "relative tolerance for barrier quadrature")
        ->envname("GREYBODY_QUAD_REL_TOL")
        ->capture_default_str();
    app.add_option("--oracle-tol", oracle_tol,
                   "integrator tolerance for the numeric transmission")
        ->envname("GREYBODY_ORACLE_TOL")
        ->capture_default_str();
    app.add_option("--workers", workers,
                   "worker threads for sweeps (0 = all hardware threads)")
        ->envname("GREYBODY_WORKERS")
        ->capture_default_str();
    app.add_flag("--skip-errors", skip_errors,
                 "record failed sweep points as nan rows instead of stopping");
    app.add_option("--radius-convention", radius_convention,
                   "Tangherlini horizon-radius convention")
        ->check(CLI::IsMember({"consistent", "literal"}))
        ->envname("GREYBODY_RADIUS_CONVENTION")
        ->capture_default_str();

    auto make_config = [&] {
        RunConfig cfg;
        cfg.quadrature.abs_tol = quad_abs_tol;
        cfg.quadrature.rel_tol = quad_rel_tol;
        cfg.oracle.integrator_tolerance = oracle_tol;
        cfg.workers = workers;
        cfg.fail_fast = !skip_errors;
        cfg.radius_convention = radius_convention == "literal"
                                    ? RadiusConvention::MassCoefficientLiteral
                                    : RadiusConvention::DimensionallyConsistent;
        return cfg;
    };

    // point
    auto* point = app.add_subcommand("point", "evaluate outputs at one (geometry, mode)");
    std::string point_family;
    std::vector<std::string> point_params;
    double point_omega = 0.0;
    int point_angular = 0;
    std::vector<std::string> point_outputs{"bound"};
    std::string point_outfile;
    point->add_option("--family", point_family, "rn, tangherlini, dilatonic2p1, dilatonic3p1")
        ->required();
    point->add_option("-p,--param", point_params, "geometry parameter NAME=VALUE (repeatable)");
    point->add_option("--omega", point_omega, "mode frequency")->required();
    point->add_option("-l,-m,--angular", point_angular, "angular number (l, or m in 2+1)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    point->add_option("--outputs", point_outputs,
                      "comma-separated list: bound, bound_quadrature, wkb, asymptotic, "
                      "exact, oracle, potential")
        ->delimiter(',')
        ->capture_default_str();
    point->add_option("-o,--output-file", point_outfile, "write CSV here instead of stdout");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "tabulate outputs along one parameter");
    std::string sweep_family;
    std::vector<std::string> sweep_params;
    double sweep_omega = 0.0;
    std::vector<int> sweep_angulars{0};
    std::vector<std::string> sweep_outputs{"bound"};
    std::string sweep_name, sweep_outfile;
    double sweep_min = 0.0, sweep_max = 0.0;
    std::size_t sweep_count = 50;
    bool sweep_log = false;
    sweep->add_option("--family", sweep_family, "rn, tangherlini, dilatonic2p1, dilatonic3p1")
        ->required();
    sweep->add_option("-p,--param", sweep_params, "fixed parameter NAME=VALUE (repeatable)");
    auto* sweep_omega_opt =
        sweep->add_option("--omega", sweep_omega, "mode frequency (unless sweeping omega)");
    sweep->add_option("-l,-m,--angular", sweep_angulars,
                      "angular numbers, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--outputs", sweep_outputs, "comma-separated outputs")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--sweep", sweep_name, "parameter to sweep (omega, r, or a geometry key)")
        ->required();
    sweep->add_option("--min", sweep_min, "first grid value")->required();
    sweep->add_option("--max", sweep_max, "last grid value")->required();
    sweep->add_option("--count", sweep_count, "grid points")->capture_default_str();
    sweep->add_flag("--log", sweep_log, "log-spaced grid");
    sweep->add_option("-o,--output-file", sweep_outfile, "write CSV here instead of stdout");

    // figure
    auto* figure = app.add_subcommand("figure", "run a preset figure sweep");
    std::string figure_id, figure_outfile;
    bool figure_list = false;
    figure->add_option("id", figure_id, "preset id (see --list)");
    figure->add_flag("--list", figure_list, "list available presets");
    figure->add_option("-o,--output-file", figure_outfile, "write CSV here instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "run the cross-validation battery");
    std::string verify_suite = "fast";
    std::uint32_t verify_seed = kVerifySeed;
    std::string verify_outfile;
    verify->add_option("suite", verify_suite, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "seed for the randomized draws")
        ->capture_default_str();
    verify->add_option("-o,--output-file", verify_outfile, "write CSV here instead of stdout");

    for (CLI::App* sub : {point, sweep, figure, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (point->parsed())
        return guarded([&] {
            const Table t = run_point(family_from_name(point_family),
                                      parse_params(point_params), Mode(point_omega, point_angular),
                                      parse_outputs(point_outputs), make_config());
            emit(t, point_outfile);
            return 0;
        });

    if (sweep->parsed())
        return guarded([&] {
            SweepSpec spec;
            spec.family = family_from_name(sweep_family);
            spec.fixed = parse_params(sweep_params);
            if (sweep_omega_opt->count() > 0) spec.fixed["omega"] = sweep_omega;
            spec.swept = sweep_name;
            spec.grid = {sweep_log ? GridScale::Log : GridScale::Linear, sweep_min, sweep_max,
                         sweep_count};
            spec.angulars = sweep_angulars;
            spec.outputs = parse_outputs(sweep_outputs);
            emit(run_sweep(spec, make_config()), sweep_outfile);
            return 0;
        });

    if (figure->parsed())
        return guarded([&] {
            if (figure_list) {
                for (const std::string& id : figure_ids())
                    std::printf("%-7s %s\n", id.c_str(), figure_preset(id).note.c_str());
                return 0;
            }
            if (figure_id.empty())
                throw ValidationError("figure: give a preset id or --list");
            emit(run_figure(figure_id, make_config()), figure_outfile);
            return 0;
        });

    return guarded([&] {
        const VerifyReport rep = run_verification(
            verify_suite == "full" ? VerifySuite::Full : VerifySuite::Fast, verify_seed);
        emit(verify_report_table(rep), verify_outfile);
        return rep.all_passed() ? 0 : 3;
    });
}
