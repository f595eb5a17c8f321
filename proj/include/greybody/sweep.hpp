#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "greybody/bounds.hpp"
#include "greybody/comparators.hpp"
#include "greybody/geometry.hpp"
#include "greybody/potentials.hpp"
#include "greybody/scattering.hpp"
#include "greybody/table.hpp"

namespace greybody {

enum class Output { Bound, BoundQuadrature, WKB, Asymptotic, Exact2p1, Oracle, Potential };

//! bound, bound_quadrature, wkb, asymptotic, exact, oracle, potential.
std::string output_name(Output o);
//! Accepts the names above plus the aliases quadrature and exact2p1.
Output output_from_name(const std::string& name);

enum class GridScale { Linear, Log };

struct GridSpec {
    GridScale scale = GridScale::Linear;
    double min = 0.0;
    double max = 1.0;
    std::size_t count = 2;
};

//! Grid points, endpoints included.  count >= 2, min < max, both finite,
//! log scale needs min > 0; violations raise ValidationError.
std::vector<double> make_grid(const GridSpec& grid);

using ParamMap = std::map<std::string, double>;

//! Geometry from named parameters.  Accepted keys per family:
//!   rn:           M required; G (default 1), Q, P (default 0);
//!                 A may replace Q, setting Q = sqrt((G^2 M^2 - A^2)/G)
//!   tangherlini:  d (integer-valued) and M required; G (default 1)
//!   dilatonic2p1: M, Q, Lambda required
//!   dilatonic3p1: M, Q required
//! Unknown or missing keys raise ValidationError naming the parameter.  The
//! keys omega and r are reserved for the mode frequency and the evaluation
//! radius and are ignored here.
Geometry build_geometry(Family family, const ParamMap& params,
                        RadiusConvention convention = RadiusConvention::DimensionallyConsistent);

//! A labelled parameter override set; a sweep evaluates every variant at every
//! grid point and suffixes its columns with the label (figure 5 uses variants
//! d4..d8 over the dimension).
struct SweepVariant {
    std::string label;
    ParamMap overrides;
};

struct SweepSpec {
    Family family = Family::ReissnerNordstrom;
    ParamMap fixed;                 //!< geometry parameters, omega, r as needed
    std::string swept;              //!< geometry parameter, "omega", or "r"
    GridSpec grid;
    std::vector<int> angulars{0};   //!< one column group per angular number
    std::vector<Output> outputs{Output::Bound};
    std::vector<SweepVariant> variants; //!< optional; empty = single unlabelled
};

struct RunConfig {
    QuadratureConfig quadrature;
    OracleConfig oracle;
    WKBConfig wkb;
    Dilatonic2p1Variant potential_variant = Dilatonic2p1Variant::Full;
    RadiusConvention radius_convention = RadiusConvention::DimensionallyConsistent;
    bool fail_fast = true; //!< otherwise failing cells become nan + a logged header line
    unsigned workers = 1;  //!< worker pool width; 0 = one per hardware thread
};

//! Check family/output compatibility, the grid, the swept-parameter name, and
//! the presence of omega (and of r when Potential is requested).  run_sweep
//! calls this before evaluating anything.
void validate_spec(const SweepSpec& spec);

//! Single evaluation: one row with every requested output and its companion
//! columns (barrier integrals, comparator intermediates, oracle diagnostics).
//! params holds the geometry keys plus r when Potential is requested.
Table run_point(Family family, const ParamMap& params, const Mode& mode,
                const std::vector<Output>& outputs, const RunConfig& config = {});

//! Grid sweep; rows in grid order, one column group per variant, angular
//! number, and output (primary values only).  Deterministic for a fixed spec
//! and config, whatever the worker count.
Table run_sweep(const SweepSpec& spec, const RunConfig& config = {});

struct FigurePreset {
    std::string id;
    std::string note; //!< recorded in the output header
    SweepSpec spec;
};

//! Recorded parameter sets of the ten figure plots plus the cosmological
//! constant sweep ("lambda").  Grid extents not fixed by the captions are
//! documented choices covering each plot's visible window.
FigurePreset figure_preset(const std::string& id);

//! fig1..fig10 and lambda, in order.
std::vector<std::string> figure_ids();

//! run_sweep on a preset, with the figure id and note in the header.
Table run_figure(const std::string& id, const RunConfig& config = {});

} // namespace greybody
