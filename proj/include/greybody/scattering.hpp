#pragma once

#include "greybody/geometry.hpp"

namespace greybody {

struct OracleConfig {
    double integrator_tolerance = 1e-7; //!< abs and rel error target per step
    double inner_offset = 1e-6;         //!< start at r_h (1 + inner_offset)
    double tail_cut = 1e-8;             //!< stop where the barrier < tail_cut * omega^2
    int max_refinements = 3;            //!< tolerance reductions before giving up
};

struct OracleResult {
    double T;                   //!< transmission probability
    double R;                   //!< reflection probability
    double flux_residual;       //!< |T + R - 1|, pure integrator drift
    double r_match_inner;
    double r_match_outer;
    double integrator_tolerance; //!< tolerance of the accepted run
};

//! Transmission by direct integration of the mode equation: start just outside
//! the horizon with a purely transmitted wave e^{-i omega r*} (phase from the
//! closed-form tortoise map), integrate the first-order system outward in r,
//! and split psi into e^{-+i omega r*} parts where the barrier has fallen below
//! tail_cut * omega^2.  T = 1/|A_in|^2 and R = |A_out|^2/|A_in|^2 relative to
//! unit transmitted flux; T + R = 1 holds identically for the exact flow, so
//! the residual measures integrator drift and triggers tolerance refinement.
//!
//! The 3+1 dilatonic field is integrated in its printed form, envelope term
//! included: u_xx + [(r - r_plus)(2r - r_minus)/(r^2 (r - r_minus))] u_x
//! + (omega^2 - V) u = 0, converted to the plane-wave variable chi = R u at
//! both matching radii.
//!
//! The 2+1 family has no plane-wave ends (the closed form of the exact
//! transmission covers it) and raises UnsupportedFamilyError.
OracleResult transmission_numeric(const Geometry& g, const Mode& mode,
                                  const OracleConfig& config = {});

} // namespace greybody
