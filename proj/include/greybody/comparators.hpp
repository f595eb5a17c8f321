#pragma once

#include <string>
#include <utility>
#include <vector>

#include "greybody/geometry.hpp"

namespace greybody {

enum class ComparatorMethod { WKB, Asymptotic, Exact2p1 };

std::string comparator_method_name(ComparatorMethod m);

//! A non-bound transmission estimate.  Intermediates are (name, value) pairs
//! in a fixed order so tables stay column-stable.  WKB and asymptotic values
//! are reported exactly as the formulas produce them; out_of_range marks a
//! value outside [0, 1].  below_threshold marks the exact 2+1 regime where the
//! radicand turns negative and transmission shuts off entirely.
struct ComparatorEstimate {
    double value;
    ComparatorMethod method;
    std::vector<std::pair<std::string, double>> intermediates;
    bool out_of_range = false;
    bool below_threshold = false;

    //! Lookup by intermediate name; throws ValidationError if absent.
    double intermediate(const std::string& name) const;
};

struct WKBConfig {
    double hbar = 1.0;
};

//! Tunnelling estimate T = exp(-2 pi / hbar * E) with
//! E = 2 G omega (M - omega/2) - (M - omega) sqrt(G^2 (M-omega)^2 - G(Q^2+P^2))
//!     + M sqrt(G^2 M^2 - G (Q^2+P^2)).
//! The omega-dependent radicand turns negative on an interval around omega = M;
//! entering it raises RadicandError carrying the critical frequency
//! M - sqrt((Q^2+P^2)/G) where the sign first flips.
ComparatorEstimate wkb_rn(const RNGeometry& g, double omega, const WKBConfig& config = {});

//! Large-omega estimate T = (e^{b w} - 1) / (e^{b w} + 2 + 3 e^{-bI w}) with
//!   b  = 8 pi M / (1 + Q^2/(2 G M^2) + 5 Q^4/(16 G^2 M^4))
//!   bI = -2 pi [G M - sqrt(G^2 M^2 - G Q^2)]^2 / sqrt(G^2 M^2 - G Q^2),
//! evaluated through decaying exponentials only.  The printed coefficients use
//! the electric charge alone, so P != 0 raises UnsupportedChargeError; the
//! extremal limit divides by zero in bI and raises ExtremalSingularityError.
ComparatorEstimate asymptotic_rn(const RNGeometry& g, double omega);

//! Exact 2+1 transmission T = 1 - cosh^2(a - b) / cosh^2(a + b) with
//! a = pi omega / (4 Lambda), b = (pi / (4 Lambda)) sqrt(omega^2 - 8 m^2 Lambda
//! - 4 Lambda^2), via decaying exponentials.  A negative radicand makes the two
//! cosh arguments complex conjugates, the magnitude ratio is then exactly 1 and
//! T = 0: reported as value 0 with below_threshold set.
ComparatorEstimate exact_dilatonic2p1(const Dilatonic2p1Geometry& g, int m, double omega);

} // namespace greybody
