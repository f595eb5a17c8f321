#pragma once

#include "greybody/geometry.hpp"
#include "greybody/potentials.hpp"

namespace greybody {

//! Rigorous lower bound T >= sech^2(z) with z = (1/2 omega) * integral of the
//! barrier against d r*.  The sech is even, so only |z| is reported.
struct BoundReport {
    double bound;            //!< sech^2(z)
    double barrier_integral; //!< |z|
};

//! Intermediate pieces of the 2+1 closed form, for tables and debugging.
//! z = (t1 + t2 + t3 + t4 + t5) / omega with
//!   x  = (M + sqrt(D) - 8 Lambda) / (M + sqrt(D) + 8 Lambda), D = M^2 - 64 Q^2 Lambda
//!   S  = 23/15 - x - x^3/3 - x^5/5   (artanh series truncated at the fifth power)
//!   t1 = -272 m Lambda (4m + 3) / (15 sqrt(D))
//!   t2 = 11 M (5M + 16 m^2) / (96 sqrt(D))
//!   t3 = -(M + 2 m^2) S
//!   t4 = (3M/16) S
//!   t5 = 6 Lambda Q^2 / (M + sqrt(D))
struct Dilatonic2p1Breakdown {
    double x;
    double series;
    double t1, t2, t3, t4, t5;
    double z;
};

//! z = (1/2 omega) [l(l+1)/r_plus + (3 r_plus - r_minus)/(6 r_plus^2)].
//! Valid for sub-extremal and extremal geometries; super-extremal throws
//! NoHorizonError.
BoundReport bound_rn_closed(const RNGeometry& g, const Mode& mode);

//! Uncharged special case, z = (2 l(l+1) + 1) / (8 G M omega).
BoundReport bound_schwarzschild(double G, double M, const Mode& mode);

//! z = ((d-2)(d-3) + 4 l (l+d-3)) / (8 omega r0).
BoundReport bound_tangherlini_closed(const TangherliniGeometry& g, const Mode& mode);

//! z = l(l+1) M / (2 omega Q^2) * ln(2M^2 / (2M^2 - Q^2)), evaluated through
//! log1p; the Q -> 0 limit l(l+1) / (4 M omega) is taken exactly at Q = 0.
BoundReport bound_dilatonic3p1_closed(const Dilatonic3p1Geometry& g, const Mode& mode);

//! Five-term regularized closed form for the linearized 2+1 barrier; see
//! Dilatonic2p1Breakdown for the pieces.  The regularized z may come out
//! negative; the bound uses |z|.
BoundReport bound_dilatonic2p1_closed(const Dilatonic2p1Geometry& g, const Mode& mode,
                                      Dilatonic2p1Breakdown* breakdown = nullptr);

//! Closed form for any family.
BoundReport bound_closed(const Geometry& g, const Mode& mode);

struct QuadratureConfig {
    double abs_tol = 1e-10;    //!< absolute target for the barrier integral
    double rel_tol = 1e-8;     //!< relative target for the barrier integral
    int max_depth = 15;        //!< adaptive bisection depth of the quadrature
    //! 2+1 only: drop the 14 Lambda^2 r term (the form the closed bound treats).
    bool linearized_2p1 = true;
};

struct QuadratureBound {
    double bound;            //!< sech^2 of the barrier integral
    double barrier_integral; //!< |z| = |I| / (2 omega)
    double integral;         //!< I = integral of V dr*/dr dr over the exterior
    double error_estimate;   //!< quadrature estimate of the error on I
    double s_lo, s_hi;       //!< window actually integrated in s = ln(r/r_h - 1)
};

//! Independent evaluation of the same z by adaptive Gauss-Kronrod quadrature
//! after the substitution r = r_h (1 + e^s), under which the integrand decays
//! exponentially at both ends for the RN, Tangherlini and 3+1 families.
//!
//! The 2+1 integrand does not decay: the full barrier grows linearly at large
//! r, the m != 0 barrier tends to a nonzero constant, and the barrier does not
//! vanish at the horizon while r* runs to -infinity there.  Those cases raise
//! DivergentIntegralError naming the offending term (the closed form above is
//! a regularized value, not this integral).
QuadratureBound bound_quadrature(const Geometry& g, const Mode& mode,
                                 const QuadratureConfig& config = {});

} // namespace greybody
