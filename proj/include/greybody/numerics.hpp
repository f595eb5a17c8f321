#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace greybody {

//! sech^2(z), overflow-safe for any z.  Even in z; underflows to 0 for |z| beyond ~355.
inline double sech_squared(double z) {
    const double t = std::exp(-2.0 * std::abs(z));
    const double onept = 1.0 + t;
    return 4.0 * t / (onept * onept);
}

//! Roots of a*r^2 + b*r + c with a > 0 and two real roots, as (larger, smaller).
//! The smaller root is recovered from the product of roots so that near-cancelling
//! b +/- sqrt(disc) combinations do not lose precision.
struct QuadraticRoots {
    double larger;
    double smaller;
};
inline QuadraticRoots stable_quadratic_roots(double a, double b, double c, double sqrt_disc) {
    // larger root: pick the sign that avoids cancellation in -b (+/-) sqrt_disc
    double rl;
    if (b <= 0.0)
        rl = (-b + sqrt_disc) / (2.0 * a);
    else
        rl = (2.0 * c) / (-b - sqrt_disc);
    const double rs = (rl != 0.0) ? c / (a * rl) : (-b - sqrt_disc) / (2.0 * a);
    return {rl, rs};
}

//! n log-spaced points on [lo, hi] (endpoints included, n >= 2, lo > 0).
inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

//! n linearly spaced points on [lo, hi] (endpoints included, n >= 2).
inline std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    g.front() = lo;
    g.back() = hi;
    return g;
}

//! Centered finite difference with one Richardson extrapolation step.
//! Evaluates f at x +/- h and x +/- h/2; the h^2 error term cancels.
template <typename F>
double richardson_derivative(F&& f, double x, double h) {
    const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const double d2 = (f(x + h / 2.0) - f(x - h / 2.0)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

//! |a - b| <= tol * max(|a|, |b|), with exact equality accepted.
inline bool rel_close(double a, double b, double tol) {
    if (a == b) return true;
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= tol * scale;
}

} // namespace greybody
