#include "greybody/comparators.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "greybody/errors.hpp"

namespace greybody {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void check_omega(double omega, const char* what) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw ValidationError(std::string(what) + ": omega = " + num(omega) +
                              " must be positive and finite");
    }
}

} // namespace

std::string comparator_method_name(ComparatorMethod m) {
    switch (m) {
    case ComparatorMethod::WKB:
        return "wkb";
    case ComparatorMethod::Asymptotic:
        return "asymptotic";
    case ComparatorMethod::Exact2p1:
        return "exact2p1";
    }
    throw Error("comparator_method_name: unreachable method tag");
}

double ComparatorEstimate::intermediate(const std::string& name) const {
    for (const auto& [k, v] : intermediates) {
        if (k == name) {
            return v;
        }
    }
    throw ValidationError("ComparatorEstimate: no intermediate named '" + name + "'");
}

ComparatorEstimate wkb_rn(const RNGeometry& g, double omega, const WKBConfig& config) {
    check_omega(omega, "wkb_rn");
    if (!(config.hbar > 0.0)) {
        throw ValidationError("wkb_rn: hbar = " + num(config.hbar) + " must be positive");
    }
    if (classify(g) == ExtremalityClass::SuperExtremal) {
        throw NoHorizonError("wkb_rn: no horizon, geometry is super-extremal");
    }
    const double G = g.G, M = g.M;
    const double charge2 = g.Q * g.Q + g.P * g.P;
    const double rad0 = G * G * M * M - G * charge2;          // >= 0: sub or extremal
    const double rad1 = G * G * (M - omega) * (M - omega) - G * charge2;
    if (rad1 < 0.0) {
        const double critical = M - std::sqrt(charge2 / G);
        throw RadicandError("wkb_rn: radicand G^2 (M - omega)^2 - G (Q^2 + P^2) is negative "
                            "at omega = " + num(omega) +
                            "; the tunnelling exponent is real only below omega = " +
                            num(critical),
                            critical);
    }
    const double exponent = 2.0 * G * omega * (M - 0.5 * omega) -
                            (M - omega) * std::sqrt(rad1) + M * std::sqrt(rad0);
    const double value = std::exp(-2.0 * M_PI / config.hbar * exponent);

    ComparatorEstimate out;
    out.value = value;
    out.method = ComparatorMethod::WKB;
    out.intermediates = {{"exponent", exponent}};
    out.out_of_range = !(value >= 0.0 && value <= 1.0);
    return out;
}

ComparatorEstimate asymptotic_rn(const RNGeometry& g, double omega) {
    check_omega(omega, "asymptotic_rn");
    if (g.P != 0.0) {
        throw UnsupportedChargeError(
            "asymptotic_rn: the printed coefficients use the electric charge alone; "
            "magnetic charge P = " + num(g.P) + " is not covered");
    }
    switch (classify(g)) {
    case ExtremalityClass::SuperExtremal:
        throw NoHorizonError("asymptotic_rn: no horizon, geometry is super-extremal");
    case ExtremalityClass::Extremal:
        throw ExtremalSingularityError(
            "asymptotic_rn: sqrt(G^2 M^2 - G Q^2) vanishes at extremality and divides "
            "the imaginary-part coefficient");
    case ExtremalityClass::SubExtremal:
        break;
    }
    const double G = g.G, M = g.M, Q = g.Q;
    const double GM2 = G * M * M;
    const double beta = 8.0 * M_PI * M /
                        (1.0 + Q * Q / (2.0 * GM2) +
                         5.0 * Q * Q * Q * Q / (16.0 * GM2 * GM2));
    const double s0 = std::sqrt(G * G * M * M - G * Q * Q);
    const double beta_I = -2.0 * M_PI * (G * M - s0) * (G * M - s0) / s0;

    // (e^{bw} - 1)/(e^{bw} + 2 + 3 e^{-bI w}) scaled by e^{-bw}: every
    // exponential then decays except possibly e^{-(b+bI)w}, which may blow up
    // near extremality; the IEEE limit T -> 0 is the correct one there.
    const double eb = std::exp(-beta * omega);
    const double ebi = std::exp(-(beta + beta_I) * omega);
    const double value = (1.0 - eb) / (1.0 + 2.0 * eb + 3.0 * ebi);

    ComparatorEstimate out;
    out.value = value;
    out.method = ComparatorMethod::Asymptotic;
    out.intermediates = {{"beta", beta}, {"beta_I", beta_I}};
    out.out_of_range = !(value >= 0.0 && value <= 1.0);
    return out;
}

ComparatorEstimate exact_dilatonic2p1(const Dilatonic2p1Geometry& g, int m, double omega) {
    check_omega(omega, "exact_dilatonic2p1");
    const double L = g.Lambda;
    const double md = static_cast<double>(m);
    const double radicand = omega * omega - 8.0 * md * md * L - 4.0 * L * L;

    ComparatorEstimate out;
    out.method = ComparatorMethod::Exact2p1;
    if (radicand < 0.0) {
        // Complex square root: the two cosh arguments are conjugates, their
        // squared magnitudes match, and the transmission vanishes identically.
        out.value = 0.0;
        out.below_threshold = true;
        out.intermediates = {{"radicand", radicand},
                             {"cosh_arg_minus", std::nan("")},
                             {"cosh_arg_plus", std::nan("")}};
        return out;
    }
    const double a = M_PI * omega / (4.0 * L);
    const double b = M_PI * std::sqrt(radicand) / (4.0 * L);
    // cosh(a-b)/cosh(a+b) = e^{-2b} (1 + e^{-2(a-b)})/(1 + e^{-2(a+b)});
    // a >= b >= 0, so every exponent decays and nothing overflows.
    const double ratio = std::exp(-2.0 * b) * (1.0 + std::exp(-2.0 * (a - b))) /
                         (1.0 + std::exp(-2.0 * (a + b)));
    out.value = 1.0 - ratio * ratio;
    out.intermediates = {{"radicand", radicand},
                         {"cosh_arg_minus", a - b},
                         {"cosh_arg_plus", a + b}};
    return out;
}

} // namespace greybody
