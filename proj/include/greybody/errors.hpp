#pragma once

#include <stdexcept>
#include <string>

namespace greybody {

//! Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

//! Bad input parameters (non-positive mass, empty grid, malformed spec, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

//! The requested geometry has no (outer) horizon.
class NoHorizonError : public Error {
public:
    using Error::Error;
};

//! Spacetime dimension outside the supported range.
class DimensionError : public Error {
public:
    using Error::Error;
};

//! Radial coordinate outside the domain of the requested quantity.
class DomainError : public Error {
public:
    using Error::Error;
};

//! The barrier integral does not converge; `term` names the offender.
class DivergentIntegralError : public Error {
public:
    DivergentIntegralError(const std::string& msg, std::string term_)
        : Error(msg), term(std::move(term_)) {}
    std::string term;
};

//! Square root of a negative quantity in a closed-form estimate.
//! `critical_omega` is the frequency at which the radicand first vanishes.
class RadicandError : public Error {
public:
    RadicandError(const std::string& msg, double critical_omega_)
        : Error(msg), critical_omega(critical_omega_) {}
    double critical_omega;
};

//! An estimate whose formula is singular exactly at extremality.
class ExtremalSingularityError : public Error {
public:
    using Error::Error;
};

//! Operation defined for electric charge only, called with magnetic charge.
class UnsupportedChargeError : public Error {
public:
    using Error::Error;
};

//! Operation not available for the requested black-hole family.
class UnsupportedFamilyError : public Error {
public:
    using Error::Error;
};

//! A numerical scheme failed to reach its target accuracy.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

} // namespace greybody
