#pragma once

#include <stdexcept>
#include <string>

namespace wpd2d {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside its admissible range.
struct DomainError : Error {
    using Error::Error;
};

// Null-space construction asked for on a (numerically) zero vector.
struct ZeroVector : Error {
    using Error::Error;
};

// Bisection endpoints do not bracket a crossing.
struct BracketError : Error {
    using Error::Error;
};

// Cubic solver found no positive real root.
struct NoPositiveRoot : Error {
    using Error::Error;
};

// No time split yields a positive secrecy rate; the scheme cannot operate.
struct NoPositiveSecrecy : Error {
    using Error::Error;
};

// Quadratic leading coefficient too small to divide by.
struct DegenerateLeading : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace wpd2d
