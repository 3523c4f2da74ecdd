#pragma once

#include <stdexcept>
#include <string>

namespace chiralspin {

// Base for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// Input is well-formed but violates a mathematical precondition
// (non-Hermitian, non-unitary, non-normalized axis, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, int sweeps)
        : Error(what), sweeps_(sweeps) {}
    int sweeps() const noexcept { return sweeps_; }

private:
    int sweeps_;
};

// Malformed textual input: spin labels, angles, model and matrix files.
class ParseError : public Error {
public:
    using Error::Error;
};

// A result that cannot occur for valid Hermitian input was produced.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace chiralspin
