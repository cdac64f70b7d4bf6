#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace convexeq {

enum class ErrorKind {
    NotConvex,
    OutOfRange,
    QuadratureDiverged,
    DegenerateCircle,
    DegeneratePointEvolute,
    NotConverged,
    Mismatch,
    VertexAtCenter,
    NonPeriodic,
    NotRegularEvolutePoint,
    ParseError,
    SchemaError,
    IOError,
};

[[nodiscard]] std::string_view toString(ErrorKind kind) noexcept;

/// Base of every recoverable failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when rho = p + p'' is not certified positive.
class NotConvexError : public Error {
public:
    NotConvexError(double angle, double rho);

    [[nodiscard]] double angle() const noexcept { return angle_; }
    [[nodiscard]] double rho() const noexcept { return rho_; }

private:
    double angle_;
    double rho_;
};

/// Raised when the direct root count and the winding formula disagree.
class MismatchError : public Error {
public:
    MismatchError(int nDirect, int nFormula);

    [[nodiscard]] int nDirect() const noexcept { return nDirect_; }
    [[nodiscard]] int nFormula() const noexcept { return nFormula_; }

private:
    int nDirect_;
    int nFormula_;
};

/// Raised when a counting integral cannot be rounded to its lattice.
class NotConvergedError : public Error {
public:
    NotConvergedError(double value, long samples);

    [[nodiscard]] double value() const noexcept { return value_; }
    [[nodiscard]] long samples() const noexcept { return samples_; }

private:
    double value_;
    long samples_;
};

/// A mathematical invariant that must hold for every valid input was violated.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace convexeq
