#include "convexeq/error.hpp"

#include <cstdio>

namespace convexeq {

std::string_view toString(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::NotConvex: return "NotConvex";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::QuadratureDiverged: return "QuadratureDiverged";
        case ErrorKind::DegenerateCircle: return "DegenerateCircle";
        case ErrorKind::DegeneratePointEvolute: return "DegeneratePointEvolute";
        case ErrorKind::NotConverged: return "NotConverged";
        case ErrorKind::Mismatch: return "Mismatch";
        case ErrorKind::VertexAtCenter: return "VertexAtCenter";
        case ErrorKind::NonPeriodic: return "NonPeriodic";
        case ErrorKind::NotRegularEvolutePoint: return "NotRegularEvolutePoint";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::IOError: return "IOError";
    }
    return "Unknown";
}

namespace {

std::string describe(const char* fmt, double a, double b)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, a, b);
    return buf;
}

}  // namespace

NotConvexError::NotConvexError(double angle, double rho)
    : Error(ErrorKind::NotConvex,
            describe("radius of curvature %.12g at angle %.12g is not positive", rho, angle)),
      angle_(angle),
      rho_(rho)
{
}

MismatchError::MismatchError(int nDirect, int nFormula)
    : Error(ErrorKind::Mismatch,
            describe("direct root count %.0f disagrees with winding formula %.0f", nDirect, nFormula)),
      nDirect_(nDirect),
      nFormula_(nFormula)
{
}

NotConvergedError::NotConvergedError(double value, long samples)
    : Error(ErrorKind::NotConverged,
            describe("counting integral %.12g did not settle on its lattice after %.0f samples", value,
                     static_cast<double>(samples))),
      value_(value),
      samples_(samples)
{
}

}  // namespace convexeq
