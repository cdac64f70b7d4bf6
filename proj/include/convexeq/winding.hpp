#pragma once

#include "convexeq/body.hpp"
#include "convexeq/evolute.hpp"

#include <cmath>

namespace convexeq {

/// Exact element of (1/2) Z, stored as 2m.
struct HalfInteger {
    int twice = 0;

    [[nodiscard]] constexpr double value() const noexcept { return 0.5 * twice; }
    [[nodiscard]] constexpr bool isInteger() const noexcept { return twice % 2 == 0; }

    [[nodiscard]] static HalfInteger nearest(double m) noexcept
    {
        return HalfInteger{static_cast<int>(std::lround(2.0 * m))};
    }

    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
};

struct QuadratureReport {
    double value = 0.0;
    long samples = 0;
    /// Distance of the value from the lattice it is rounded to, in the lattice's own units.
    double residual = 0.0;
    /// Successive doublings agreed before the sample cap.
    bool converged = false;
};

struct ZeroCount {
    int n = 0;
    QuadratureReport report;
};

struct EvoluteWinding {
    HalfInteger m;
    QuadratureReport report;
};

/// Both integrands at one angle.
struct CountingKernel {
    /// (q''^2 - q' q''') / (q'^2 + q''^2), integrates to pi n.
    double zeroCount = 0.0;
    /// q' (q' + q''') / (q'^2 + q''^2), integrates to 2 pi m.
    double winding = 0.0;
    /// The continuity limit replaced a vanishing denominator.
    bool guarded = false;
};

/**
 * Counting integrands for q' = p' - t p (t = tan alpha; t = 0 is the
 * horizontal case). Where q'^2 + q''^2 < 1e-16 scale^2 the integrands are
 * replaced by their limits 1/(k-1) and (k-2)/(k-1), with k - 1 the order of the
 * zero of q' read off from the first non-vanishing higher derivative.
 */
[[nodiscard]] CountingKernel countingKernel(const TrigPolySupport& s, double tanAlpha, double phi);

inline constexpr long kCountingStartSamples = 512;
inline constexpr long kCountingMaxSamples = 1L << 20;

/// Acceptance thresholds for rounding n and 2m.
inline constexpr double kZeroCountResidual = 0.05;
inline constexpr double kWindingResidual = 0.1;

/**
 * Number of horizontal equilibria of a body already recentered at the
 * center of mass, from the zero-counting integral. Throws NotConvergedError
 * or Error(DegenerateCircle).
 */
[[nodiscard]] ZeroCount zeroCountIntegral(const ConvexBody& centered);

/**
 * Winding number of the evolute about the origin of `centered`, rounded to
 * (1/2) Z. Cross-checks n = 2 - 2m against the zero-counting integral and
 * m <= 0; violations raise InvariantViolation.
 */
[[nodiscard]] EvoluteWinding evoluteWinding(const ConvexBody& centered);

/// Tilted variants shared with the oblique module; no sign constraint on m.
[[nodiscard]] ZeroCount zeroCountIntegral(const TrigPolySupport& s, double tanAlpha);
[[nodiscard]] EvoluteWinding windingIntegral(const TrigPolySupport& s, double tanAlpha);

/// Winding number of the closed polyline about `center` by summing turn angles.
[[nodiscard]] double polygonalWinding(const EvolutePolyline& poly, const PlanePoint& center);

}  // namespace convexeq
