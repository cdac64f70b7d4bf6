#pragma once

#include "convexeq/body.hpp"
#include "convexeq/geometry.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace convexeq {

enum class CuspKind { MinOfRho, MaxOfRho, Saddle };

[[nodiscard]] std::string_view toString(CuspKind kind) noexcept;

/// Stationary point of the radius of curvature and the evolute point above it.
struct Cusp {
    double phi = 0.0;
    CuspKind kind = CuspKind::Saddle;
    PlanePoint location;
    double rho = 0.0;

    [[nodiscard]] bool changesSign() const noexcept { return kind != CuspKind::Saddle; }
};

/// Ordered samples of the evolute with the cusp angles spliced in.
struct EvolutePolyline {
    std::vector<double> angles;
    std::vector<PlanePoint> points;
    std::vector<std::size_t> cuspIndices;
};

/// e(phi) = p' u' - p'' u for a bare support function.
[[nodiscard]] PlanePoint evolutePoint(const TrigPolySupport& s, double phi) noexcept;
[[nodiscard]] PlanePoint evolutePoint(const ConvexBody& b, double phi) noexcept;

/**
 * Zeros of rho' on [0, 2 pi) sorted by angle. Sign changes are bisected to
 * 1e-12 on a grid of max(2048, 128 K) samples; zeros without a sign change
 * are reported as saddles. Throws Error(DegenerateCircle) when rho is constant.
 */
[[nodiscard]] std::vector<Cusp> findCusps(const ConvexBody& b);

/// Alternating sum of evolute arc lengths between consecutive cusps. Vanishes.
[[nodiscard]] double alternatingArcSum(const ConvexBody& b);

/// `n` half-step-offset uniform samples plus every cusp angle; requires n >= 16.
[[nodiscard]] EvolutePolyline sampleEvolute(const ConvexBody& b, int n);

/// min over phi of |e(phi) - origin|, by 4096 samples and golden-section polish.
[[nodiscard]] double distanceToEvolute(const ConvexBody& b, const PlanePoint& origin);

}  // namespace convexeq
