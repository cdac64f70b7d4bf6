#pragma once

#include "convexeq/body.hpp"
#include "convexeq/winding.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace convexeq {

enum class Stability { Stable, Unstable, Degenerate };

[[nodiscard]] std::string_view toString(Stability s) noexcept;

/// Horizontal resting position: the support distance p_O is stationary at phi.
struct Equilibrium {
    double phi = 0.0;
    PlanePoint point;  ///< contact point z(phi), in the original frame
    Stability stability = Stability::Degenerate;
    int multiplicity = 1;  ///< order of the zero of p_O'
};

/**
 * Distinct zeros of p_O' on [0, 2 pi) with their stability. An even-order
 * (touching) zero is one equilibrium. Throws Error(DegenerateCircle) when the
 * body is a disk centered at `center`.
 */
[[nodiscard]] std::vector<Equilibrium> findHorizontalEquilibria(const ConvexBody& b, const PlanePoint& center);

struct CountConsistency {
    int nDirect = 0;
    int nFormula = 0;
    HalfInteger m;
};

/// Direct root count against 2 - 2m; throws MismatchError when they differ.
[[nodiscard]] CountConsistency countConsistency(const ConvexBody& b, const PlanePoint& center);

/// Equilibrium counts on a lattice of centers spanning a bounding box.
struct RegionMap {
    static constexpr int kUnconverged = -1;

    PlanePoint lower;
    PlanePoint upper;
    int countX = 0;
    int countY = 0;
    double delta = 0.0;
    std::vector<int> counts;              ///< row-major, y outer
    std::vector<std::uint8_t> nearEvolute;

    [[nodiscard]] std::size_t index(int ix, int iy) const noexcept
    {
        return static_cast<std::size_t>(iy) * static_cast<std::size_t>(countX) + static_cast<std::size_t>(ix);
    }
    [[nodiscard]] int count(int ix, int iy) const noexcept { return counts[index(ix, iy)]; }
    [[nodiscard]] bool flagged(int ix, int iy) const noexcept { return nearEvolute[index(ix, iy)] != 0; }

    /// Lattice node (ix, iy); corners of the box are nodes.
    [[nodiscard]] PlanePoint center(int ix, int iy) const noexcept;
};

/**
 * n(O) = 2 - 2m(O) at every lattice node of [lower, upper]. Nodes closer than
 * `delta` to the evolute are flagged and still counted; nodes whose integral
 * does not settle hold RegionMap::kUnconverged. Nodes are evaluated on
 * `threads` workers (0 picks the hardware concurrency); the result does not
 * depend on the schedule.
 */
[[nodiscard]] RegionMap regionMap(const ConvexBody& b, const PlanePoint& lower, const PlanePoint& upper, int countX,
                                  int countY, double delta, unsigned threads = 0);

struct NeighbourAverage {
    int nOn = 0;
    int nSideA = 0;
    int nSideB = 0;
    PlanePoint center;

    [[nodiscard]] bool averaged() const noexcept { return 2 * nOn == nSideA + nSideB; }
};

/**
 * Counts at O = e(phi) and at O +- eps u'(phi), which lie on either side of
 * the evolute. eps starts at 1e-3 a0 and is halved while another evolute
 * branch lies within 3 eps / 4 of a side point. phi must not be a stationary point of rho
 * (Error(NotRegularEvolutePoint) otherwise).
 */
[[nodiscard]] NeighbourAverage neighbourAverageCheck(const ConvexBody& b, double phi);

}  // namespace convexeq
