#pragma once

#include "convexeq/body.hpp"

#include <vector>

namespace convexeq::detail {

/// Distinct zero of q' = p' - t p with its order.
struct TiltedRoot {
    double phi = 0.0;
    int multiplicity = 1;
};

/// Tolerances derived from the size of q' and q''.
struct TiltedScale {
    double scale = 0.0;        ///< bound on |q'| + |q''|
    double touch = 0.0;        ///< |q'| below which an extremum is a touching root
    double degenerate = 0.0;   ///< |q''| below which a root is degenerate
};

[[nodiscard]] TiltedScale tiltedScale(const TrigPolySupport& s, double tanAlpha);

/// True when q' vanishes identically (a disk seen from its center, untilted).
[[nodiscard]] bool tiltedDegenerate(const TrigPolySupport& s, double tanAlpha);

/// All distinct zeros of q' on [0, 2 pi), grid max(4096, 256 K), bisection to 1e-12.
[[nodiscard]] std::vector<TiltedRoot> tiltedRoots(const TrigPolySupport& s, double tanAlpha);

}  // namespace convexeq::detail
