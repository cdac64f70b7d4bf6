#pragma once

#include "convexeq/body.hpp"
#include "convexeq/evolute.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace fixtures {

using convexeq::ConvexBody;
using convexeq::PlanePoint;
using convexeq::TrigPolySupport;

inline TrigPolySupport circle(double r = 1.0) { return {r, {}, {}}; }

/// Disk of radius 1 seen from a point c to the right of its center: p = 1 + c cos.
inline TrigPolySupport offsetDisk(double c) { return {1.0, {c}, {0.0}}; }

/// p = 3 + 0.3 cos 2 phi.
inline TrigPolySupport oval() { return {3.0, {0.0, 0.3}, {0.0, 0.0}}; }

/// p = 2 + 0.1 cos 3 phi, constant width 4.
inline TrigPolySupport reuleauxLike() { return {2.0, {0.0, 0.0, 0.1}, {0.0, 0.0, 0.0}}; }

/// Body with centroid at the origin and asymmetric oblique behaviour.
inline TrigPolySupport asymmetricFixture()
{
    return {3.0, {36.0 / 857.0, 0.3, 0.2}, {-279.0 / 8570.0, 0.3, 0.0}};
}

/// Roly-poly family p_c; centroid at the origin for small c.
inline TrigPolySupport rolyPoly(double c)
{
    const double d = 9.0 - 43.0 * c * c;
    return {3.0,
            {36.0 * c * c / d, 3.0 * c, 2.0 * c},
            {-9.0 * (4.0 - 9.0 * c) * c * c / d, 3.0 * c, 0.0}};
}

/**
 * Random strongly convex body with a0 = 1 and harmonics up to `maxK`.
 * Harmonics k >= 2 are scaled so that sum (k^2 - 1)|c_k| stays below a
 * random budget in [0.3, 0.9]; this bounds rho from below by 0.1.
 */
inline TrigPolySupport randomBody(std::mt19937_64& rng, int maxK = 6)
{
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> budgetDist(0.3, 0.9);
    std::uniform_int_distribution<int> kDist(2, maxK);
    const int k = kDist(rng);
    std::vector<double> c(static_cast<std::size_t>(k));
    std::vector<double> s(static_cast<std::size_t>(k));
    double weight = 0.0;
    for (int i = 1; i < k; ++i) {
        const double decay = 1.0 / (i + 1);
        c[i] = unit(rng) * decay;
        s[i] = unit(rng) * decay;
        const double kk = i + 1.0;
        weight += (kk * kk - 1.0) * std::hypot(c[i], s[i]);
    }
    const double budget = budgetDist(rng);
    for (int i = 1; i < k; ++i) {
        c[i] *= budget / weight;
        s[i] *= budget / weight;
    }
    c[0] = 0.3 * unit(rng);
    s[0] = 0.3 * unit(rng);
    return {1.0, std::move(c), std::move(s)};
}

/// Uniform center in a box around `around` whose distance to the evolute exceeds `clearance`.
inline PlanePoint randomOffEvoluteCenter(std::mt19937_64& rng, const ConvexBody& b, PlanePoint around, double halfWidth,
                                         double clearance)
{
    std::uniform_real_distribution<double> offset(-halfWidth, halfWidth);
    for (;;) {
        const PlanePoint o{around.x + offset(rng), around.y + offset(rng)};
        if (convexeq::distanceToEvolute(b, o) > clearance)
            return o;
    }
}

}  // namespace fixtures
