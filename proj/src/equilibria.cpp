#include "convexeq/equilibria.hpp"

#include "convexeq/error.hpp"
#include "convexeq/evolute.hpp"
#include "detail/tilted_roots.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace convexeq {

std::string_view toString(Stability s) noexcept
{
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::Unstable: return "unstable";
        case Stability::Degenerate: return "degenerate";
    }
    return "degenerate";
}

std::vector<Equilibrium> findHorizontalEquilibria(const ConvexBody& b, const PlanePoint& center)
{
    const TrigPolySupport s = b.support().shifted(center);
    if (detail::tiltedDegenerate(s, 0.0))
        throw Error(ErrorKind::DegenerateCircle, "disk about its own center: every direction is an equilibrium");

    const auto tol = detail::tiltedScale(s, 0.0);
    std::vector<Equilibrium> out;
    for (const auto& root : detail::tiltedRoots(s, 0.0)) {
        const SupportJet j = s.jet(root.phi);
        Equilibrium e;
        e.phi = root.phi;
        e.point = center + (j.p * unitNormal(root.phi) + j.d1 * unitTangent(root.phi));
        e.multiplicity = root.multiplicity;
        if (j.d2 > tol.degenerate)
            e.stability = Stability::Stable;
        else if (j.d2 < -tol.degenerate)
            e.stability = Stability::Unstable;
        else
            e.stability = Stability::Degenerate;
        out.push_back(e);
    }
    return out;
}

CountConsistency countConsistency(const ConvexBody& b, const PlanePoint& center)
{
    CountConsistency c;
    c.nDirect = static_cast<int>(findHorizontalEquilibria(b, center).size());
    c.m = evoluteWinding(recenter(b, center)).m;
    c.nFormula = 2 - c.m.twice;
    if (c.nDirect != c.nFormula)
        throw MismatchError(c.nDirect, c.nFormula);
    return c;
}

PlanePoint RegionMap::center(int ix, int iy) const noexcept
{
    const double tx = countX > 1 ? static_cast<double>(ix) / (countX - 1) : 0.5;
    const double ty = countY > 1 ? static_cast<double>(iy) / (countY - 1) : 0.5;
    return {lower.x + tx * (upper.x - lower.x), lower.y + ty * (upper.y - lower.y)};
}

RegionMap regionMap(const ConvexBody& b, const PlanePoint& lower, const PlanePoint& upper, int countX, int countY,
                    double delta, unsigned threads)
{
    if (countX < 2 || countY < 2)
        throw Error(ErrorKind::OutOfRange, "region map needs a resolution of at least 2x2");

    RegionMap map;
    map.lower = lower;
    map.upper = upper;
    map.countX = countX;
    map.countY = countY;
    map.delta = delta;
    const std::size_t cells = static_cast<std::size_t>(countX) * static_cast<std::size_t>(countY);
    map.counts.assign(cells, RegionMap::kUnconverged);
    map.nearEvolute.assign(cells, 0);

    const auto evaluate = [&](std::size_t idx) {
        const int ix = static_cast<int>(idx % static_cast<std::size_t>(countX));
        const int iy = static_cast<int>(idx / static_cast<std::size_t>(countX));
        const PlanePoint o = map.center(ix, iy);
        const bool near = distanceToEvolute(b, o) < delta;
        map.nearEvolute[idx] = near ? 1 : 0;
        try {
            map.counts[idx] = 2 - evoluteWinding(recenter(b, o)).m.twice;
        } catch (const Error&) {
            map.counts[idx] = RegionMap::kUnconverged;
        } catch (const InvariantViolation&) {
            if (!near)
                throw;
            map.counts[idx] = RegionMap::kUnconverged;
        }
    };

    unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, cells));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failureLock;
    const auto worker = [&] {
        for (std::size_t idx = next.fetch_add(1); idx < cells; idx = next.fetch_add(1)) {
            try {
                evaluate(idx);
            } catch (...) {
                std::lock_guard lock(failureLock);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return map;
}

NeighbourAverage neighbourAverageCheck(const ConvexBody& b, double phi)
{
    const TrigPolySupport& s = b.support();
    const double rhoPrime = s.jet(phi).rhoPrime();
    const double bound = s.derivativeBound(1) + s.derivativeBound(3);
    if (!(std::abs(rhoPrime) > 1e-6 * bound))
        throw Error(ErrorKind::NotRegularEvolutePoint, "angle is a stationary point of the radius of curvature");

    const PlanePoint on = evolutePoint(b, phi);
    // e' = -rho' u is tangent to u, so the evolute's normal at a regular point is u'.
    // Near a cusp another branch may lie within eps; shrink until both sides
    // are closer to this arc than to any other part of the evolute.
    PlaneVector step = (1e-3 * b.scale()) * unitTangent(phi);
    for (int halvings = 0; halvings < 30; ++halvings) {
        const double reach = 0.75 * norm(step);
        if (distanceToEvolute(b, on + step) > reach && distanceToEvolute(b, on - step) > reach)
            break;
        step = 0.5 * step;
    }
    NeighbourAverage out;
    out.center = on;
    out.nOn = countConsistency(b, on).nDirect;
    out.nSideA = countConsistency(b, on + step).nDirect;
    out.nSideB = countConsistency(b, on - step).nDirect;
    return out;
}

}  // namespace convexeq
