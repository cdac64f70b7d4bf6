#include "detail/tilted_roots.hpp"

#include "detail/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace convexeq::detail {

namespace {

double boundFor(const TrigPolySupport& s, double t, int order)
{
    const double lower = (order == 1) ? std::abs(s.a0()) + s.derivativeBound(0) : s.derivativeBound(order - 1);
    return s.derivativeBound(order) + std::abs(t) * lower;
}

double tilted(const TrigPolySupport& s, double t, double phi, int order)
{
    return s.derivative(phi, order) - t * s.derivative(phi, order - 1);
}

int multiplicityAt(const TrigPolySupport& s, double t, double phi, bool touching, const TiltedScale& tol)
{
    int m = 1;
    if (std::abs(tilted(s, t, phi, 2)) <= tol.degenerate) {
        m = 2;
        // Root location is only known to ~eps^(1/m); higher derivatives get a loose test.
        for (int order = 3; order <= 8; ++order) {
            if (std::abs(tilted(s, t, phi, order)) > 1e-5 * boundFor(s, t, order))
                break;
            m = order;
        }
    }
    if (touching && m % 2 == 1)
        ++m;
    if (!touching && m % 2 == 0)
        ++m;
    return m;
}

}  // namespace

TiltedScale tiltedScale(const TrigPolySupport& s, double t)
{
    TiltedScale out;
    out.scale = boundFor(s, t, 1) + boundFor(s, t, 2);
    out.touch = 1e-9 * out.scale;
    out.degenerate = 1e-8 * out.scale;
    return out;
}

bool tiltedDegenerate(const TrigPolySupport& s, double t)
{
    return boundFor(s, t, 1) <= 1e-12 * std::max(1.0, std::abs(s.a0()));
}

std::vector<TiltedRoot> tiltedRoots(const TrigPolySupport& s, double t)
{
    const TiltedScale tol = tiltedScale(s, t);
    const int grid = std::max(4096, 256 * static_cast<int>(s.harmonics()));
    const auto f = [&](double phi) {
        const SupportJet j = s.jet(phi);
        return j.d1 - t * j.p;
    };
    const auto df = [&](double phi) {
        const SupportJet j = s.jet(phi);
        return j.d2 - t * j.d1;
    };
    const auto scanned = scanRoots(f, df, grid, tol.touch, 1e-12);
    std::vector<TiltedRoot> out;
    out.reserve(scanned.size());
    for (const auto& r : scanned)
        out.push_back({r.phi, multiplicityAt(s, t, r.phi, r.touching(), tol)});
    return out;
}

}  // namespace convexeq::detail
