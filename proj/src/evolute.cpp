#include "convexeq/evolute.hpp"

#include "convexeq/error.hpp"
#include "detail/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace convexeq {

std::string_view toString(CuspKind kind) noexcept
{
    switch (kind) {
        case CuspKind::MinOfRho: return "min";
        case CuspKind::MaxOfRho: return "max";
        case CuspKind::Saddle: return "saddle";
    }
    return "saddle";
}

PlanePoint evolutePoint(const TrigPolySupport& s, double phi) noexcept
{
    const SupportJet j = s.jet(phi);
    return j.d1 * unitTangent(phi) - j.d2 * unitNormal(phi);
}

PlanePoint evolutePoint(const ConvexBody& b, double phi) noexcept
{
    return evolutePoint(b.support(), phi);
}

namespace {

/// Bound on |rho'|: sum k (k^2 - 1) |c_k|.
double rhoPrimeBound(const TrigPolySupport& s)
{
    double total = 0.0;
    for (std::size_t k = 2; k <= s.harmonics(); ++k) {
        const double kd = static_cast<double>(k);
        total += kd * (kd * kd - 1.0) * std::hypot(s.cosCoeff(k), s.sinCoeff(k));
    }
    return total;
}

}  // namespace

std::vector<Cusp> findCusps(const ConvexBody& b)
{
    const TrigPolySupport& s = b.support();
    const double bound = rhoPrimeBound(s);
    if (bound <= 1e-12 * std::max(1.0, std::abs(s.a0())))
        throw Error(ErrorKind::DegenerateCircle, "radius of curvature is constant; the evolute is a point");

    const int grid = std::max(2048, 128 * static_cast<int>(s.harmonics()));
    const auto rhoPrime = [&](double phi) { return s.jet(phi).rhoPrime(); };
    const auto rhoSecond = [&](double phi) { return s.derivative(phi, 2) + s.derivative(phi, 4); };
    const auto roots = detail::scanRoots(rhoPrime, rhoSecond, grid, 1e-10 * bound, 1e-12);

    std::vector<Cusp> cusps;
    cusps.reserve(roots.size());
    for (const auto& r : roots) {
        Cusp c;
        c.phi = r.phi;
        c.kind = r.touching() ? CuspKind::Saddle : (r.rising ? CuspKind::MinOfRho : CuspKind::MaxOfRho);
        c.location = evolutePoint(s, r.phi);
        c.rho = s.jet(r.phi).rho();
        cusps.push_back(c);
    }
    return cusps;
}

double alternatingArcSum(const ConvexBody& b)
{
    const auto cusps = findCusps(b);
    std::vector<double> turns;
    for (const auto& c : cusps)
        if (c.changesSign())
            turns.push_back(c.phi);
    if (turns.size() < 2)
        return 0.0;

    static const detail::GaussLegendre<20> rule;
    const TrigPolySupport& s = b.support();
    const auto speed = [&](double phi) { return std::abs(s.jet(phi).rhoPrime()); };
    double sum = 0.0;
    double sign = 1.0;
    for (std::size_t i = 0; i < turns.size(); ++i) {
        const double lo = turns[i];
        const double hi = (i + 1 < turns.size()) ? turns[i + 1] : turns[0] + kTwoPi;
        sum += sign * rule.integrate(speed, lo, hi, 8);
        sign = -sign;
    }
    return sum;
}

EvolutePolyline sampleEvolute(const ConvexBody& b, int n)
{
    if (n < 16)
        throw Error(ErrorKind::OutOfRange, "evolute sampling needs at least 16 samples");

    std::vector<double> cuspAngles;
    try {
        for (const auto& c : findCusps(b))
            cuspAngles.push_back(c.phi);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateCircle)
            throw;
    }

    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(n) + cuspAngles.size());
    for (int i = 0; i < n; ++i)
        angles.push_back(kTwoPi * (i + 0.5) / n);
    angles.insert(angles.end(), cuspAngles.begin(), cuspAngles.end());
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(), [](double a, double c) { return c - a < 1e-12; }),
                 angles.end());

    EvolutePolyline out;
    out.angles = angles;
    out.points.reserve(angles.size());
    for (std::size_t i = 0; i < angles.size(); ++i) {
        out.points.push_back(evolutePoint(b, angles[i]));
        const bool isCusp = std::any_of(cuspAngles.begin(), cuspAngles.end(),
                                        [&](double c) { return std::abs(c - angles[i]) < 1e-12; });
        if (isCusp)
            out.cuspIndices.push_back(i);
    }
    return out;
}

double distanceToEvolute(const ConvexBody& b, const PlanePoint& origin)
{
    constexpr int kSamples = 4096;
    const double h = kTwoPi / kSamples;
    const TrigPolySupport& s = b.support();
    const auto gap = [&](double phi) { return distance(evolutePoint(s, phi), origin); };

    std::vector<double> d(kSamples);
    for (int i = 0; i < kSamples; ++i)
        d[i] = gap(i * h);

    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kSamples; ++i) {
        best = std::min(best, d[i]);
        if (d[i] > d[(i + kSamples - 1) % kSamples] || d[i] > d[(i + 1) % kSamples])
            continue;
        const double phi = detail::goldenSectionMin(gap, (i - 1) * h, (i + 1) * h, 1e-13);
        best = std::min(best, gap(phi));
    }
    return best;
}

}  // namespace convexeq
