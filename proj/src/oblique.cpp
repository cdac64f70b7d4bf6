#include "convexeq/oblique.hpp"

#include "convexeq/error.hpp"
#include "convexeq/evolute.hpp"
#include "detail/numerics.hpp"
#include "detail/tilted_roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace convexeq {

Incline::Incline(double alpha) : alpha_(alpha)
{
    if (!(std::abs(alpha) < 0.5 * kPi))
        throw Error(ErrorKind::OutOfRange, "inclination must lie strictly between -pi/2 and pi/2");
}

std::vector<ObliqueEquilibrium> findObliqueEquilibria(const ConvexBody& b, const PlanePoint& center, double alpha)
{
    const double t = Incline(alpha).slope();
    const TrigPolySupport s = b.support().shifted(center);
    if (detail::tiltedDegenerate(s, t))
        throw Error(ErrorKind::DegenerateCircle, "disk about its own center: every direction is an equilibrium");

    const auto tol = detail::tiltedScale(s, t);
    std::vector<ObliqueEquilibrium> out;
    for (const auto& root : detail::tiltedRoots(s, t)) {
        const SupportJet j = s.jet(root.phi);
        const double curvature = j.d2 - j.p * t * t;
        ObliqueEquilibrium e{root.phi, Stability::Degenerate};
        if (curvature > tol.degenerate)
            e.stability = Stability::Stable;
        else if (curvature < -tol.degenerate)
            e.stability = Stability::Unstable;
        out.push_back(e);
    }
    return out;
}

PlanePoint perturbedEvolutePoint(const ConvexBody& b, double alpha, double phi)
{
    const double t = Incline(alpha).slope();
    return evolutePoint(b, phi) - t * rotateQuarter(boundaryPoint(b, phi));
}

ObliqueCount obliqueCountViaFormula(const ConvexBody& b, const PlanePoint& center, double alpha)
{
    const double t = Incline(alpha).slope();
    const TrigPolySupport s = b.support().shifted(center);
    const EvoluteWinding w = windingIntegral(s, t);
    ObliqueCount out{2 - w.m.twice, w.m, w.report};
    const int direct = static_cast<int>(findObliqueEquilibria(b, center, alpha).size());
    if (direct != out.nAlpha)
        throw MismatchError(direct, out.nAlpha);
    return out;
}

double ObliqueSupport::derivative(double phi, int order) const
{
    const double periodic = periodic_.derivative(phi, order);
    if (order == 0)
        return periodic + slope_ * phi + constant_;
    if (order == 1)
        return periodic + slope_;
    return periodic;
}

PlanePoint ObliqueSupport::evolutePoint(double phi) const
{
    return derivative(phi, 1) * unitTangent(phi) - derivative(phi, 2) * unitNormal(phi);
}

ObliqueSupport obliquePrimitive(const ConvexBody& b, double alpha)
{
    const double t = Incline(alpha).slope();
    const TrigPolySupport& s = b.support();
    // Integrating -t p term-wise: cos k -> sin k / k, sin k -> -cos k / k, a0 -> a0 phi.
    std::vector<double> c(s.harmonics());
    std::vector<double> sn(s.harmonics());
    for (std::size_t k = 1; k <= s.harmonics(); ++k) {
        const double kd = static_cast<double>(k);
        c[k - 1] = s.cosCoeff(k) + t * s.sinCoeff(k) / kd;
        sn[k - 1] = s.sinCoeff(k) - t * s.cosCoeff(k) / kd;
    }
    return ObliqueSupport(TrigPolySupport(s.a0(), std::move(c), std::move(sn)), -t * s.a0(), 0.0);
}

ObliqueBody buildObliqueBody(const ConvexBody& b, double alpha)
{
    const ObliqueSupport primitive = obliquePrimitive(b, alpha);
    const TrigPolySupport& periodic = primitive.periodic();

    const int n = std::max(1024, 64 * static_cast<int>(periodic.harmonics()));
    double periodicRhoMin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        periodicRhoMin = std::min(periodicRhoMin, periodic.jet(kTwoPi * i / n).rho());

    const double target = 0.1 * b.rhoMin();
    const double constant = std::max(0.0, target - periodicRhoMin);
    ObliqueBody out{ObliqueSupport(periodic, primitive.slope(), constant), constant, periodicRhoMin + constant};

    const double drift = std::abs(out.support.rho(kTwoPi) - out.support.rho(0.0));
    if (drift > 1e-10)
        throw Error(ErrorKind::NonPeriodic, "the primitive of p' - tan(alpha) p has a linear term; rho_alpha is not periodic");
    return out;
}

std::vector<TraceSample> centerTrace(const ConvexBody& b, const PlanePoint& center, double alpha, int samples)
{
    if (samples < 2)
        throw Error(ErrorKind::OutOfRange, "trace needs at least two samples");
    const Incline incline(alpha);
    const ConvexBody local = recenter(b, center);
    const TrigPolySupport& s = local.support();
    const PlaneVector v = incline.downhill();
    const PlaneVector vPerp = incline.upward();

    std::vector<TraceSample> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double phi = (i + 1 == samples) ? kTwoPi : kTwoPi * i / (samples - 1);
        const SupportJet j = s.jet(phi);
        const double rolled = arcLength(local, phi) - j.d1;
        out.push_back({phi, rolled * v + j.p * vPerp});
    }
    return out;
}

LogDerivativeRange logDerivativeRange(const ConvexBody& b, const PlanePoint& center)
{
    const TrigPolySupport s = b.support().shifted(center);
    const int n = std::max(4096, 256 * static_cast<int>(s.harmonics()));
    const double h = kTwoPi / n;
    std::vector<double> ratio(n);
    for (int i = 0; i < n; ++i) {
        const SupportJet j = s.jet(i * h);
        if (!(j.p > 0.0))
            throw Error(ErrorKind::OutOfRange, "center is not interior: support distance is not positive");
        ratio[i] = j.d1 / j.p;
    }
    const auto ratioAt = [&](double phi) {
        const SupportJet j = s.jet(phi);
        return j.d1 / j.p;
    };

    LogDerivativeRange out;
    out.min = std::numeric_limits<double>::infinity();
    out.max = -std::numeric_limits<double>::infinity();
    std::vector<double> maxima;
    for (int i = 0; i < n; ++i) {
        const double prev = ratio[(i + n - 1) % n];
        const double next = ratio[(i + 1) % n];
        if (ratio[i] > prev && ratio[i] >= next) {
            const double phi = detail::goldenSectionMin([&](double x) { return -ratioAt(x); }, (i - 1) * h, (i + 1) * h,
                                                        1e-13);
            const double value = std::max(ratioAt(phi), ratio[i]);
            maxima.push_back(value);
            if (value > out.max) {
                out.max = value;
                out.argMax = wrapAngle(phi);
            }
        }
        if (ratio[i] < prev && ratio[i] <= next) {
            const double phi = detail::goldenSectionMin(ratioAt, (i - 1) * h, (i + 1) * h, 1e-13);
            const double value = std::min(ratioAt(phi), ratio[i]);
            if (value < out.min) {
                out.min = value;
                out.argMin = wrapAngle(phi);
            }
        }
    }
    if (maxima.empty()) {
        // p'/p constant on the grid (a disk about its center)
        const auto [lo, hi] = std::minmax_element(ratio.begin(), ratio.end());
        out.min = *lo;
        out.max = *hi;
    }
    out.localMaxima = static_cast<int>(maxima.size());
    std::sort(maxima.begin(), maxima.end(), std::greater<>());
    out.runnerUpMax = maxima.size() > 1 ? maxima[1] : out.max;
    return out;
}

}  // namespace convexeq
