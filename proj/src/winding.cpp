#include "convexeq/winding.hpp"

#include "convexeq/error.hpp"
#include "detail/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace convexeq {

namespace {

constexpr int kMaxGuardOrder = 12;

/// Bound on |q^(order)| for q' = p' - t p, order >= 1.
double tiltedBound(const TrigPolySupport& s, double t, int order)
{
    const double lower = (order == 1) ? std::abs(s.a0()) + s.derivativeBound(0) : s.derivativeBound(order - 1);
    return s.derivativeBound(order) + std::abs(t) * lower;
}

double tiltedDerivative(const TrigPolySupport& s, double t, double phi, int order)
{
    return s.derivative(phi, order) - t * s.derivative(phi, order - 1);
}

struct RawIntegrals {
    double zeroCount = 0.0;  // n
    double winding = 0.0;    // m
    long samples = 0;
    bool converged = false;
};

struct KernelPair {
    double zeroCount = 0.0;
    double winding = 0.0;

    friend KernelPair operator+(KernelPair a, const KernelPair& b) { return {a.zeroCount + b.zeroCount, a.winding + b.winding}; }
    friend KernelPair operator*(double s, const KernelPair& a) { return {s * a.zeroCount, s * a.winding}; }
};

void requireNonDegenerate(const TrigPolySupport& s, double t, ErrorKind kind)
{
    if (tiltedBound(s, t, 1) <= 1e-12 * std::max(1.0, std::abs(s.a0())))
        throw Error(kind, kind == ErrorKind::DegenerateCircle
                              ? "support function is constant about the center; every direction is an equilibrium"
                              : "evolute is a single point at the center");
}

RawIntegrals integrate(const TrigPolySupport& s, double t)
{
    const auto res = detail::periodicTrapezoid<KernelPair>(
        [&](double phi) {
            const CountingKernel k = countingKernel(s, t, phi);
            return KernelPair{k.zeroCount, k.winding};
        },
        kCountingStartSamples, kCountingMaxSamples,
        [](const KernelPair& a, const KernelPair& b) { return std::abs(a.zeroCount - b.zeroCount) / kPi; },
        [](const KernelPair&) { return 1e-9; });
    return {res.value.zeroCount / kPi, res.value.winding / kTwoPi, res.samples, res.converged};
}

ZeroCount roundZeroCount(const RawIntegrals& raw)
{
    ZeroCount out;
    out.n = static_cast<int>(std::lround(raw.zeroCount));
    out.report = {raw.zeroCount, raw.samples, std::abs(raw.zeroCount - out.n), raw.converged};
    if (!(out.report.residual <= kZeroCountResidual))
        throw NotConvergedError(raw.zeroCount, raw.samples);
    return out;
}

EvoluteWinding roundWinding(const RawIntegrals& raw)
{
    EvoluteWinding out;
    out.m = HalfInteger::nearest(raw.winding);
    out.report = {raw.winding, raw.samples, std::abs(2.0 * raw.winding - out.m.twice), raw.converged};
    if (!(out.report.residual < kWindingResidual))
        throw NotConvergedError(raw.winding, raw.samples);
    return out;
}

}  // namespace

CountingKernel countingKernel(const TrigPolySupport& s, double t, double phi)
{
    const SupportJet j = s.jet(phi);
    const double d1 = j.d1 - t * j.p;
    const double d2 = j.d2 - t * j.d1;
    const double d3 = j.d3 - t * j.d2;
    const double denom = d1 * d1 + d2 * d2;
    const double scale = tiltedBound(s, t, 1) + tiltedBound(s, t, 2);
    if (denom >= 1e-16 * scale * scale)
        return {(d2 * d2 - d1 * d3) / denom, d1 * (d1 + d3) / denom, false};

    // q' has a zero of order k - 1 here; find k from the first derivative
    // of order >= 3 that does not vanish.
    int k = kMaxGuardOrder;
    for (int order = 3; order <= kMaxGuardOrder; ++order) {
        const double value = (order == 3) ? d3 : tiltedDerivative(s, t, phi, order);
        if (std::abs(value) > 1e-8 * tiltedBound(s, t, order)) {
            k = order;
            break;
        }
    }
    const double km1 = static_cast<double>(k - 1);
    return {1.0 / km1, (k - 2.0) / km1, true};
}

ZeroCount zeroCountIntegral(const TrigPolySupport& s, double tanAlpha)
{
    requireNonDegenerate(s, tanAlpha, ErrorKind::DegenerateCircle);
    return roundZeroCount(integrate(s, tanAlpha));
}

EvoluteWinding windingIntegral(const TrigPolySupport& s, double tanAlpha)
{
    requireNonDegenerate(s, tanAlpha, ErrorKind::DegeneratePointEvolute);
    const RawIntegrals raw = integrate(s, tanAlpha);
    EvoluteWinding w = roundWinding(raw);
    if (raw.converged) {
        const ZeroCount n = roundZeroCount(raw);
        if (n.n != 2 - w.m.twice)
            throw InvariantViolation("zero-count integral " + std::to_string(n.n) + " differs from 2 - 2m = " +
                                     std::to_string(2 - w.m.twice));
    }
    return w;
}

ZeroCount zeroCountIntegral(const ConvexBody& centered)
{
    ZeroCount n = zeroCountIntegral(centered.support(), 0.0);
    if (n.n < 1)
        throw InvariantViolation("a periodic support function has at least one equilibrium");
    return n;
}

EvoluteWinding evoluteWinding(const ConvexBody& centered)
{
    EvoluteWinding w = windingIntegral(centered.support(), 0.0);
    if (w.m.twice > 0)
        throw InvariantViolation("evolute winding number must be nonpositive, got " +
                                 std::to_string(w.m.value()));
    return w;
}

double polygonalWinding(const EvolutePolyline& poly, const PlanePoint& center)
{
    const auto& pts = poly.points;
    if (pts.empty())
        return 0.0;
    for (const auto& p : pts)
        if (distance(p, center) < 1e-12)
            throw Error(ErrorKind::VertexAtCenter, "polyline vertex coincides with the winding center");

    double total = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const PlaneVector a = pts[i] - center;
        const PlaneVector b = pts[(i + 1) % pts.size()] - center;
        total += std::atan2(cross(a, b), dot(a, b));
    }
    return total / kTwoPi;
}

}  // namespace convexeq
