#include "convexeq/body.hpp"

#include "convexeq/error.hpp"
#include "detail/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace convexeq {

TrigPolySupport::TrigPolySupport(double a0, std::vector<double> cosCoeffs, std::vector<double> sinCoeffs)
    : a0_(a0), cos_(std::move(cosCoeffs)), sin_(std::move(sinCoeffs))
{
    if (cos_.size() != sin_.size())
        throw std::invalid_argument("cosine and sine coefficient arrays differ in length");
}

double TrigPolySupport::cosCoeff(std::size_t k) const noexcept
{
    return (k >= 1 && k <= cos_.size()) ? cos_[k - 1] : 0.0;
}

double TrigPolySupport::sinCoeff(std::size_t k) const noexcept
{
    return (k >= 1 && k <= sin_.size()) ? sin_[k - 1] : 0.0;
}

double TrigPolySupport::derivative(double phi, int order) const
{
    if (order < 0)
        throw std::invalid_argument("negative derivative order");
    double total = (order == 0) ? a0_ : 0.0;
    // d^n/dphi^n of (c cos k phi + s sin k phi) cycles through
    // (c, s) -> (s, -c) -> (-c, -s) -> (-s, c), scaled by k^n.
    const int cycle = order % 4;
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        const double c = cos_[i];
        const double s = sin_[i];
        double a = c;
        double b = s;
        switch (cycle) {
            case 1: a = s; b = -c; break;
            case 2: a = -c; b = -s; break;
            case 3: a = -s; b = c; break;
            default: break;
        }
        total += std::pow(k, order) * (a * std::cos(k * phi) + b * std::sin(k * phi));
    }
    return total;
}

SupportJet TrigPolySupport::jet(double phi) const noexcept
{
    SupportJet j{a0_, 0.0, 0.0, 0.0};
    const double c1 = std::cos(phi);
    const double s1 = std::sin(phi);
    double ck = c1;
    double sk = s1;
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        if (i > 0) {
            // Re-seed periodically to keep the angle-addition recurrence accurate.
            if (i % 16 == 0) {
                const double k = static_cast<double>(i + 1);
                ck = std::cos(k * phi);
                sk = std::sin(k * phi);
            } else {
                const double next = ck * c1 - sk * s1;
                sk = sk * c1 + ck * s1;
                ck = next;
            }
        }
        const double k = static_cast<double>(i + 1);
        const double c = cos_[i];
        const double s = sin_[i];
        const double even = c * ck + s * sk;
        const double odd = s * ck - c * sk;
        j.p += even;
        j.d1 += k * odd;
        j.d2 -= k * k * even;
        j.d3 -= k * k * k * odd;
    }
    return j;
}

double TrigPolySupport::derivativeBound(int order) const noexcept
{
    double total = 0.0;
    for (std::size_t i = 0; i < cos_.size(); ++i)
        total += std::pow(static_cast<double>(i + 1), order) * std::hypot(cos_[i], sin_[i]);
    return total;
}

TrigPolySupport TrigPolySupport::shifted(const PlaneVector& offset) const
{
    std::vector<double> c = cos_;
    std::vector<double> s = sin_;
    if (c.empty() && (offset.x != 0.0 || offset.y != 0.0)) {
        c.push_back(0.0);
        s.push_back(0.0);
    }
    if (!c.empty()) {
        c[0] -= offset.x;
        s[0] -= offset.y;
    }
    return {a0_, std::move(c), std::move(s)};
}

TrigPolySupport TrigPolySupport::rotated(double theta) const
{
    std::vector<double> c(cos_.size());
    std::vector<double> s(sin_.size());
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        const double ct = std::cos(k * theta);
        const double st = std::sin(k * theta);
        c[i] = cos_[i] * ct - sin_[i] * st;
        s[i] = cos_[i] * st + sin_[i] * ct;
    }
    return {a0_, std::move(c), std::move(s)};
}

double evalSupport(const TrigPolySupport& s, double phi, int order)
{
    if (order < 0 || order > 3)
        throw Error(ErrorKind::OutOfRange, "derivative order must be 0..3");
    return s.derivative(phi, order);
}

namespace {

/// Minimum of rho over the circle and where it is attained.
std::pair<double, double> certifiedRhoMin(const TrigPolySupport& s)
{
    const int n = std::max(1024, 64 * static_cast<int>(s.harmonics()));
    const double h = kTwoPi / n;
    std::vector<double> rho(n);
    for (int i = 0; i < n; ++i)
        rho[i] = s.jet(i * h).rho();

    const auto rhoAt = [&](double phi) { return s.jet(phi).rho(); };
    double best = rho[0];
    double bestPhi = 0.0;
    for (int i = 0; i < n; ++i) {
        const double prev = rho[(i + n - 1) % n];
        const double next = rho[(i + 1) % n];
        if (rho[i] > prev || rho[i] > next)
            continue;
        const double phi = detail::goldenSectionMin(rhoAt, (i - 1) * h, (i + 1) * h, 1e-12);
        const double value = std::min(rhoAt(phi), rho[i]);
        if (value < best) {
            best = value;
            bestPhi = rhoAt(phi) <= rho[i] ? wrapAngle(phi) : i * h;
        }
    }
    return {best, bestPhi};
}

}  // namespace

ConvexBody validate(const TrigPolySupport& s)
{
    for (double c : s.cosCoeffs())
        if (!std::isfinite(c))
            throw NotConvexError(0.0, c);
    for (double c : s.sinCoeffs())
        if (!std::isfinite(c))
            throw NotConvexError(0.0, c);
    const auto [rhoMin, where] = certifiedRhoMin(s);
    if (!(rhoMin > kConvexityTolerance) || !std::isfinite(s.a0()))
        throw NotConvexError(where, rhoMin);

    ConvexBody b;
    b.support_ = s;
    b.rhoMin_ = rhoMin;
    b.perimeter_ = perimeter(s);
    b.area_ = area(s);
    b.centroid_ = centroid(s);
    return b;
}

ConvexBody recenter(const ConvexBody& b, const PlanePoint& origin)
{
    if (origin.x == 0.0 && origin.y == 0.0)
        return b;
    ConvexBody out = b;
    out.support_ = b.support_.shifted(origin);
    out.centroid_ = b.centroid_ - origin;
    return out;
}

PlanePoint boundaryPoint(const ConvexBody& b, double phi)
{
    const SupportJet j = b.support().jet(phi);
    return j.p * unitNormal(phi) + j.d1 * unitTangent(phi);
}

double radiusOfCurvature(const ConvexBody& b, double phi)
{
    return b.support().jet(phi).rho();
}

double arcLength(const ConvexBody& b, double phi)
{
    if (!(phi >= 0.0 && phi <= kTwoPi))
        throw Error(ErrorKind::OutOfRange, "arc length angle must lie in [0, 2 pi]");
    const TrigPolySupport& s = b.support();
    if (phi == kTwoPi)
        return perimeter(s);
    double integral = s.a0() * phi;
    for (std::size_t k = 1; k <= s.harmonics(); ++k) {
        const double kd = static_cast<double>(k);
        integral += (s.cosCoeff(k) * std::sin(kd * phi) + s.sinCoeff(k) * (1.0 - std::cos(kd * phi))) / kd;
    }
    return integral + s.derivative(phi, 1) - s.derivative(0.0, 1);
}

double perimeter(const TrigPolySupport& s) noexcept
{
    return kTwoPi * s.a0();
}

double area(const TrigPolySupport& s) noexcept
{
    // 1/2 int (p^2 - p'^2) with orthogonality of the harmonics.
    double harmonicPart = 0.0;
    for (std::size_t k = 1; k <= s.harmonics(); ++k) {
        const double kd = static_cast<double>(k);
        const double c = s.cosCoeff(k);
        const double sn = s.sinCoeff(k);
        harmonicPart += (1.0 - kd * kd) * (c * c + sn * sn);
    }
    return kPi * s.a0() * s.a0() + 0.5 * kPi * harmonicPart;
}

double area(const ConvexBody& b) noexcept
{
    return b.area();
}

namespace {

constexpr long kQuadratureStart = 64;
constexpr long kQuadratureCap = 1L << 22;

/// Convergence is judged relative to `reference`, the magnitude of the
/// moment a body of the same size would have one length unit off-center.
PlanePoint integratePoint(double reference, auto&& integrand)
{
    auto res = detail::periodicTrapezoid<PlanePoint>(
        integrand, kQuadratureStart, kQuadratureCap,
        [](const PlanePoint& a, const PlanePoint& b) { return distance(a, b); },
        [&](const PlanePoint& v) { return 1e-10 * std::max(norm(v), reference); });
    if (!res.converged)
        throw Error(ErrorKind::QuadratureDiverged, "centroid quadrature did not settle");
    return res.value;
}

}  // namespace

PlanePoint centroid(const TrigPolySupport& s)
{
    const PlanePoint moment = integratePoint(3.0 * area(s) * s.a0(), [&](double phi) {
        const SupportJet j = s.jet(phi);
        const PlanePoint z = j.p * unitNormal(phi) + j.d1 * unitTangent(phi);
        return (j.p * j.rho()) * z;
    });
    return (1.0 / (3.0 * area(s))) * moment;
}

PlanePoint centroid(const ConvexBody& b)
{
    return b.centroid();
}

PlanePoint boundaryCentroid(const ConvexBody& b)
{
    const TrigPolySupport& s = b.support();
    const PlanePoint moment = integratePoint(b.perimeter() * s.a0(), [&](double phi) {
        const SupportJet j = s.jet(phi);
        return (j.p * j.p - 0.5 * j.d1 * j.d1) * unitNormal(phi);
    });
    return (1.0 / b.perimeter()) * moment;
}

std::optional<double> constantWidth(const ConvexBody& b)
{
    const TrigPolySupport& s = b.support();
    for (std::size_t k = 2; k <= s.harmonics(); k += 2)
        if (std::abs(s.cosCoeff(k)) > 1e-12 || std::abs(s.sinCoeff(k)) > 1e-12)
            return std::nullopt;
    return 2.0 * s.a0();
}

}  // namespace convexeq
