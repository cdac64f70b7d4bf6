#pragma once

#include <cmath>
#include <numbers>

namespace convexeq {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Point (or free vector) in the plane, in body length units.
struct PlanePoint {
    double x = 0.0;
    double y = 0.0;

    constexpr PlanePoint& operator+=(const PlanePoint& o) noexcept { x += o.x; y += o.y; return *this; }
    constexpr PlanePoint& operator-=(const PlanePoint& o) noexcept { x -= o.x; y -= o.y; return *this; }

    friend constexpr PlanePoint operator+(PlanePoint a, const PlanePoint& b) noexcept { return a += b; }
    friend constexpr PlanePoint operator-(PlanePoint a, const PlanePoint& b) noexcept { return a -= b; }
    friend constexpr PlanePoint operator-(const PlanePoint& a) noexcept { return {-a.x, -a.y}; }
    friend constexpr PlanePoint operator*(double s, const PlanePoint& a) noexcept { return {s * a.x, s * a.y}; }
    friend constexpr PlanePoint operator*(const PlanePoint& a, double s) noexcept { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

using PlaneVector = PlanePoint;

[[nodiscard]] constexpr double dot(const PlaneVector& a, const PlaneVector& b) noexcept { return a.x * b.x + a.y * b.y; }

/// z-component of the planar cross product.
[[nodiscard]] constexpr double cross(const PlaneVector& a, const PlaneVector& b) noexcept { return a.x * b.y - a.y * b.x; }

[[nodiscard]] inline double norm(const PlaneVector& a) noexcept { return std::hypot(a.x, a.y); }

[[nodiscard]] inline double distance(const PlanePoint& a, const PlanePoint& b) noexcept { return norm(a - b); }

/// Quarter turn counterclockwise: J(x, y) = (-y, x), so J u = u'.
[[nodiscard]] constexpr PlaneVector rotateQuarter(const PlaneVector& a) noexcept { return {-a.y, a.x}; }

/// Outward unit normal u(phi) = (cos phi, sin phi).
[[nodiscard]] inline PlaneVector unitNormal(double phi) noexcept { return {std::cos(phi), std::sin(phi)}; }

/// u'(phi) = (-sin phi, cos phi).
[[nodiscard]] inline PlaneVector unitTangent(double phi) noexcept { return {-std::sin(phi), std::cos(phi)}; }

[[nodiscard]] inline bool isFinite(const PlanePoint& a) noexcept { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Wraps an angle into [0, 2*pi).
[[nodiscard]] inline double wrapAngle(double phi) noexcept
{
    if (phi >= 0.0 && phi < kTwoPi)
        return phi;
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    return r >= kTwoPi ? 0.0 : r;
}

/// Distance between two angles on the circle, in [0, pi].
[[nodiscard]] inline double angularGap(double a, double b) noexcept
{
    return std::abs(std::remainder(a - b, kTwoPi));
}

}  // namespace convexeq
