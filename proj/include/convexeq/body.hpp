#pragma once

#include "convexeq/geometry.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace convexeq {

/// Value and first three derivatives of a support function at one angle.
struct SupportJet {
    double p = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;

    [[nodiscard]] double rho() const noexcept { return p + d2; }
    [[nodiscard]] double rhoPrime() const noexcept { return d1 + d3; }
};

/**
 * Support function given by a finite Fourier series
 *
 *     p(phi) = a0 + sum_{k=1..K} cos_k * cos(k phi) + sin_k * sin(k phi).
 *
 * Index i of the coefficient arrays holds harmonic k = i + 1. Derivatives of
 * every order are exact (term-wise differentiation).
 */
class TrigPolySupport {
public:
    TrigPolySupport() = default;

    /// Throws std::invalid_argument when the arrays differ in length.
    TrigPolySupport(double a0, std::vector<double> cosCoeffs, std::vector<double> sinCoeffs);

    [[nodiscard]] double a0() const noexcept { return a0_; }
    [[nodiscard]] std::span<const double> cosCoeffs() const noexcept { return cos_; }
    [[nodiscard]] std::span<const double> sinCoeffs() const noexcept { return sin_; }

    /// Highest harmonic K (trailing zero harmonics are kept).
    [[nodiscard]] std::size_t harmonics() const noexcept { return cos_.size(); }

    [[nodiscard]] double cosCoeff(std::size_t k) const noexcept;
    [[nodiscard]] double sinCoeff(std::size_t k) const noexcept;

    /// p^(order)(phi) for any order >= 0.
    [[nodiscard]] double derivative(double phi, int order) const;

    [[nodiscard]] double operator()(double phi) const { return derivative(phi, 0); }

    /// p, p', p'', p''' in a single pass over the harmonics.
    [[nodiscard]] SupportJet jet(double phi) const noexcept;

    /// Upper bound sum_k k^order |c_k| of |p^(order)| for order >= 1.
    [[nodiscard]] double derivativeBound(int order) const noexcept;

    /// Translates the reference point: p(phi) - <offset, u(phi)>.
    [[nodiscard]] TrigPolySupport shifted(const PlaneVector& offset) const;

    /// Support function of the body rotated counterclockwise by theta: p(phi - theta).
    [[nodiscard]] TrigPolySupport rotated(double theta) const;

    friend bool operator==(const TrigPolySupport&, const TrigPolySupport&) = default;

private:
    double a0_ = 0.0;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

/// Checks the derivative order is 0..3 and evaluates; throws Error(OutOfRange) otherwise.
[[nodiscard]] double evalSupport(const TrigPolySupport& s, double phi, int order);

/**
 * A support function certified strongly convex (rho = p + p'' > 0), with its
 * perimeter, area and centroid cached. Construct through validate().
 */
class ConvexBody {
public:
    [[nodiscard]] const TrigPolySupport& support() const noexcept { return support_; }
    [[nodiscard]] double rhoMin() const noexcept { return rhoMin_; }
    [[nodiscard]] double perimeter() const noexcept { return perimeter_; }
    [[nodiscard]] double area() const noexcept { return area_; }
    [[nodiscard]] const PlanePoint& centroid() const noexcept { return centroid_; }

    /// Length scale used for relative tolerances (the mean support distance a0).
    [[nodiscard]] double scale() const noexcept { return support_.a0(); }

private:
    friend ConvexBody validate(const TrigPolySupport& s);
    friend ConvexBody recenter(const ConvexBody& b, const PlanePoint& origin);

    ConvexBody() = default;

    TrigPolySupport support_;
    double rhoMin_ = 0.0;
    double perimeter_ = 0.0;
    double area_ = 0.0;
    PlanePoint centroid_;
};

/// Smallest certified rho accepted by validate().
inline constexpr double kConvexityTolerance = 1e-9;

/**
 * Certifies min rho > kConvexityTolerance by sampling rho at max(1024, 64 K)
 * angles and polishing every sampled local minimum with golden-section search.
 * Throws NotConvexError with the offending angle otherwise.
 */
[[nodiscard]] ConvexBody validate(const TrigPolySupport& s);

/// Re-expresses the body with respect to the origin O. Only the first harmonic changes.
[[nodiscard]] ConvexBody recenter(const ConvexBody& b, const PlanePoint& origin);

/// z(phi) = p u + p' u'.
[[nodiscard]] PlanePoint boundaryPoint(const ConvexBody& b, double phi);

/// Radius of curvature rho(phi) = p + p''.
[[nodiscard]] double radiusOfCurvature(const ConvexBody& b, double phi);

/// s(phi) in closed form; phi must lie in [0, 2 pi] (Error(OutOfRange) otherwise).
[[nodiscard]] double arcLength(const ConvexBody& b, double phi);

[[nodiscard]] double perimeter(const TrigPolySupport& s) noexcept;

/// Exact area from the Fourier coefficients.
[[nodiscard]] double area(const TrigPolySupport& s) noexcept;
[[nodiscard]] double area(const ConvexBody& b) noexcept;

/// Centroid of the homogeneous body by periodic trapezoid with doubling.
[[nodiscard]] PlanePoint centroid(const TrigPolySupport& s);
[[nodiscard]] PlanePoint centroid(const ConvexBody& b);

/// Center of mass of the boundary curve.
[[nodiscard]] PlanePoint boundaryCentroid(const ConvexBody& b);

/// Width d when p(phi) + p(phi + pi) is constant, i.e. every even harmonic vanishes.
[[nodiscard]] std::optional<double> constantWidth(const ConvexBody& b);

}  // namespace convexeq
