#pragma once

#include "convexeq/body.hpp"
#include "convexeq/equilibria.hpp"
#include "convexeq/winding.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace convexeq {

/// Supporting line inclined by alpha in (-pi/2, pi/2).
class Incline {
public:
    /// Throws Error(OutOfRange) unless |alpha| < pi/2.
    explicit Incline(double alpha);

    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] double slope() const noexcept { return std::tan(alpha_); }

    /// v = (cos a, -sin a), pointing downhill along the line.
    [[nodiscard]] PlaneVector downhill() const noexcept { return {std::cos(alpha_), -std::sin(alpha_)}; }

    /// v_perp = (sin a, cos a), the upward normal of the line.
    [[nodiscard]] PlaneVector upward() const noexcept { return {std::sin(alpha_), std::cos(alpha_)}; }

private:
    double alpha_;
};

struct ObliqueEquilibrium {
    double phi = 0.0;
    Stability stability = Stability::Degenerate;
};

/**
 * Zeros of p_O' - tan(alpha) p_O, classified by the sign of
 * p_O'' - p_O tan^2(alpha). An empty list is a valid answer for alpha != 0.
 */
[[nodiscard]] std::vector<ObliqueEquilibrium> findObliqueEquilibria(const ConvexBody& b, const PlanePoint& center,
                                                                    double alpha);

/// e_alpha(phi) = e(phi) - tan(alpha) J z(phi).
[[nodiscard]] PlanePoint perturbedEvolutePoint(const ConvexBody& b, double alpha, double phi);

struct ObliqueCount {
    int nAlpha = 0;
    HalfInteger mAlpha;
    QuadratureReport report;
};

/// n_alpha = 2 - 2 m_alpha, checked against the direct root count (MismatchError).
[[nodiscard]] ObliqueCount obliqueCountViaFormula(const ConvexBody& b, const PlanePoint& center, double alpha);

/**
 * Primitive of p' - tan(alpha) p: a periodic trigonometric part plus the
 * linear term slope * phi and an additive constant.
 */
class ObliqueSupport {
public:
    ObliqueSupport(TrigPolySupport periodic, double slope, double constant)
        : periodic_(std::move(periodic)), slope_(slope), constant_(constant)
    {
    }

    [[nodiscard]] const TrigPolySupport& periodic() const noexcept { return periodic_; }
    [[nodiscard]] double slope() const noexcept { return slope_; }
    [[nodiscard]] double constant() const noexcept { return constant_; }

    [[nodiscard]] double derivative(double phi, int order) const;
    [[nodiscard]] double rho(double phi) const { return derivative(phi, 0) + derivative(phi, 2); }

    /// Evolute of the curve with this support function, from p_alpha' and p_alpha''.
    [[nodiscard]] PlanePoint evolutePoint(double phi) const;

private:
    TrigPolySupport periodic_;
    double slope_;
    double constant_;
};

/// The primitive with zero integration constant; always constructible.
[[nodiscard]] ObliqueSupport obliquePrimitive(const ConvexBody& b, double alpha);

struct ObliqueBody {
    ObliqueSupport support;
    double constant = 0.0;
    double rhoAlphaMin = 0.0;
};

/**
 * p_alpha with its constant raised until min rho_alpha >= 0.1 rhoMin. Throws
 * Error(NonPeriodic) when rho_alpha is not 2 pi-periodic, i.e. whenever
 * tan(alpha) a0 != 0.
 */
[[nodiscard]] ObliqueBody buildObliqueBody(const ConvexBody& b, double alpha);

struct TraceSample {
    double phi = 0.0;
    PlanePoint position;  ///< O(phi) in fixed horizontal/vertical axes

    [[nodiscard]] double height() const noexcept { return position.y; }
};

/// Position of the center while rolling down the incline, at `samples` angles spanning [0, 2 pi].
[[nodiscard]] std::vector<TraceSample> centerTrace(const ConvexBody& b, const PlanePoint& center, double alpha,
                                                   int samples);

/// Extremes of p'/p (the log-derivative) about a center inside the body.
struct LogDerivativeRange {
    double min = 0.0;
    double argMin = 0.0;
    double max = 0.0;
    double argMax = 0.0;
    /// Strict local maxima of p'/p found on the sampling grid.
    int localMaxima = 0;
    /// Value of the second-highest local maximum (equals max when unique).
    double runnerUpMax = 0.0;
};

/// Requires p_O > 0 everywhere (Error(OutOfRange) otherwise).
[[nodiscard]] LogDerivativeRange logDerivativeRange(const ConvexBody& b, const PlanePoint& center);

}  // namespace convexeq
