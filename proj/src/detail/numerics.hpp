#pragma once

// Internal numerical kernels shared by the geometry modules.

#include "convexeq/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace convexeq::detail {

/// Sign convention for root scanning: exact zero counts as positive.
[[nodiscard]] inline bool positive(double v) noexcept { return v >= 0.0; }

/// Root of f in [a, b] given a sign change, bisected to width tol.
template <class F>
[[nodiscard]] double bisect(F&& f, double a, double b, double tol)
{
    const bool sa = positive(f(a));
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        const double m = 0.5 * (a + b);
        if (positive(f(m)) == sa)
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

/// Minimizer of a unimodal f on [a, b].
template <class F>
[[nodiscard]] double goldenSectionMin(F&& f, double a, double b, double tol)
{
    constexpr double invPhi = 0.6180339887498949;
    double c = b - invPhi * (b - a);
    double d = a + invPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invPhi * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? c : d;
}

template <class T>
struct TrapezoidResult {
    T value{};
    long samples = 0;
    bool converged = false;
};

/**
 * Integral over [0, 2 pi) of a periodic integrand by the trapezoid rule,
 * doubling the sample count from `start` until successive values differ by
 * less than tolerance(value) or `cap` samples are reached. Odd points are the
 * only new evaluations per doubling.
 */
template <class T, class F, class Gap, class Tol>
[[nodiscard]] TrapezoidResult<T> periodicTrapezoid(F&& f, long start, long cap, Gap&& gap, Tol&& tolerance)
{
    TrapezoidResult<T> out;
    long n = start;
    T sum{};
    for (long i = 0; i < n; ++i)
        sum = sum + f(kTwoPi * static_cast<double>(i) / static_cast<double>(n));
    T value = (kTwoPi / static_cast<double>(n)) * sum;
    while (n < cap) {
        T odd{};
        for (long i = 0; i < n; ++i)
            odd = odd + f(kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(n));
        sum = sum + odd;
        n *= 2;
        const T next = (kTwoPi / static_cast<double>(n)) * sum;
        const bool settled = gap(next, value) < tolerance(next);
        value = next;
        if (settled) {
            out.converged = true;
            break;
        }
    }
    out.value = value;
    out.samples = n;
    return out;
}

/// A root of a periodic function located by scanRoots.
struct ScannedRoot {
    double phi = 0.0;
    /// Net sign changes merged into this root (0 for a touching root).
    int crossings = 0;
    /// f changes sign from negative to positive across the root.
    bool rising = false;

    [[nodiscard]] bool touching() const noexcept { return crossings % 2 == 0; }
};

/**
 * All distinct roots of a 2 pi-periodic f on [0, 2 pi).
 *
 * Sign changes on a uniform grid are bisected to xTol. Grid cells without a
 * sign change are searched for an interior extremum (sign change of df): an
 * extremum with |f| <= touchTol is a touching root; one of opposite sign
 * holds two hidden simple roots. Neighbouring roots between which |f| never
 * exceeds touchTol are merged, so noise around a multiple root yields a single
 * entry.
 */
template <class F, class DF>
[[nodiscard]] std::vector<ScannedRoot> scanRoots(F&& f, DF&& df, int grid, double touchTol, double xTol)
{
    const double h = kTwoPi / grid;
    std::vector<double> fx(static_cast<std::size_t>(grid) + 1);
    std::vector<double> dfx(static_cast<std::size_t>(grid) + 1);
    for (int i = 0; i < grid; ++i) {
        fx[i] = f(i * h);
        dfx[i] = df(i * h);
    }
    fx[grid] = fx[0];
    dfx[grid] = dfx[0];

    std::vector<ScannedRoot> raw;
    for (int i = 0; i < grid; ++i) {
        const double a = i * h;
        const double b = (i + 1 == grid) ? kTwoPi : (i + 1) * h;
        const bool sa = positive(fx[i]);
        const bool sb = positive(fx[i + 1]);
        if (sa != sb) {
            raw.push_back({bisect(f, a, b, xTol), 1, !sa});
            continue;
        }
        if (positive(dfx[i]) == positive(dfx[i + 1]))
            continue;
        const double xm = bisect(df, a, b, xTol);
        const double fm = f(xm);
        if (std::abs(fm) <= touchTol) {
            raw.push_back({xm, 0, false});
        } else if (positive(fm) != sa) {
            raw.push_back({bisect(f, a, xm, xTol), 1, !sa});
            raw.push_back({bisect(f, xm, b, xTol), 1, sa});
        }
    }
    // Bisection in the last cell can land a hair below 2 pi; report it at 0.
    const auto canonical = [&](double phi) {
        phi = wrapAngle(phi);
        return (kTwoPi - phi <= xTol) ? 0.0 : phi;
    };
    for (auto& r : raw)
        r.phi = canonical(r.phi);
    std::sort(raw.begin(), raw.end(), [](const ScannedRoot& l, const ScannedRoot& r) { return l.phi < r.phi; });
    if (raw.size() < 2)
        return raw;

    const auto flat = [&](double lo, double hi) {
        if (hi - lo > 0.1)
            return false;
        for (double t : {0.25, 0.5, 0.75})
            if (std::abs(f(lo + t * (hi - lo))) > touchTol)
                return false;
        return true;
    };

    // Group consecutive roots; the wrap-around pair is handled by rotating the
    // start to a gap that does not merge.
    const std::size_t n = raw.size();
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = raw[(i + n - 1) % n].phi;
        const double hi = raw[i].phi + (i == 0 ? kTwoPi : 0.0);
        if (!flat(lo, hi)) {
            start = i;
            break;
        }
        if (i + 1 == n)
            return {ScannedRoot{raw[0].phi, 0, false}};  // everything flat; degenerate
    }

    std::vector<ScannedRoot> merged;
    std::size_t i = 0;
    while (i < n) {
        const std::size_t first = (start + i) % n;
        double base = raw[first].phi;
        double sumPhi = base;
        int crossings = raw[first].crossings;
        int count = 1;
        bool rising = raw[first].rising;
        double prev = base;
        std::size_t j = i + 1;
        while (j < n) {
            const std::size_t idx = (start + j) % n;
            double phi = raw[idx].phi;
            if (phi < prev)
                phi += kTwoPi;
            if (!flat(prev, phi))
                break;
            sumPhi += phi;
            crossings += raw[idx].crossings;
            ++count;
            prev = phi;
            ++j;
        }
        ScannedRoot root{canonical(sumPhi / count), crossings, rising};
        if (crossings % 2 == 0)
            root.crossings = 0;
        merged.push_back(root);
        i = j;
    }
    std::sort(merged.begin(), merged.end(), [](const ScannedRoot& l, const ScannedRoot& r) { return l.phi < r.phi; });
    return merged;
}

/// Gauss-Legendre rule with N nodes on [-1, 1].
template <int N>
struct GaussLegendre {
    std::array<double, N> nodes{};
    std::array<double, N> weights{};

    GaussLegendre()
    {
        for (int i = 0; i < N; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (N + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0;
                double p1 = x;
                for (int k = 2; k <= N; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16)
                    break;
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }

    /// Composite rule over `pieces` equal subintervals of [a, b].
    template <class F>
    [[nodiscard]] double integrate(F&& f, double a, double b, int pieces) const
    {
        const double w = (b - a) / pieces;
        double total = 0.0;
        for (int s = 0; s < pieces; ++s) {
            const double mid = a + (s + 0.5) * w;
            for (int i = 0; i < N; ++i)
                total += weights[i] * f(mid + 0.5 * w * nodes[i]);
        }
        return 0.5 * w * total;
    }
};

}  // namespace convexeq::detail
