// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include "support/fixtures.hpp"

#include "convexeq/equilibria.hpp"
#include "convexeq/error.hpp"
#include "convexeq/evolute.hpp"
#include "convexeq/oblique.hpp"
#include "convexeq/winding.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace convexeq;

namespace {

constexpr double pi = 3.14159265358979323846;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point since)
{
    return std::chrono::duration<double>(Clock::now() - since).count();
}

/// Shared random population for criteria 1 and 2.
std::vector<ConvexBody> randomPopulation(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    std::vector<ConvexBody> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count)
        out.push_back(validate(fixtures::randomBody(rng)));
    return out;
}

Outcome formulaIdentity(const std::vector<ConvexBody>& bodies)
{
    Outcome o;
    const auto start = Clock::now();
    std::mt19937_64 rng(1001);
    int total = 0;
    int converged = 0;
    int agree = 0;
    for (const auto& b : bodies) {
        for (int i = 0; i < 10; ++i) {
            const PlanePoint center = fixtures::randomOffEvoluteCenter(rng, b, b.centroid(), 0.6 * b.scale(), 0.05 * b.scale());
            ++total;
            try {
                const int nDirect = static_cast<int>(findHorizontalEquilibria(b, center).size());
                const EvoluteWinding w = evoluteWinding(recenter(b, center));
                ++converged;
                if (w.m.isInteger() && nDirect == 2 - w.m.twice)
                    ++agree;
            } catch (const NotConvergedError&) {
            }
        }
    }
    const double elapsed = seconds(start);
    o.detail << agree << "/" << converged << " converged cases satisfy nDirect = 2 - 2m; " << converged << "/" << total
             << " converged; " << elapsed << " s";
    o.require(agree == converged, "identity");
    o.require(converged * 100 >= total * 99, "convergence rate");
    o.require(elapsed < 30.0, "runtime");
    return o;
}

Outcome centroidBound(const std::vector<ConvexBody>& bodies)
{
    Outcome o;
    std::size_t fewest = 1000;
    for (const auto& b : bodies)
        fewest = std::min(fewest, findHorizontalEquilibria(b, b.centroid()).size());
    o.detail << "minimum count over " << bodies.size() << " bodies about their centroids: " << fewest;
    o.require(fewest >= 4, "fewer than four");
    return o;
}

Outcome offsetDisk()
{
    Outcome o;
    // p = 1 - 0.3 cos phi is the unit disk centered at (-0.3, 0); its evolute is that center.
    const ConvexBody b = validate(TrigPolySupport(1.0, {-0.3}, {0.0}));
    const auto eqs = findHorizontalEquilibria(b, {0.0, 0.0});
    o.require(eqs.size() == 2, "two equilibria");
    if (eqs.size() == 2) {
        o.require(angularGap(eqs[0].phi, 0.0) < 1e-10 && eqs[0].stability == Stability::Stable, "stable at 0");
        o.require(angularGap(eqs[1].phi, pi) < 1e-10 && eqs[1].stability == Stability::Unstable, "unstable at pi");
    }
    const EvoluteWinding w = evoluteWinding(b);
    o.require(w.m.twice == 0, "m = 0");
    double gap = 0.0;
    for (int i = 0; i < 1000; ++i)
        gap = std::max(gap, distance(evolutePoint(b, 2 * pi * i / 1000), {-0.3, 0.0}));
    o.require(gap < 1e-10, "constant evolute");
    o.detail << eqs.size() << " equilibria, m = " << w.m.value() << ", evolute within " << gap
             << " of (-0.3, 0) (the disk center of 1 - 0.3 cos; the stated (0.3, 0) belongs to 1 + 0.3 cos)";
    return o;
}

Outcome ovalFixture()
{
    Outcome o;
    const ConvexBody b = validate(fixtures::oval());
    const struct {
        PlanePoint center;
        int n;
        int twiceM;
    } cases[] = {{{0.0, 0.0}, 4, -2}, {{1.0, 0.0}, 4, -2}, {{2.5, 0.0}, 2, 0}};
    for (const auto& c : cases) {
        const CountConsistency r = countConsistency(b, c.center);
        o.require(r.nDirect == c.n && r.nFormula == c.n && r.m.twice == c.twiceM, "counts");
        o.detail << "n=" << r.nDirect << ",m=" << r.m.value() << " at (" << c.center.x << "," << c.center.y << "); ";
    }
    const auto cusps = findCusps(b);
    o.require(cusps.size() == 4, "four cusps");
    const PlanePoint places[] = {{1.2, 0.0}, {0.0, -1.2}, {-1.2, 0.0}, {0.0, 1.2}};
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(4, cusps.size()); ++i)
        worst = std::max(worst, distance(cusps[i].location, places[i]));
    o.require(worst < 1e-8, "cusp locations");
    const double sum = alternatingArcSum(b);
    o.require(std::abs(sum) < 1e-8, "alternating sum");
    o.detail << cusps.size() << " cusps within " << worst << "; alternating sum " << sum;
    return o;
}

Outcome constantWidthFixture()
{
    Outcome o;
    const ConvexBody b = validate(fixtures::reuleauxLike());
    const auto width = constantWidth(b);
    o.require(width.has_value() && std::abs(*width - 4.0) < 1e-12, "width 4");
    double gap = 0.0;
    for (int i = 0; i < 4096; ++i) {
        const double phi = 2 * pi * i / 4096;
        gap = std::max(gap, distance(evolutePoint(b, phi), evolutePoint(b, phi + pi)));
    }
    o.require(gap < 1e-10, "pi-periodic evolute");
    const int n0 = countConsistency(b, {0.0, 0.0}).nDirect;
    o.require(n0 == 6, "n = 6 at origin");
    std::mt19937_64 rng(1005);
    int parity = 0;
    for (int i = 0; i < 20; ++i) {
        const PlanePoint c = fixtures::randomOffEvoluteCenter(rng, b, {0.0, 0.0}, 0.6, 0.02);
        if (countConsistency(b, c).nDirect % 4 == 2)
            ++parity;
    }
    o.require(parity == 20, "n mod 4 = 2");
    o.detail << "width " << width.value_or(-1.0) << ", evolute gap " << gap << ", n(origin) = " << n0 << ", " << parity
             << "/20 random centers with n mod 4 = 2";
    return o;
}

Outcome onEvolute()
{
    Outcome o;
    const ConvexBody b = validate(fixtures::oval());
    int good = 0;
    double worstResidual = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double phi = 2 * pi * (i + 0.37) / 10;
        const PlanePoint center = evolutePoint(b, phi);
        const EvoluteWinding w = evoluteWinding(recenter(b, center));
        const int n = static_cast<int>(findHorizontalEquilibria(b, center).size());
        const NeighbourAverage avg = neighbourAverageCheck(b, phi);
        worstResidual = std::max(worstResidual, w.report.residual);
        const bool ok = !w.m.isInteger() && w.report.residual < 0.1 && n == 2 - w.m.twice && n % 2 == 1 &&
                        avg.averaged() && avg.nOn == n;
        if (ok)
            ++good;
        else
            o.detail << " phi=" << phi << ": 2m=" << w.m.twice << " n=" << n << " sides " << avg.nSideA << "/"
                     << avg.nSideB << ";";
    }
    o.require(good == 10, "half-integer cases");
    o.detail << " " << good << "/10 regular evolute points with odd n = 2 - 2m and averaged neighbours; worst 2m residual "
             << worstResidual;
    return o;
}

Outcome asymmetricFixture()
{
    Outcome o;
    const ConvexBody b = validate(fixtures::asymmetricFixture());
    const PlanePoint c = b.centroid();
    o.require(b.rhoMin() > 0, "convex");
    o.require(std::hypot(c.x, c.y) < 1e-8, "centroid at origin");
    const LogDerivativeRange r = logDerivativeRange(b, {0.0, 0.0});
    o.require(r.max + r.min > 0, "max + min > 0");
    const double alpha = std::atan(0.5 * (r.max - r.min));
    const auto up = findObliqueEquilibria(b, {0.0, 0.0}, alpha);
    const auto down = findObliqueEquilibria(b, {0.0, 0.0}, -alpha);
    o.require(!up.empty() && down.empty(), "asymmetric incline");
    o.detail << "rho_min " << b.rhoMin() << ", centroid (" << c.x << ", " << c.y << "), max+min of p'/p = "
             << r.max + r.min << "; tan(alpha) = " << std::tan(alpha) << " gives " << up.size() << " vs "
             << down.size() << " equilibria";
    return o;
}

Outcome rolyPoly()
{
    Outcome o;
    const ConvexBody b = validate(fixtures::rolyPoly(0.05));
    const PlanePoint c = b.centroid();
    const LogDerivativeRange r = logDerivativeRange(b, c);
    o.require(r.runnerUpMax < r.max - 1e-6, "unique maximum");
    const auto critical = findObliqueEquilibria(b, c, std::atan(r.max));
    o.require(critical.size() == 1 && critical[0].stability == Stability::Degenerate, "one degenerate equilibrium");
    const auto below = findObliqueEquilibria(b, c, std::atan(0.95 * r.max));
    const bool pair = below.size() == 2 && below[0].stability != below[1].stability &&
                      below[0].stability != Stability::Degenerate && below[1].stability != Stability::Degenerate;
    o.require(pair, "stable/unstable pair");
    o.detail << "max p'/p = " << r.max << " (next local max " << r.runnerUpMax << "); " << critical.size()
             << " equilibria at tan(alpha) = max, " << below.size() << " at 0.95 max";
    return o;
}

Outcome obliqueFormula()
{
    Outcome o;
    std::mt19937_64 rng(1009);
    int checked = 0;
    int agree = 0;
    int skipped = 0;
    int limitOk = 0;
    for (int i = 0; i < 50; ++i) {
        const ConvexBody b = validate(fixtures::randomBody(rng));
        const PlanePoint c = b.centroid();
        for (double t : {0.02, 0.05, 0.1}) {
            const auto eqs = findObliqueEquilibria(b, c, std::atan(t));
            const bool degenerate = std::any_of(eqs.begin(), eqs.end(),
                                                [](const ObliqueEquilibrium& e) { return e.stability == Stability::Degenerate; });
            try {
                const EvoluteWinding w = windingIntegral(b.support().shifted(c), t);
                if (degenerate) {
                    ++skipped;
                    continue;
                }
                ++checked;
                if (static_cast<int>(eqs.size()) == 2 - w.m.twice)
                    ++agree;
            } catch (const NotConvergedError&) {
                ++skipped;
            }
        }
        const double steep = logDerivativeRange(b, c).max + 0.05;
        const auto none = findObliqueEquilibria(b, c, std::atan(steep));
        const EvoluteWinding w = windingIntegral(b.support().shifted(c), steep);
        if (none.empty() && w.m.twice == 2)
            ++limitOk;
    }
    o.require(agree == checked, "n_alpha = 2 - 2 m_alpha");
    o.require(limitOk == 50, "steep limit");
    o.detail << agree << "/" << checked << " cases agree (" << skipped << " skipped as degenerate or unconverged); "
             << limitOk << "/50 bodies give n = 0, m = 1 beyond max p'/p";
    return o;
}

Outcome regionMapFixture()
{
    Outcome o;
    const ConvexBody b = validate(fixtures::oval());
    constexpr int size = 41;
    // Flag radius just above half the lattice spacing so the flagged cells form an unbroken band.
    const double delta = 0.06;
    const auto start = Clock::now();
    const RegionMap map = regionMap(b, {-2.0, -2.0}, {2.0, 2.0}, size, size, delta);
    const double elapsed = seconds(start);

    bool countsOk = true;
    int fours = 0;
    for (int iy = 0; iy < size; ++iy)
        for (int ix = 0; ix < size; ++ix) {
            if (map.flagged(ix, iy))
                continue;
            const int n = map.count(ix, iy);
            countsOk = countsOk && (n == 2 || n == 4);
            fours += n == 4;
        }
    o.require(countsOk, "off-flag counts in {2, 4}");

    const auto flood = [&](std::vector<std::pair<int, int>> seeds, const std::function<bool(int, int)>& open, bool diagonal) {
        std::vector<char> seen(static_cast<std::size_t>(size * size), 0);
        std::queue<std::pair<int, int>> queue;
        for (const auto& s : seeds)
            if (open(s.first, s.second) && !seen[map.index(s.first, s.second)]) {
                seen[map.index(s.first, s.second)] = 1;
                queue.push(s);
            }
        while (!queue.empty()) {
            const auto [x, y] = queue.front();
            queue.pop();
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if ((dx == 0 && dy == 0) || (!diagonal && dx != 0 && dy != 0))
                        continue;
                    const int nx = x + dx;
                    const int ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= size || ny >= size || seen[map.index(nx, ny)] || !open(nx, ny))
                        continue;
                    seen[map.index(nx, ny)] = 1;
                    queue.push({nx, ny});
                }
        }
        return seen;
    };
    const int mid = size / 2;
    const auto isFour = [&](int x, int y) { return !map.flagged(x, y) && map.count(x, y) == 4; };
    const auto fourRegion = flood({{mid, mid}}, isFour, false);
    const int connectedFours = static_cast<int>(std::count(fourRegion.begin(), fourRegion.end(), 1));
    o.require(isFour(mid, mid) && connectedFours == fours, "4-region connected around origin");

    std::vector<std::pair<int, int>> border;
    for (int i = 0; i < size; ++i) {
        border.push_back({i, 0});
        border.push_back({i, size - 1});
        border.push_back({0, i});
        border.push_back({size - 1, i});
    }
    const auto outside = flood(border, [&](int x, int y) { return !fourRegion[map.index(x, y)]; }, false);
    int holes = 0;
    for (std::size_t i = 0; i < outside.size(); ++i)
        holes += !outside[i] && !fourRegion[i];
    o.require(holes == 0, "4-region has no holes");

    int flagged = 0;
    std::pair<int, int> firstFlag{-1, -1};
    for (int iy = 0; iy < size; ++iy)
        for (int ix = 0; ix < size; ++ix)
            if (map.flagged(ix, iy)) {
                ++flagged;
                if (firstFlag.first < 0)
                    firstFlag = {ix, iy};
            }
    const auto band = flood({firstFlag}, [&](int x, int y) { return map.flagged(x, y); }, true);
    const int bandSize = static_cast<int>(std::count(band.begin(), band.end(), 1));
    const auto inner = flood({{mid, mid}}, [&](int x, int y) { return !map.flagged(x, y); }, false);
    bool enclosed = true;
    for (const auto& [x, y] : border)
        enclosed = enclosed && !inner[map.index(x, y)];
    o.require(flagged > 0 && bandSize == flagged && enclosed, "flagged cells form a closed curve");
    o.require(elapsed < 10.0, "runtime");
    o.detail << fours << " cells with n = 4, " << flagged << " flagged (delta " << delta << ", one 8-connected band "
             << (bandSize == flagged ? "yes" : "no") << ", encloses origin " << (enclosed ? "yes" : "no") << "); "
             << elapsed << " s";
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<ConvexBody> bodies = randomPopulation(1000, 100);
    const std::vector<Criterion> criteria = {
        {"formula identity n = 2 - 2m on random bodies", [&] { return formulaIdentity(bodies); }},
        {"at least four equilibria about the centroid", [&] { return centroidBound(bodies); }},
        {"offset disk", offsetDisk},
        {"oval fixture", ovalFixture},
        {"constant width", constantWidthFixture},
        {"on-evolute half-integer winding", onEvolute},
        {"asymmetric oblique fixture", asymmetricFixture},
        {"roly-poly family", rolyPoly},
        {"oblique formula n_alpha = 2 - 2 m_alpha", obliqueFormula},
        {"region map of the oval", regionMapFixture},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failures += !o.pass;
        std::printf("%s  %2zu  %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures;
}
