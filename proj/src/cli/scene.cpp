#include "convexeq/cli.hpp"

#include "convexeq/error.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace convexeq::cli {

namespace {

struct Frame {
    double minX = std::numeric_limits<double>::infinity();
    double minY = std::numeric_limits<double>::infinity();
    double maxX = -std::numeric_limits<double>::infinity();
    double maxY = -std::numeric_limits<double>::infinity();
    double margin = 0.0;
    double ppu = 100.0;

    void include(const PlanePoint& p)
    {
        minX = std::min(minX, p.x);
        minY = std::min(minY, p.y);
        maxX = std::max(maxX, p.x);
        maxY = std::max(maxY, p.y);
    }

    [[nodiscard]] double width() const { return (maxX - minX + 2 * margin) * ppu; }
    [[nodiscard]] double height() const { return (maxY - minY + 2 * margin) * ppu; }

    // SVG's y axis points down.
    [[nodiscard]] std::string map(const PlanePoint& p) const
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f,%.3f", (p.x - minX + margin) * ppu, (maxY - p.y + margin) * ppu);
        return buf;
    }
};

std::string marker(const Frame& f, const PlanePoint& p, double radius, const std::string& cls)
{
    const std::string xy = f.map(p);
    const auto comma = xy.find(',');
    std::ostringstream os;
    os << "  <circle class=\"" << cls << "\" cx=\"" << xy.substr(0, comma) << "\" cy=\"" << xy.substr(comma + 1)
       << "\" r=\"" << radius << "\"/>\n";
    return os.str();
}

}  // namespace

std::string renderScene(const ConvexBody& b, const PlanePoint& center, const SceneOptions& options)
{
    std::vector<PlanePoint> boundary;
    for (int i = 0; i < options.boundarySamples; ++i)
        boundary.push_back(boundaryPoint(b, kTwoPi * i / options.boundarySamples));

    std::vector<Cusp> cusps;
    std::vector<PlanePoint> evolute;
    try {
        cusps = findCusps(b);
        for (const auto& p : sampleEvolute(b, options.evoluteSamples).points)
            evolute.push_back(p);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateCircle)
            throw;
    }

    std::vector<Equilibrium> equilibria;
    try {
        equilibria = findHorizontalEquilibria(b, center);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateCircle)
            throw;
    }

    Frame frame;
    frame.ppu = options.pixelsPerUnit;
    for (const auto& p : boundary)
        frame.include(p);
    for (const auto& p : evolute)
        frame.include(p);
    frame.include(center);
    frame.margin = 0.05 * std::max(frame.maxX - frame.minX, frame.maxY - frame.minY);

    std::ostringstream os;
    char dims[96];
    std::snprintf(dims, sizeof dims, "width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.3f %.3f\"", frame.width(),
                  frame.height(), frame.width(), frame.height());
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" " << dims << ">\n";
    os << "  <style>.boundary{fill:none;stroke:#cc6600;stroke-width:2}"
          ".evolute{fill:none;stroke:#d62728;stroke-width:1}"
          ".cusp{fill:#1f77b4}.center{fill:#000}"
          ".equilibrium{stroke:#000;stroke-width:1}.stable{fill:#2ca02c}.unstable{fill:#ffffff}"
          ".degenerate{fill:#7f7f7f}</style>\n";

    os << "  <path class=\"boundary\" d=\"M";
    for (std::size_t i = 0; i < boundary.size(); ++i)
        os << (i == 0 ? " " : " L ") << frame.map(boundary[i]);
    os << " Z\"/>\n";

    if (!evolute.empty()) {
        os << "  <polyline class=\"evolute\" points=\"";
        for (std::size_t i = 0; i <= evolute.size(); ++i)
            os << (i == 0 ? "" : " ") << frame.map(evolute[i % evolute.size()]);
        os << "\"/>\n";
    }
    for (const auto& c : cusps)
        os << marker(frame, c.location, 3, std::string("cusp cusp-") + std::string(toString(c.kind)));
    for (const auto& e : equilibria)
        os << marker(frame, e.point, 4, std::string("equilibrium ") + std::string(toString(e.stability)));
    os << marker(frame, center, 4, "center");
    os << "</svg>\n";
    return os.str();
}

}  // namespace convexeq::cli
