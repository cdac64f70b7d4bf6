#include "convexeq/cli.hpp"

#include "convexeq/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace convexeq::cli {

using nlohmann::json;

namespace {

std::size_t lineOf(std::string_view bytes, std::size_t offset)
{
    offset = std::min(offset, bytes.size());
    return 1 + static_cast<std::size_t>(std::count(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

double finiteNumber(const json& value, const std::string& field)
{
    if (!value.is_number())
        throw Error(ErrorKind::SchemaError, "field '" + field + "' must be a number");
    const double v = value.get<double>();
    if (!std::isfinite(v))
        throw Error(ErrorKind::SchemaError, "field '" + field + "' must be finite");
    return v;
}

std::vector<double> coefficientArray(const json& doc, const std::string& field)
{
    if (!doc.contains(field))
        throw Error(ErrorKind::SchemaError, "missing field '" + field + "'");
    const json& arr = doc.at(field);
    if (!arr.is_array())
        throw Error(ErrorKind::SchemaError, "field '" + field + "' must be an array");
    std::vector<double> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(finiteNumber(arr[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

/// Rounds to 12 significant digits so the shortest round-trip form is stable.
double sig12(double v)
{
    if (!std::isfinite(v))
        return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

json pointJson(const PlanePoint& p)
{
    return json::array({sig12(p.x), sig12(p.y)});
}

std::string fixed(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

}  // namespace

TrigPolySupport parseBodySpec(std::string_view bytes)
{
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(lineOf(bytes, e.byte)) + ": " + std::string(e.what()));
    }
    if (!doc.is_object())
        throw Error(ErrorKind::SchemaError, "body spec must be a JSON object");
    if (!doc.contains("a0"))
        throw Error(ErrorKind::SchemaError, "missing field 'a0'");
    const double a0 = finiteNumber(doc.at("a0"), "a0");
    std::vector<double> c = coefficientArray(doc, "cos");
    std::vector<double> s = coefficientArray(doc, "sin");
    if (c.size() != s.size())
        throw Error(ErrorKind::SchemaError, "arrays 'cos' (" + std::to_string(c.size()) + ") and 'sin' (" +
                                                std::to_string(s.size()) + ") must have equal length");
    return {a0, std::move(c), std::move(s)};
}

std::string serializeBodySpec(const TrigPolySupport& s)
{
    json doc;
    doc["a0"] = s.a0();
    doc["cos"] = std::vector<double>(s.cosCoeffs().begin(), s.cosCoeffs().end());
    doc["sin"] = std::vector<double>(s.sinCoeffs().begin(), s.sinCoeffs().end());
    return doc.dump() + "\n";
}

AnalysisReport analyze(const ConvexBody& b, const PlanePoint& center)
{
    AnalysisReport r;
    r.center = center;
    r.perimeter = b.perimeter();
    r.area = b.area();
    r.centroid = b.centroid();
    r.constantWidth = constantWidth(b);
    try {
        r.cusps = findCusps(b);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateCircle)
            throw;
    }
    r.equilibria = findHorizontalEquilibria(b, center);
    r.counts = countConsistency(b, center);
    return r;
}

std::string toJson(const AnalysisReport& report)
{
    json doc;
    doc["center"] = pointJson(report.center);
    doc["perimeter"] = sig12(report.perimeter);
    doc["area"] = sig12(report.area);
    doc["centroid"] = pointJson(report.centroid);
    doc["constant_width"] = report.constantWidth ? json(sig12(*report.constantWidth)) : json(nullptr);
    json cusps = json::array();
    for (const auto& c : report.cusps)
        cusps.push_back({{"phi", sig12(c.phi)},
                         {"kind", std::string(toString(c.kind))},
                         {"location", pointJson(c.location)},
                         {"rho", sig12(c.rho)}});
    doc["cusps"] = cusps;
    json eq = json::array();
    for (const auto& e : report.equilibria)
        eq.push_back({{"phi", sig12(e.phi)},
                      {"point", pointJson(e.point)},
                      {"stability", std::string(toString(e.stability))},
                      {"multiplicity", e.multiplicity}});
    doc["equilibria"] = eq;
    doc["counts"] = {{"n_direct", report.counts.nDirect},
                     {"n_formula", report.counts.nFormula},
                     {"m", report.counts.m.value()}};
    return doc.dump(2) + "\n";
}

std::string evoluteCsv(const EvolutePolyline& poly, const std::vector<Cusp>& cusps)
{
    std::ostringstream os;
    os << "phi,x,y,is_cusp,kind\n";
    std::size_t nextCusp = 0;
    for (std::size_t i = 0; i < poly.points.size(); ++i) {
        const bool isCusp = nextCusp < poly.cuspIndices.size() && poly.cuspIndices[nextCusp] == i;
        std::string kind = "none";
        if (isCusp) {
            ++nextCusp;
            const double phi = poly.angles[i];
            const auto it = std::min_element(cusps.begin(), cusps.end(), [&](const Cusp& a, const Cusp& b) {
                return std::abs(a.phi - phi) < std::abs(b.phi - phi);
            });
            if (it != cusps.end())
                kind = std::string(toString(it->kind));
        }
        os << fixed(poly.angles[i]) << ',' << fixed(poly.points[i].x) << ',' << fixed(poly.points[i].y) << ','
           << (isCusp ? 1 : 0) << ',' << kind << '\n';
    }
    return os.str();
}

std::string regionMapCsv(const RegionMap& map)
{
    std::ostringstream os;
    os << "x,y,n,near_evolute\n";
    for (int iy = 0; iy < map.countY; ++iy) {
        for (int ix = 0; ix < map.countX; ++ix) {
            const PlanePoint o = map.center(ix, iy);
            os << fixed(o.x) << ',' << fixed(o.y) << ',' << map.count(ix, iy) << ',' << (map.flagged(ix, iy) ? 1 : 0)
               << '\n';
        }
    }
    return os.str();
}

std::string traceCsv(const std::vector<TraceSample>& trace)
{
    std::ostringstream os;
    os << "phi,x,y,height\n";
    for (const auto& t : trace)
        os << fixed(t.phi) << ',' << fixed(t.position.x) << ',' << fixed(t.position.y) << ',' << fixed(t.height())
           << '\n';
    return os.str();
}

}  // namespace convexeq::cli
