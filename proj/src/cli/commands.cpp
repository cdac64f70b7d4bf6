#include "convexeq/cli.hpp"

#include "convexeq/error.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace convexeq::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<double> splitNumbers(const std::string& text, char sep, std::size_t expected, const std::string& flag)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end == item.c_str() || *end != '\0' || !std::isfinite(v))
            throw UsageError("malformed value '" + text + "' for " + flag);
        out.push_back(v);
    }
    if (out.size() != expected)
        throw UsageError(flag + " expects " + std::to_string(expected) + " values, got '" + text + "'");
    return out;
}

PlanePoint parsePoint(const std::string& text, const std::string& flag)
{
    const auto v = splitNumbers(text, ',', 2, flag);
    return {v[0], v[1]};
}

std::string readFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read body file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    file << text;
    if (!file)
        throw Error(ErrorKind::IOError, "cannot write '" + path + "'");
}

double degreesToRadians(double deg)
{
    return deg * kPi / 180.0;
}

int exitCodeFor(ErrorKind kind)
{
    switch (kind) {
        case ErrorKind::NotConvex:
        case ErrorKind::ParseError:
        case ErrorKind::SchemaError:
            return kExitInvalidBody;
        case ErrorKind::OutOfRange:
            return kExitUsage;
        case ErrorKind::IOError:
            return kExitIo;
        default:
            return kExitNumerical;
    }
}

void reportError(std::ostream& err, const std::string& kind, const std::string& message, json extra = json::object())
{
    extra["error"] = kind;
    extra["message"] = message;
    err << extra.dump() << '\n';
}

json equilibriumJson(const Equilibrium& e)
{
    return {{"phi", e.phi},
            {"point", {e.point.x, e.point.y}},
            {"stability", std::string(toString(e.stability))},
            {"multiplicity", e.multiplicity}};
}

/// Re-rounds every number in a JSON tree to 12 significant digits.
json rounded(const json& j)
{
    if (j.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
        const double r = std::strtod(buf, nullptr);
        return r == 0.0 ? 0.0 : r;
    }
    if (j.is_array() || j.is_object()) {
        json out = j;
        for (auto it = out.begin(); it != out.end(); ++it)
            *it = rounded(*it);
        return out;
    }
    return j;
}

struct Options {
    std::string body;
    std::string out;
    std::string center;
    std::string bbox;
    std::string res;
    double alphaDeg = 0.0;
    double delta = -1.0;
    int samples = 720;
    unsigned threads = 0;
};

}  // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Equilibria of planar convex bodies given by trigonometric support functions", "convexeq"};
    app.require_subcommand(1);
    Options o;

    const auto addBody = [&](CLI::App* sub) {
        sub->add_option("body", o.body, "Body-spec JSON file")->required();
    };
    auto* validateCmd = app.add_subcommand("validate", "Certify strong convexity and print the integral geometry");
    addBody(validateCmd);

    auto* analyzeCmd = app.add_subcommand("analyze", "Full report: geometry, cusps, equilibria and counts");
    addBody(analyzeCmd);
    analyzeCmd->add_option("--center", o.center, "Center of mass x,y (default: centroid)");

    auto* eqCmd = app.add_subcommand("equilibria", "Equilibria about a center, horizontal or inclined");
    addBody(eqCmd);
    eqCmd->add_option("--center", o.center, "Center of mass x,y")->required();
    auto* alphaOpt = eqCmd->add_option("--alpha-deg", o.alphaDeg, "Inclination of the supporting line in degrees");

    auto* evoluteCmd = app.add_subcommand("evolute", "Sampled evolute as CSV");
    addBody(evoluteCmd);
    evoluteCmd->add_option("--samples", o.samples, "Uniform samples (cusps are added)");
    evoluteCmd->add_option("--out", o.out, "Output file (default: stdout)");

    auto* mapCmd = app.add_subcommand("region-map", "Equilibrium count over a grid of centers as CSV");
    addBody(mapCmd);
    mapCmd->add_option("--bbox", o.bbox, "x0,y0,x1,y1")->required();
    mapCmd->add_option("--res", o.res, "WxH lattice size")->required();
    mapCmd->add_option("--delta", o.delta, "Near-evolute flag distance (default: 0.01 a0)");
    mapCmd->add_option("--threads", o.threads, "Worker threads (default: all cores)");
    mapCmd->add_option("--out", o.out, "Output file (default: stdout)");

    auto* rollCmd = app.add_subcommand("roll", "Trace of the center while rolling on an incline as CSV");
    addBody(rollCmd);
    rollCmd->add_option("--alpha-deg", o.alphaDeg, "Inclination in degrees")->required();
    rollCmd->add_option("--samples", o.samples, "Samples over one turn")->required();
    rollCmd->add_option("--center", o.center, "Center of mass x,y (default: centroid)");
    rollCmd->add_option("--out", o.out, "Output file (default: stdout)");

    auto* plotCmd = app.add_subcommand("plot", "SVG of boundary, evolute, cusps, center and equilibria");
    addBody(plotCmd);
    plotCmd->add_option("--center", o.center, "Center of mass x,y")->required();
    plotCmd->add_option("--out", o.out, "Output file (default: stdout)");

    std::vector<const char*> argv{"convexeq"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return kExitOk;
        } catch (const CLI::ParseError& e) {
            throw UsageError(e.what());
        }

        const ConvexBody body = validate(parseBodySpec(readFile(o.body)));
        const PlanePoint center = o.center.empty() ? body.centroid() : parsePoint(o.center, "--center");

        if (*validateCmd) {
            const json doc = {{"valid", true},
                              {"rho_min", body.rhoMin()},
                              {"perimeter", body.perimeter()},
                              {"area", body.area()},
                              {"centroid", {body.centroid().x, body.centroid().y}}};
            out << rounded(doc).dump(2) << '\n';
        } else if (*analyzeCmd) {
            out << toJson(analyze(body, center));
        } else if (*eqCmd) {
            json doc;
            doc["center"] = {center.x, center.y};
            if (alphaOpt->count() > 0) {
                const double alpha = degreesToRadians(o.alphaDeg);
                const auto eqs = findObliqueEquilibria(body, center, alpha);
                const ObliqueCount count = obliqueCountViaFormula(body, center, alpha);
                const ConvexBody local = recenter(body, center);
                json list = json::array();
                for (const auto& e : eqs) {
                    const PlanePoint z = center + boundaryPoint(local, e.phi);
                    list.push_back(
                        {{"phi", e.phi}, {"point", {z.x, z.y}}, {"stability", std::string(toString(e.stability))}});
                }
                doc["alpha"] = alpha;
                doc["equilibria"] = list;
                doc["counts"] = {{"n_direct", static_cast<int>(eqs.size())},
                                 {"n_formula", count.nAlpha},
                                 {"m", count.mAlpha.value()}};
            } else {
                const auto eqs = findHorizontalEquilibria(body, center);
                const CountConsistency count = countConsistency(body, center);
                json list = json::array();
                for (const auto& e : eqs)
                    list.push_back(equilibriumJson(e));
                doc["equilibria"] = list;
                doc["counts"] = {{"n_direct", count.nDirect}, {"n_formula", count.nFormula}, {"m", count.m.value()}};
            }
            out << rounded(doc).dump(2) << '\n';
        } else if (*evoluteCmd) {
            std::vector<Cusp> cusps;
            try {
                cusps = findCusps(body);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::DegenerateCircle)
                    throw;
            }
            emit(evoluteCsv(sampleEvolute(body, o.samples), cusps), o.out, out);
        } else if (*mapCmd) {
            const auto box = splitNumbers(o.bbox, ',', 4, "--bbox");
            const auto lattice = splitNumbers(o.res, 'x', 2, "--res");
            if (lattice[0] != std::floor(lattice[0]) || lattice[1] != std::floor(lattice[1]))
                throw UsageError("--res expects integer sizes");
            const double delta = o.delta >= 0.0 ? o.delta : 1e-2 * body.scale();
            const RegionMap map = regionMap(body, {box[0], box[1]}, {box[2], box[3]}, static_cast<int>(lattice[0]),
                                            static_cast<int>(lattice[1]), delta, o.threads);
            emit(regionMapCsv(map), o.out, out);
        } else if (*rollCmd) {
            emit(traceCsv(centerTrace(body, center, degreesToRadians(o.alphaDeg), o.samples)), o.out, out);
        } else if (*plotCmd) {
            emit(renderScene(body, center), o.out, out);
        }
        return kExitOk;
    } catch (const UsageError& e) {
        reportError(err, "Usage", e.what());
        return kExitUsage;
    } catch (const NotConvexError& e) {
        reportError(err, "NotConvex", e.what(), {{"angle", e.angle()}, {"rho_min", e.rho()}});
        return kExitInvalidBody;
    } catch (const MismatchError& e) {
        reportError(err, "Mismatch", e.what(), {{"n_direct", e.nDirect()}, {"n_formula", e.nFormula()}});
        return kExitNumerical;
    } catch (const Error& e) {
        reportError(err, std::string(toString(e.kind())), e.what());
        return exitCodeFor(e.kind());
    } catch (const InvariantViolation& e) {
        reportError(err, "InvariantViolation", e.what());
        return kExitNumerical;
    }
}

}  // namespace convexeq::cli
