#pragma once

#include "convexeq/body.hpp"
#include "convexeq/equilibria.hpp"
#include "convexeq/evolute.hpp"
#include "convexeq/oblique.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace convexeq::cli {

/// Exit codes of the command-line driver.
enum ExitCode : int {
    kExitOk = 0,
    kExitIo = 1,
    kExitInvalidBody = 2,
    kExitNumerical = 3,
    kExitUsage = 4,
};

/**
 * Parses {"a0": <real>, "cos": [...], "sin": [...]}; entry i of each array is
 * the coefficient of harmonic i + 1. Throws Error(ParseError) for malformed
 * JSON and Error(SchemaError) for missing fields, non-finite values or arrays
 * of different length.
 */
[[nodiscard]] TrigPolySupport parseBodySpec(std::string_view bytes);

/// Inverse of parseBodySpec; preserves every double exactly.
[[nodiscard]] std::string serializeBodySpec(const TrigPolySupport& s);

struct AnalysisReport {
    PlanePoint center;
    double perimeter = 0.0;
    double area = 0.0;
    PlanePoint centroid;
    std::optional<double> constantWidth;
    std::vector<Cusp> cusps;
    std::vector<Equilibrium> equilibria;
    CountConsistency counts;
};

/// Full analysis about `center`; propagates the library's errors.
[[nodiscard]] AnalysisReport analyze(const ConvexBody& b, const PlanePoint& center);

/// Sorted keys, values rounded to 12 significant digits, one trailing newline.
[[nodiscard]] std::string toJson(const AnalysisReport& report);

/// Rows `phi,x,y,is_cusp,kind` preceded by that header.
[[nodiscard]] std::string evoluteCsv(const EvolutePolyline& poly, const std::vector<Cusp>& cusps);

/// Rows `x,y,n,near_evolute`, row-major with y outer.
[[nodiscard]] std::string regionMapCsv(const RegionMap& map);

/// Rows `phi,x,y,height`.
[[nodiscard]] std::string traceCsv(const std::vector<TraceSample>& trace);

struct SceneOptions {
    int boundarySamples = 720;
    int evoluteSamples = 1440;
    double pixelsPerUnit = 100.0;
};

/// SVG drawing of the boundary, the evolute with its cusps, the center and the equilibrium contacts.
[[nodiscard]] std::string renderScene(const ConvexBody& b, const PlanePoint& center, const SceneOptions& options = {});

/// Runs one subcommand. `args` excludes the program name.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convexeq::cli
