#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hexagram/forward.hpp"
#include "hexagram/identities.hpp"
#include "hexagram/reconstruction.hpp"
#include "json.hpp"

namespace hexagram::cli {

using nlohmann::json;

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitDegenerate = 3,
  kExitReconstruction = 4,
  kExitIdentities = 5,
};

enum class Command { Forward, Reconstruct, VerifyIdentities, Render };

/// Exit status for a library error raised while running `command`.
int exit_code_for(ErrorCode code, Command command);

/// "a,b,c,d,e,f" with each entry an exact rational literal.
SextupleParams parse_params(std::string_view text);

/// Comma-separated array codes such as "ADB|ECF,ABC|FED"; each is canonicalized.
std::vector<PascalArray> parse_arrays(std::string_view text);

struct Viewport {
  Rational xmin;
  Rational xmax;
  Rational ymin;
  Rational ymax;
};

/// "xmin,xmax,ymin,ymax"; each range must be nonempty.
Viewport parse_viewport(std::string_view text);

json line_json(const LineCoords& coords);
json forward_json(const SextupleParams& params, bool all);

/// The four lines of a reconstruct request. Coordinates must be JSON strings
/// (or integers) holding exact rationals; floats are rejected.
SpecialPascals lines_from_json(const json& doc);
json reconstruct_json(const ReconstructionResult& result);

json identities_json(const std::vector<identities::CheckResult>& results);

json error_json(const Error& error);

/// SVG of the conic in the chart z0 = 1 with the six points, the chords and
/// crosshairs of each selected array, and its Pascal line clipped to the
/// viewport. Coordinates stay exact until written out.
std::string render_svg(const SextupleParams& params, const std::vector<PascalArray>& arrays,
                       const Viewport& viewport);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hexagram::cli
