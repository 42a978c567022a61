#pragma once

// Command implementations behind the `isokit` executable. Each command maps
// a loaded group file to a JSON report and an exit code; main.cpp only parses
// arguments and prints.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "isokit/frobenius.hpp"
#include "isokit/kottwitz_triple.hpp"
#include "isokit/newton_polygon.hpp"
#include "isokit/root_datum.hpp"

namespace isokit::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kComputationError = 3,
  kOracleMismatch = 4,
  kTripleRejected = 5,
};

/// Malformed or invalid group file; maps to exit code 2.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TripleSpec {
  std::string centralizer = "torus";
  std::optional<IntVector> mu_h;
  std::optional<std::vector<IntMatrix>> global_generators;
  std::optional<std::vector<IntMatrix>> inf;
  std::optional<std::vector<IntMatrix>> p;
  std::optional<std::vector<IntMatrix>> l;
  Tampering tampering;
};

struct GroupSpec {
  BasedRootDatum datum;
  FrobeniusDatum frobenius;
  IntVector mu;
  bool generic = false;
  /// Preset tag ("GL", "GSp", ...) when the group came from a preset.
  std::string preset;
  std::size_t preset_parameter = 0;
  std::size_t res_degree = 1;
  std::string frobenius_kind = "split";
  std::optional<TripleSpec> triple;
};

enum class Orientation { deligne, naive };

struct Options {
  Orientation orientation = Orientation::deligne;
  std::optional<std::size_t> class_id;
  std::string format = "json";
  bool oracle = false;
  bool strict = false;
  /// Directory for polygon files; nothing is written when empty.
  std::filesystem::path out_dir;
};

struct CommandResult {
  int exit_code = kOk;
  Json report;
  /// Human-readable diagnostics for stderr.
  std::string message;
  std::vector<std::filesystem::path> files;
};

GroupSpec parse_spec(const std::string& toml_text);
GroupSpec load_spec(const std::filesystem::path& path);

/// mu as used by the computations: negated under the naive orientation.
IntVector effective_mu(const GroupSpec& spec, Orientation orientation);

CommandResult cmd_strata(const GroupSpec& spec, const Options& options);
/// Sorted comparison of the strata polygons with a reference set: "agree",
/// "count" (reference size), "only_in_strata" and "only_in_oracle".
Json polygon_diff(std::vector<NewtonPolygon> strata, std::vector<NewtonPolygon> oracle);
CommandResult cmd_polygons(const GroupSpec& spec, const Options& options);
CommandResult cmd_dagger(const GroupSpec& spec, const Options& options);
CommandResult cmd_triple(const GroupSpec& spec, const Options& options);
CommandResult cmd_ordinary(const GroupSpec& spec, const Options& options);

/// Dispatch by subcommand name; converts library errors into exit code 3.
CommandResult run_command(const std::string& name, const GroupSpec& spec, const Options& options);

/// Re-checks a strata report against the module invariants: every class has a
/// dominant Newton point with centralizer exactly its Levi, lies below
/// mu-bar, carries kappa_g = mu^natural, and the Hasse edges go upward.
/// Returns the list of violations (empty when the report is consistent).
std::vector<std::string> validate_strata_report(const GroupSpec& spec, const Json& report,
                                                Orientation orientation = Orientation::deligne);

// JSON encodings shared by the reports.
Json to_json(const Int& x);
Json to_json(const Rat& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);

}  // namespace isokit::cli
