#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "ncqm/measurement.hpp"
#include "ncqm/state.hpp"

namespace ncqm::cli {

using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadConfig = 2,
  kNumericalFailure = 3,
};

/// Which state a command acts on. Parsed from "ground", "excited:n1,n2",
/// "coherent:re[,im]", "plane:re[,im]" or "file:path".
struct StateSelector {
  enum class Kind { ground, excited, coherent, plane, file };
  Kind kind = Kind::ground;
  int n1 = 0, n2 = 0;
  Complex value{};  // coherent z or plane-wave kappa
  std::string path;

  static StateSelector parse(const std::string& text);
  std::string to_string() const;
};

struct RunConfig {
  std::string command;
  ModelParams params;
  std::uint64_t seed = 1;
  std::string out;  // empty: stdout
  std::string format;  // empty: csv for probability, json otherwise

  std::string system = "oscillator";
  Complex kappa{0.2, 0.0};
  std::size_t levels = 10;

  StateSelector state;
  std::optional<GridSpec> grid;  // default extent follows the state's spread
  Index grid_points = 81;

  double time = 10.0;
  int steps = 10;
  std::string state_out;

  std::string suite = "all";
};

/// Parses a "re[,im]" pair.
Complex parse_complex(const std::string& text);

/// Reads a schema-1 config object on top of `base`. Unknown keys, a missing
/// or different schema, and ill-typed values raise ConfigError.
RunConfig apply_config(const json& doc, RunConfig base);
RunConfig load_config_file(const std::string& path, RunConfig base);

/// Half-width (in x units) of the default probability grid: the disc of
/// radius R in z with R^2 = ln(1e6) (1 + <n>), <n> the mean left Fock level.
double default_half_width(const QuantumState& psi, double theta);

/// State files hold {"schema": 1, "dim": N, "re": [[...]], "im": [[...]]}.
QuantumState read_state_file(const std::string& path);
json state_to_json(const QuantumState& psi);

QuantumState build_state(const FockContext& ctx, const StateSelector& sel);

json run_spectrum(const RunConfig& cfg);
ProbabilityGrid run_probability(const RunConfig& cfg, const QuantumState& psi);
json run_evolve(const RunConfig& cfg);
json run_check(const RunConfig& cfg);

std::string grid_csv(const ProbabilityGrid& grid);
json grid_sidecar(const RunConfig& cfg, const ProbabilityGrid& grid);

/// Runs cfg.command, writes data to `out` (or cfg.out) and diagnostics to
/// `err`, and returns the exit code. Library errors are mapped: invalid
/// configuration, unknown suite and too-small cutoffs give 2, numerical
/// failures give 3, a failed check suite gives 1.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace ncqm::cli
