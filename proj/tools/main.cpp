#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "ncqm/error.hpp"

namespace {

struct Flags {
  std::string config;
  std::optional<double> theta, hbar, mass, omega, time;
  std::optional<long> cutoff;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out, format, system, kappa, state, suite, state_out;
  std::optional<std::size_t> levels;
  std::optional<int> steps;
  std::optional<long> points;
  std::optional<double> half_width;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file (schema 1); flags override it");
  cmd->add_option("--theta", f.theta, "non-commutativity parameter");
  cmd->add_option("--hbar", f.hbar);
  cmd->add_option("--mass", f.mass);
  cmd->add_option("--omega", f.omega, "oscillator frequency");
  cmd->add_option("--cutoff", f.cutoff, "Fock cutoff N");
  cmd->add_option("--seed", f.seed);
  cmd->add_option("--out", f.out, "output file (default stdout)");
  cmd->add_option("--format", f.format, "json or csv");
}

ncqm::cli::RunConfig resolve(const std::string& command, const Flags& f) {
  using namespace ncqm::cli;
  RunConfig cfg;
  if (!f.config.empty()) cfg = load_config_file(f.config, cfg);
  cfg.command = command;
  if (f.theta) cfg.params.theta = *f.theta;
  if (f.hbar) cfg.params.hbar = *f.hbar;
  if (f.mass) cfg.params.mass = *f.mass;
  if (f.omega) cfg.params.omega = *f.omega;
  if (f.cutoff) cfg.params.cutoff = *f.cutoff;
  if (f.seed) cfg.seed = *f.seed;
  if (f.out) cfg.out = *f.out;
  if (f.format) cfg.format = *f.format;
  if (f.system) cfg.system = *f.system;
  if (f.kappa) cfg.kappa = parse_complex(*f.kappa);
  if (f.levels) cfg.levels = *f.levels;
  if (f.state) cfg.state = StateSelector::parse(*f.state);
  if (f.time) cfg.time = *f.time;
  if (f.steps) cfg.steps = *f.steps;
  if (f.state_out) cfg.state_out = *f.state_out;
  if (f.suite) cfg.suite = *f.suite;
  if (f.points) {
    cfg.grid_points = *f.points;
    if (cfg.grid) cfg.grid->x1_points = cfg.grid->x2_points = *f.points;
  }
  if (f.half_width) cfg.grid = ncqm::GridSpec::square(*f.half_width, cfg.grid_points);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum mechanics on the non-commutative plane"};
  app.require_subcommand(1);
  Flags f;

  auto* spectrum = app.add_subcommand("spectrum", "lowest eigenpairs of the Hamiltonian");
  add_common(spectrum, f);
  spectrum->add_option("--system", f.system, "oscillator or free");
  spectrum->add_option("--levels", f.levels, "number of levels");
  spectrum->add_option("--kappa", f.kappa, "plane-wave parameter re[,im] (free system)");

  auto* probability = app.add_subcommand("probability", "position probability density on a grid");
  add_common(probability, f);
  probability->add_option("--state", f.state, "ground | excited:n1,n2 | coherent:z | plane:kappa | file:path");
  probability->add_option("--points", f.points, "samples per axis");
  probability->add_option("--half-width", f.half_width, "grid half-width in x units");

  auto* evolve = app.add_subcommand("evolve", "time evolution with norm and expectation values");
  add_common(evolve, f);
  evolve->add_option("--system", f.system, "oscillator or free");
  evolve->add_option("--state", f.state, "ground | excited:n1,n2 | coherent:z | plane:kappa | file:path");
  evolve->add_option("--time", f.time, "final time");
  evolve->add_option("--steps", f.steps, "number of samples after t = 0");
  evolve->add_option("--state-out", f.state_out, "write the final state as JSON");

  auto* check = app.add_subcommand("check", "invariant suites");
  add_common(check, f);
  check->add_option("--suite", f.suite, "algebra | continuity | symmetry | povm | oscillator-oracle | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ncqm::cli::kBadConfig;
  }

  CLI::App* chosen = app.get_subcommands().front();
  ncqm::cli::RunConfig cfg;
  try {
    cfg = resolve(chosen->get_name(), f);
  } catch (const ncqm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ncqm::cli::kBadConfig;
  }
  return ncqm::cli::execute(cfg, std::cout, std::cerr);
}
