#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ncqm/state.hpp"

namespace ncqm {

struct CheckResult {
  std::string name;
  double value = 0.0;      // measured residual (or quantity, see `kind`)
  double tolerance = 0.0;
  /// "max": passes when value <= tolerance; "min": passes when value > tolerance.
  std::string kind = "max";
  bool passed = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  ModelParams params;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

/// algebra, continuity, symmetry, povm, oscillator-oracle.
const std::vector<std::string>& suite_names();

/// Throws UsageError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const ModelParams& params, std::uint64_t seed);

/// Normalized state with independent complex Gaussian entries in the
/// support x support top-left block and zeros elsewhere.
QuantumState random_state(Index dim, Index support, std::mt19937_64& rng);

/// Cutoff used by the oscillator oracle: the requested one, raised if needed
/// so that the ground state is representable with margin for n1 + n2 <= 4.
Index oracle_cutoff(const ModelParams& params);

struct LevelMatch {
  int n1 = 0, n2 = 0;
  double analytic = 0.0;
  double numeric = 0.0;   // closest eigenvalue in the Lz = hbar (n2 - n1) sector
  double rel_error = 0.0;
  double lz = 0.0;
};

/// Matches each analytic level with n1 + n2 <= max_quanta to the numeric
/// spectrum of the oscillator Hamiltonian at the given cutoff.
std::vector<LevelMatch> match_oscillator_levels(const ModelParams& params, int max_quanta);

}  // namespace ncqm
