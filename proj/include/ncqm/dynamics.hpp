#pragma once

#include <optional>
#include <vector>

#include "ncqm/superoperator.hpp"

namespace ncqm {

enum class SystemKind { free_particle, oscillator, potential, custom };

const char* to_string(SystemKind kind);

struct HamiltonianSpec {
  SystemKind kind = SystemKind::oscillator;
  /// For kind == potential: v(m, n) multiplies (b^dag)^m b^n. Must satisfy
  /// v(m, n) = conj(v(n, m)) so that V is Hermitian on configuration space.
  std::optional<CMatrix> potential_coeffs;
};

/// H = P^2 / 2m + V(X1, X2) together with the data it was built from.
class Hamiltonian {
 public:
  Hamiltonian(FockContext ctx, HamiltonianSpec spec, SuperOperator op, ConfigOperator potential);

  /// Wraps an arbitrary superoperator; continuity checks reject it.
  static Hamiltonian custom(const FockContext& ctx, SuperOperator op);

  const FockContext& context() const { return ctx_; }
  const HamiltonianSpec& spec() const { return spec_; }
  SystemKind kind() const { return spec_.kind; }
  const SuperOperator& op() const { return op_; }
  /// V on configuration space (zero for the free particle).
  const ConfigOperator& potential() const { return potential_; }

  QuantumState apply(const QuantumState& psi) const { return op_.apply(psi); }

 private:
  FockContext ctx_;
  HamiltonianSpec spec_;
  SuperOperator op_;
  ConfigOperator potential_;
};

/// sum_mn v(m, n) (b^dag)^m b^n with truncated ladder operators. Throws
/// ValidationError if the table is not Hermitian.
ConfigOperator normal_ordered_potential(const FockContext& ctx, const CMatrix& coeffs);

/// Kinetic term is P^dag P / 2m built from the complex momentum; the
/// oscillator adds (1/2) m omega^2 (x1^2 + x2^2) by left multiplication.
/// Both are compressions of the untruncated operators onto the cutoff block:
/// they differ from products of truncated factors only in the b b^dag entry
/// at level N - 1. Eigenvalues are therefore upper bounds on the exact ones.
Hamiltonian hamiltonian(const FockContext& ctx, const HamiltonianSpec& spec);

/// Eigen-decomposition of a Hermitian superoperator.
///
/// The materialized matrix is block-diagonal whenever the term list maps
/// matrix units within closed subsets (for rotation-invariant Hamiltonians
/// these are the sectors of fixed n - m). Blocks are found from the exact
/// sparsity of the terms and diagonalized independently; the eigenpairs are
/// those of the full N^2 x N^2 matrix. The object is read-only after
/// construction and may be shared across threads.
class SpectralDecomposition {
 public:
  explicit SpectralDecomposition(const SuperOperator& h, double hermitian_tol = 1e-12);

  Index dim() const { return dim_; }
  std::size_t size() const { return values_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t largest_block() const;

  /// All eigenvalues in ascending order.
  const std::vector<double>& eigenvalues() const { return values_; }
  /// Normalized eigenstate for eigenvalues()[k].
  QuantumState eigenstate(std::size_t k) const;
  /// Vectorized indices of the block that eigenvalues()[k] belongs to.
  const std::vector<Index>& block_members(std::size_t k) const;

  /// exp(-i H t / hbar) psi.
  QuantumState evolve(const QuantumState& psi, double t, double hbar) const;

 private:
  struct Block {
    std::vector<Index> members;  // vectorized indices
    Eigen::VectorXd values;
    CMatrix vectors;
  };
  Index dim_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::pair<std::size_t, Index>> order_;  // (block, column) by ascending value
  std::vector<double> values_;
};

struct SpectrumResult {
  std::vector<double> eigenvalues;
  std::vector<QuantumState> eigenstates;
  std::vector<double> lz_expectations;
  /// support_weight(state, N - 5): large values flag states bound to the cutoff.
  std::vector<double> edge_weights;
};

/// Lowest `count` eigenpairs ordered by energy, then Lz expectation, then
/// lexicographically on the phase-fixed vectorized components.
SpectrumResult solve_spectrum(const Hamiltonian& h, std::size_t count);
SpectrumResult solve_spectrum(const SpectralDecomposition& decomposition, const SuperOperator& lz,
                              std::size_t count);

QuantumState evolve(const QuantumState& psi0, const Hamiltonian& h, double t);

struct PlaneWave {
  QuantumState state;
  double energy = 0.0;
  /// Matrix elements with both indices below `reliable` agree with the
  /// untruncated plane wave to ~1e-12; the last N - reliable levels carry
  /// truncation artifacts.
  Index reliable = 0;
};

/// Truncated exp(i kappa b) exp(i conj(kappa) b^dag) with energy
/// hbar^2 |kappa|^2 / (m theta). kappa is the dimensionless wave parameter.
/// A plane wave is not Hilbert-Schmidt: its weight near the cutoff never
/// vanishes, so eigen-equations only hold on the reliable block. Throws
/// TruncationError when that block has fewer than N / 2 levels.
PlaneWave plane_wave(const FockContext& ctx, Complex kappa);

/// ||(H psi - E psi) restricted to the reliable block|| / ||psi on that block||.
double plane_wave_residual(const Hamiltonian& h, const PlaneWave& pw);

/// Same for P psi = hbar sqrt(2 / theta) conj(kappa) psi.
double plane_wave_momentum_residual(const FockContext& ctx, const PlaneWave& pw, Complex kappa);

struct ContinuityReport {
  double residual = 0.0;      // || rho_dot - [x2, j1] - [x1, j2] ||_F
  Complex trace_rho_dot{};    // d/dt (psi|psi)
  double rho_dot_norm = 0.0;
};

/// Evaluates the continuity equation with psi_dot = -i H psi / hbar and
/// j1 = (hbar / 2 m i theta^2)(psi^dag [x2, psi] - [x2, psi^dag] psi),
/// j2 likewise with x1. Throws UsageError for custom Hamiltonians.
ContinuityReport continuity_report(const QuantumState& psi, const Hamiltonian& h);
double continuity_residual(const QuantumState& psi, const Hamiltonian& h);

}  // namespace ncqm
