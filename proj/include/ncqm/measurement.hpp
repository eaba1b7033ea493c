#pragma once

#include <cmath>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ncqm/state.hpp"

namespace ncqm {

/// f(z, zbar) = exp(-|z|^2) sum_ab c(a, b) zbar^a z^b.
///
/// Stored as d(a, b) = c(a, b) sqrt(a! b!), so that for a state psi the table
/// is psi itself and evaluation only needs the bounded amplitudes
/// exp(-|z|^2 / 2) z^n / sqrt(n!).
class StateSymbol {
 public:
  StateSymbol() = default;
  explicit StateSymbol(CMatrix scaled);

  /// The polynomial coefficients c(a, b).
  CMatrix coefficients() const;
  const CMatrix& scaled_coefficients() const { return scaled_; }
  Complex evaluate(Complex z) const;

 private:
  CMatrix scaled_;
};

/// (z|psi) = <z|psi|z>.
StateSymbol symbol(const QuantumState& psi);
/// c'(a, b) = (b + 1) c(a, b + 1) - c(a - 1, b).
StateSymbol deriv_z(const StateSymbol& sym);
/// c'(a, b) = (a + 1) c(a + 1, b) - c(a, b - 1).
StateSymbol deriv_zbar(const StateSymbol& sym);

/// Normalized |z><z| with <n|z> = exp(-|z|^2/2) z^n / sqrt(n!), truncated and
/// renormalized. Throws TruncationError when the untruncated |z> carries
/// weight >= 1e-8 at levels >= N - 3.
QuantumState coherent_state_op(const FockContext& ctx, Complex z);

/// Weight of the untruncated |z> at levels >= level.
double coherent_tail_weight(Complex z, Index level);

struct SeriesPolicy {
  double rel_tol = 1e-14;
  int consecutive = 3;
  int max_terms = 200;
};

struct SeriesValue {
  double value = 0.0;
  int terms = 0;
  bool converged = true;
};

/// Evaluates (1/2 pi theta) sum_k |d^k (z|psi) / dz^k|^2 / k! for one state
/// at many points.
///
/// The k-th derivative over sqrt(k!) equals the k-th Fock component of
/// D(-z) psi^dag |z>, with D the displacement operator. Terms are computed
/// that way, through one eigendecomposition of b + b^dag on an enlarged
/// truncated space, because expanding the polynomial coefficients loses
/// accuracy quickly once |z| exceeds 1. The decomposition is grown on demand
/// and shared between threads.
class ProbabilitySeries {
 public:
  ProbabilitySeries(const QuantumState& psi, double theta, SeriesPolicy policy = {});

  /// Sizes the internal basis for points with |z| <= radius.
  void reserve(double radius) const;
  /// Throws ConvergenceError when the cap is reached.
  SeriesValue evaluate(Complex z) const;
  /// Returns the partial sum with converged = false instead of throwing.
  SeriesValue evaluate_capped(Complex z) const;

 private:
  struct Basis {
    Index dim = 0;
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
  };
  std::shared_ptr<const Basis> basis(double radius) const;

  ConfigOperator psi_;
  double theta_;
  SeriesPolicy policy_;
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const Basis> basis_;
};

/// Probability density at the dimensionless point z = (x1 + i x2) / sqrt(2 theta).
double position_probability(const FockContext& ctx, const QuantumState& psi, Complex z);

inline Complex to_complex_coordinate(double x1, double x2, double theta) {
  return Complex(x1, x2) / std::sqrt(2.0 * theta);
}

/// Uniform grid in dimensionful coordinates; `points` counts samples per axis.
struct GridSpec {
  double x1_min = -1.0, x1_max = 1.0;
  double x2_min = -1.0, x2_max = 1.0;
  Index x1_points = 81, x2_points = 81;

  static GridSpec square(double half_width, Index points);
  void validate() const;
};

struct ProbabilityGrid {
  GridSpec spec;
  std::vector<double> x1, x2;
  /// values[i * x2.size() + j] = P(x1[i], x2[j]).
  std::vector<double> values;
  double normalization_estimate = 0.0;
  int max_terms_used = 0;
  std::vector<std::string> warnings;

  double at(std::size_t i, std::size_t j) const { return values[i * x2.size() + j]; }
};

/// Points with |z|^2 above N/3 are evaluated but flagged in `warnings`.
ProbabilityGrid probability_grid(const FockContext& ctx, const QuantumState& psi,
                                 const GridSpec& spec);

/// pi_z as an N^2 x N^2 matrix on the row-major vectorization, built from the
/// closed-form derivative functionals (independent of ProbabilitySeries).
CMatrix povm_matrix(const FockContext& ctx, Complex z);

/// The block of pi_z on span{|m><n| : m, n < levels}, ordered m * levels + n.
CMatrix povm_block(const FockContext& ctx, Complex z, Index levels);

/// (psi|pi_z|psi) through the materialized matrix.
double povm_expectation(const CMatrix& povm, const QuantumState& psi);

/// A psi / ||A psi|| with A the PSD square root of pi_z. Throws
/// MeasurementError when (psi|pi_z|psi) < 1e-14.
QuantumState post_measurement(const FockContext& ctx, const QuantumState& psi, Complex z);

}  // namespace ncqm
