#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ncqm {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// An operator on the truncated configuration space. Rows are bras <m|,
/// columns kets |n>, both labelled by Fock level 0..N-1.
using ConfigOperator = CMatrix;

inline constexpr Complex kI{0.0, 1.0};

/// Physical constants and the Fock cutoff. Every derived quantity is a pure
/// function of these fields.
struct ModelParams {
  double theta = 0.1;  // length^2
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  Index cutoff = 30;

  /// Requirements of the truncated operator representation: theta, hbar and
  /// mass strictly positive, omega >= 0, cutoff >= 2. Throws ConfigError.
  void validate() const;

  bool operator==(const ModelParams&) const = default;
};

/// Ladder and position operators on the truncated Fock space.
///
/// b[n-1, n] = sqrt(n); x1 = sqrt(theta/2)(b + b^dag); x2 = i sqrt(theta/2)(b^dag - b).
/// Truncation breaks [b, b^dag] = 1 at the top level only.
class FockContext {
 public:
  explicit FockContext(const ModelParams& params);

  const ModelParams& params() const { return params_; }
  Index dim() const { return params_.cutoff; }

  const ConfigOperator& b() const { return b_; }
  const ConfigOperator& bdag() const { return bdag_; }
  const ConfigOperator& x1() const { return x1_; }
  const ConfigOperator& x2() const { return x2_; }
  const ConfigOperator& identity() const { return identity_; }
  /// Exact number operator diag(0, 1, ..., N-1).
  const ConfigOperator& number() const { return number_; }

 private:
  ModelParams params_;
  ConfigOperator b_, bdag_, x1_, x2_, identity_, number_;
};

FockContext build_fock(const ModelParams& params);

}  // namespace ncqm
