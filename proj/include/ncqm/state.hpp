#pragma once

#include "ncqm/fock.hpp"

namespace ncqm {

/// An element of the quantum Hilbert space: a Hilbert-Schmidt operator on
/// configuration space, stored as its N x N Fock matrix.
class QuantumState {
 public:
  QuantumState() = default;
  explicit QuantumState(ConfigOperator op);

  static QuantumState zero(Index dim);
  /// The matrix unit |m><n|.
  static QuantumState unit(Index dim, Index m, Index n);

  const ConfigOperator& op() const { return op_; }
  Index dim() const { return op_.rows(); }
  /// tr(psi^dag psi), cached at construction.
  double norm_sq() const { return norm_sq_; }
  double norm() const;
  bool is_normalized(double tol = 1e-12) const;
  /// Throws UsageError for the zero state.
  QuantumState normalized() const;

  Complex operator()(Index m, Index n) const { return op_(m, n); }

  friend QuantumState operator+(const QuantumState& a, const QuantumState& b);
  friend QuantumState operator-(const QuantumState& a, const QuantumState& b);
  friend QuantumState operator*(Complex c, const QuantumState& a);
  friend QuantumState operator*(const QuantumState& a, Complex c) { return c * a; }

 private:
  ConfigOperator op_;
  double norm_sq_ = 0.0;
};

/// tr(phi^dag psi): conjugate-linear in phi, linear in psi.
Complex hs_inner(const QuantumState& phi, const QuantumState& psi);

/// Fraction of the norm carried by entries with row >= M or column >= M.
double support_weight(const QuantumState& psi, Index level);

/// Row-major vectorization, index(m, n) = m * N + n.
CVector vectorize(const QuantumState& psi);
QuantumState unvectorize(const CVector& v, Index dim);
inline Index vec_index(Index dim, Index m, Index n) { return m * dim + n; }

}  // namespace ncqm
