#include "ncqm/state.hpp"

#include <cmath>
#include <string>

#include "ncqm/error.hpp"

namespace ncqm {

QuantumState::QuantumState(ConfigOperator op) : op_(std::move(op)) {
  if (op_.rows() != op_.cols())
    throw UsageError("quantum state must be square, got " + std::to_string(op_.rows()) + "x" +
                     std::to_string(op_.cols()));
  norm_sq_ = op_.squaredNorm();
}

QuantumState QuantumState::zero(Index dim) { return QuantumState(ConfigOperator::Zero(dim, dim)); }

QuantumState QuantumState::unit(Index dim, Index m, Index n) {
  if (m < 0 || n < 0 || m >= dim || n >= dim) throw UsageError("matrix unit index out of range");
  ConfigOperator op = ConfigOperator::Zero(dim, dim);
  op(m, n) = 1.0;
  return QuantumState(std::move(op));
}

double QuantumState::norm() const { return std::sqrt(norm_sq_); }

bool QuantumState::is_normalized(double tol) const { return std::abs(norm_sq_ - 1.0) <= tol; }

QuantumState QuantumState::normalized() const {
  if (norm_sq_ == 0.0) throw UsageError("cannot normalize the zero state");
  return QuantumState(op_ / norm());
}

QuantumState operator+(const QuantumState& a, const QuantumState& b) {
  if (a.dim() != b.dim()) throw UsageError("state dimension mismatch");
  return QuantumState(a.op_ + b.op_);
}

QuantumState operator-(const QuantumState& a, const QuantumState& b) {
  if (a.dim() != b.dim()) throw UsageError("state dimension mismatch");
  return QuantumState(a.op_ - b.op_);
}

QuantumState operator*(Complex c, const QuantumState& a) { return QuantumState(c * a.op_); }

Complex hs_inner(const QuantumState& phi, const QuantumState& psi) {
  if (phi.dim() != psi.dim())
    throw UsageError("hs_inner: cutoff mismatch (" + std::to_string(phi.dim()) + " vs " +
                     std::to_string(psi.dim()) + ")");
  // tr(phi^dag psi) = sum_mn conj(phi_mn) psi_mn
  return (phi.op().conjugate().cwiseProduct(psi.op())).sum();
}

double support_weight(const QuantumState& psi, Index level) {
  const Index n = psi.dim();
  if (level < 0 || level > n) throw UsageError("support_weight: level out of range");
  if (psi.norm_sq() == 0.0) throw UsageError("support_weight: zero state");
  const double outside = psi.op().bottomRows(n - level).squaredNorm() +
                         psi.op().topRightCorner(level, n - level).squaredNorm();
  return outside / psi.norm_sq();
}

CVector vectorize(const QuantumState& psi) {
  const Index n = psi.dim();
  CVector v(n * n);
  for (Index m = 0; m < n; ++m)
    for (Index k = 0; k < n; ++k) v(vec_index(n, m, k)) = psi.op()(m, k);
  return v;
}

QuantumState unvectorize(const CVector& v, Index dim) {
  if (v.size() != dim * dim) throw UsageError("unvectorize: length is not dim^2");
  ConfigOperator op(dim, dim);
  for (Index m = 0; m < dim; ++m)
    for (Index k = 0; k < dim; ++k) op(m, k) = v(vec_index(dim, m, k));
  return QuantumState(std::move(op));
}

}  // namespace ncqm
