#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ncqm/state.hpp"

namespace ncqm {

/// One product term psi -> left * psi * right.
struct OperatorTerm {
  ConfigOperator left;
  ConfigOperator right;
  bool left_identity = false;
  bool right_identity = false;
};

/// A linear map on quantum states, psi -> sum_t L_t psi R_t.
///
/// The term list is the primary representation; apply() is matrix-free. The
/// dense N^2 x N^2 matrix sum_t L_t (x) R_t^T under the row-major
/// vectorization is built lazily on first call to materialize() and shared
/// between copies. Instances are immutable, so concurrent readers are safe.
class SuperOperator {
 public:
  SuperOperator() = default;
  SuperOperator(Index dim, std::vector<OperatorTerm> terms, bool hermitian = false);

  static SuperOperator identity(Index dim);
  static SuperOperator zero(Index dim);
  /// psi -> A psi
  static SuperOperator left(const ConfigOperator& a);
  /// psi -> psi A
  static SuperOperator right(const ConfigOperator& a);
  /// psi -> [A, psi]
  static SuperOperator commutator(const ConfigOperator& a);

  Index dim() const { return dim_; }
  std::span<const OperatorTerm> terms() const { return terms_; }
  bool hermitian_on_hq() const { return hermitian_; }
  /// Copy with the Hermitian flag set; callers vouch for the property.
  SuperOperator with_hermitian_flag(bool flag) const;

  QuantumState apply(const QuantumState& psi) const;
  QuantumState operator()(const QuantumState& psi) const { return apply(psi); }
  ConfigOperator apply(const ConfigOperator& psi) const;

  const CMatrix& materialize() const;

  /// Adjoint under the Hilbert-Schmidt inner product: (L, R) -> (L^dag, R^dag).
  SuperOperator adjoint() const;
  /// Merge terms sharing an identical left or right factor.
  SuperOperator simplified() const;

  friend SuperOperator operator+(const SuperOperator& a, const SuperOperator& b);
  friend SuperOperator operator-(const SuperOperator& a, const SuperOperator& b);
  friend SuperOperator operator*(Complex c, const SuperOperator& a);
  friend SuperOperator operator*(double c, const SuperOperator& a);
  /// Composition: (a * b)(psi) = a(b(psi)).
  friend SuperOperator operator*(const SuperOperator& a, const SuperOperator& b);

 private:
  struct Cache;

  Index dim_ = 0;
  std::vector<OperatorTerm> terms_;
  bool hermitian_ = false;
  std::shared_ptr<Cache> cache_;
};

/// [a, b] = a*b - b*a as a superoperator.
SuperOperator commutator(const SuperOperator& a, const SuperOperator& b);

SuperOperator superop_from_terms(
    Index dim, const std::vector<std::pair<ConfigOperator, ConfigOperator>>& terms);
inline QuantumState apply(const SuperOperator& s, const QuantumState& psi) { return s.apply(psi); }
inline const CMatrix& materialize(const SuperOperator& s) { return s.materialize(); }

/// max |M - M^dag| of the materialized matrix.
double hermiticity_defect(const SuperOperator& s);

}  // namespace ncqm
