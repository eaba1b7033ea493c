#pragma once

#include "ncqm/superoperator.hpp"

namespace ncqm {

/// Positions act by left multiplication, momenta adjointly:
///   X_i psi = x_i psi,  P_i psi = (hbar/theta) eps_ij [x_j, psi].
struct ObservableSet {
  SuperOperator X1, X2, P1, P2;
  SuperOperator B, Bdag;  // B psi = b psi
  SuperOperator P, Pdag;  // P = P1 + i P2
  SuperOperator Lz;
  ConfigOperator ell_z;   // (-i / 2 theta)(x1^2 + x2^2)
};

struct PositionPair {
  SuperOperator x1, x2;
};
struct MomentumPair {
  SuperOperator p1, p2;
};

PositionPair position_ops(const FockContext& ctx);
MomentumPair momentum_ops(const FockContext& ctx);

/// P psi = -i hbar sqrt(2/theta) [b, psi] and its adjoint P^dag.
std::pair<SuperOperator, SuperOperator> complex_momentum_ops(const FockContext& ctx);

/// P1^2 + P2^2.
SuperOperator momentum_squared(const FockContext& ctx);

/// Lz = X1 P2 - X2 P1 + (theta / 2 hbar) P^2, composed from the position and
/// momentum superoperators.
SuperOperator angular_momentum(const FockContext& ctx);

/// The same operator written as -(hbar / 2 theta)[x1^2 + x2^2, psi], with the
/// radius compressed as in the Hamiltonian so that it equals theta (2 N + 1)
/// on the truncated space. Then Lz |m)(n| = hbar (n - m) |m)(n| for every
/// matrix unit, whereas the composed form is distorted near the cutoff.
SuperOperator angular_momentum_commutator_form(const FockContext& ctx);

ObservableSet build_observables(const FockContext& ctx);

/// psi -> U^dag psi U with U = exp(-i phi (b^dag b + 1/2)); diagonal in the
/// Fock basis, so (U^dag psi U)_mn = exp(i phi (m - n)) psi_mn.
QuantumState rotate(const QuantumState& psi, double phi);

/// Rotation unitary U = exp(phi ell_z) on configuration space.
ConfigOperator rotation_unitary(Index dim, double phi);

/// Time reversal: psi -> psi^dag. Anti-linear, so it has no matrix form.
QuantumState time_reverse(const QuantumState& psi);

/// Theta S Theta^{-1} applied to psi, i.e. Theta(S(Theta psi)).
QuantumState time_conjugate_apply(const SuperOperator& s, const QuantumState& psi);

}  // namespace ncqm
