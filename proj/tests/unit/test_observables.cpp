#include <gtest/gtest.h>

#include "ncqm/observables.hpp"
#include "support.hpp"

using namespace ncqm;

namespace {

double comm_residual(const SuperOperator& a, const SuperOperator& b, Complex c, const QuantumState& psi) {
  const QuantumState ab = a.apply(b.apply(psi)), ba = b.apply(a.apply(psi));
  const QuantumState rhs = c * psi;
  const double scale = std::max({ab.norm(), ba.norm(), rhs.norm()});
  return (ab - ba - rhs).norm() / scale;
}

}  // namespace

// Heisenberg algebra on random states away from the cutoff, over many seeds and parameters.
TEST(Observables, HeisenbergAlgebraProperty) {
  const double thetas[] = {0.05, 0.1, 0.7};
  const double hbars[] = {1.0, 0.3};
  for (double theta : thetas)
    for (double hbar : hbars) {
      const FockContext ctx({theta, hbar, 1.0, 1.0, 16});
      const ObservableSet o = build_observables(ctx);
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto psi = test::seeded_state(16, 13, seed);
        EXPECT_LT(comm_residual(o.X1, o.X2, kI * theta, psi), 1e-12);
        EXPECT_LT(comm_residual(o.X1, o.P1, kI * hbar, psi), 1e-12);
        EXPECT_LT(comm_residual(o.X2, o.P2, kI * hbar, psi), 1e-12);
        EXPECT_LT(comm_residual(o.X1, o.P2, 0.0, psi), 1e-12);
        EXPECT_LT(comm_residual(o.X2, o.P1, 0.0, psi), 1e-12);
        EXPECT_LT(comm_residual(o.P1, o.P2, 0.0, psi), 1e-12);
      }
    }
}

TEST(Observables, MomentaActByCommutator) {
  const double theta = 0.2, hbar = 0.7;
  const FockContext ctx({theta, hbar, 1.0, 1.0, 8});
  const auto [p1, p2] = momentum_ops(ctx);
  const auto psi = test::seeded_state(8, 8, 5);
  const CMatrix& x1 = ctx.x1();
  const CMatrix& x2 = ctx.x2();
  const CMatrix e1 = (hbar / theta) * (x2 * psi.op() - psi.op() * x2);
  const CMatrix e2 = -(hbar / theta) * (x1 * psi.op() - psi.op() * x1);
  EXPECT_LT((p1.apply(psi).op() - e1).norm(), 1e-13);
  EXPECT_LT((p2.apply(psi).op() - e2).norm(), 1e-13);
  const auto [pc, pcd] = complex_momentum_ops(ctx);
  EXPECT_LT(test::gap(pc.apply(psi), p1.apply(psi) + kI * p2.apply(psi)), 1e-13);
  EXPECT_LT(test::gap(pcd.apply(psi), p1.apply(psi) - kI * p2.apply(psi)), 1e-13);
}

TEST(Observables, HermitianOnQuantumHilbertSpace) {
  const FockContext ctx({0.1, 1.0, 1.0, 1.0, 7});
  const ObservableSet o = build_observables(ctx);
  for (const SuperOperator* s : {&o.X1, &o.X2, &o.P1, &o.P2, &o.Lz}) EXPECT_LT(hermiticity_defect(*s), 1e-12);
  EXPECT_LT(hermiticity_defect(momentum_squared(ctx)), 1e-11);
}

TEST(Observables, AngularMomentumOnMatrixUnits) {
  const double hbar = 0.9;
  const Index n = 9;
  const FockContext ctx({0.3, hbar, 1.0, 1.0, n});
  const SuperOperator lz = angular_momentum(ctx);
  const SuperOperator lz_comm = angular_momentum_commutator_form(ctx);
  for (Index m = 0; m < n; ++m)
    for (Index k = 0; k < n; ++k) {
      const auto unit = QuantumState::unit(n, m, k);
      const auto expect = Complex(hbar * double(k - m)) * unit;
      EXPECT_LT((lz_comm.apply(unit) - expect).norm(), 1e-12) << m << "," << k;
      if (m + 1 < n && k + 1 < n) EXPECT_LT((lz.apply(unit) - expect).norm(), 1e-12) << m << "," << k;
    }
  const auto psi = test::seeded_state(n, n - 2, 4);
  EXPECT_LT(test::gap(lz.apply(psi), angular_momentum_commutator_form(ctx).apply(psi)), 1e-12);
}

TEST(Observables, RotationAndTimeReversal) {
  const Index n = 8;
  const FockContext ctx({0.1, 1.0, 1.0, 1.0, n});
  const auto psi = test::seeded_state(n, n, 8);
  const double phi = 0.37;
  const CMatrix u = rotation_unitary(n, phi);
  EXPECT_LT((u * u.adjoint() - CMatrix::Identity(n, n)).norm(), 1e-13);
  const QuantumState r = rotate(psi, phi);
  for (Index m = 0; m < n; ++m)
    for (Index k = 0; k < n; ++k)
      EXPECT_NEAR(std::abs(r(m, k) - std::exp(kI * phi * double(m - k)) * psi(m, k)), 0.0, 1e-14);
  EXPECT_NEAR(r.norm(), psi.norm(), 1e-14);
  const QuantumState t = time_reverse(psi);
  EXPECT_EQ((t.op() - psi.op().adjoint()).norm(), 0.0);
  EXPECT_EQ((time_reverse(t).op() - psi.op()).norm(), 0.0);
}
