#include <gtest/gtest.h>

#include "ncqm/error.hpp"
#include "ncqm/fock.hpp"
#include "ncqm/state.hpp"
#include "support.hpp"

using namespace ncqm;

TEST(Fock, LadderEntries) {
  const FockContext ctx({0.1, 1.0, 1.0, 1.0, 6});
  for (Index n = 1; n < 6; ++n) EXPECT_DOUBLE_EQ(ctx.b()(n - 1, n).real(), std::sqrt(double(n)));
  EXPECT_EQ((ctx.bdag() - ctx.b().adjoint()).norm(), 0.0);
}

TEST(Fock, CanonicalCommutatorBreaksOnlyAtTop) {
  const Index n = 12;
  const FockContext ctx({0.3, 1.0, 1.0, 1.0, n});
  const CMatrix c = ctx.b() * ctx.bdag() - ctx.bdag() * ctx.b();
  for (Index k = 0; k + 1 < n; ++k) EXPECT_NEAR(std::abs(c(k, k) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(c(n - 1, n - 1).real(), -double(n - 1), 1e-12);
  CMatrix off = c;
  off.diagonal().setZero();
  EXPECT_EQ(off.norm(), 0.0);
}

TEST(Fock, PositionsHermitianAndNonCommuting) {
  const double theta = 0.25;
  const Index n = 10;
  const FockContext ctx({theta, 1.0, 1.0, 1.0, n});
  EXPECT_LT((ctx.x1() - ctx.x1().adjoint()).norm(), 1e-15);
  EXPECT_LT((ctx.x2() - ctx.x2().adjoint()).norm(), 1e-15);
  const CMatrix c = ctx.x1() * ctx.x2() - ctx.x2() * ctx.x1();
  for (Index k = 0; k + 1 < n; ++k) EXPECT_NEAR(std::abs(c(k, k) - kI * theta), 0.0, 1e-14);
}

TEST(Fock, RejectsBadParameters) {
  EXPECT_THROW(FockContext({0.0, 1.0, 1.0, 1.0, 10}), ConfigError);
  EXPECT_THROW(FockContext({0.1, -1.0, 1.0, 1.0, 10}), ConfigError);
  EXPECT_THROW(FockContext({0.1, 1.0, 0.0, 1.0, 10}), ConfigError);
  EXPECT_THROW(FockContext({0.1, 1.0, 1.0, -1.0, 10}), ConfigError);
  EXPECT_THROW(FockContext({0.1, 1.0, 1.0, 1.0, 1}), ConfigError);
  EXPECT_NO_THROW(FockContext({0.1, 1.0, 1.0, 0.0, 2}));
}

TEST(State, InnerProductAndNorm) {
  const auto a = test::seeded_state(7, 7, 1);
  const auto b = test::seeded_state(7, 5, 2);
  EXPECT_NEAR(a.norm(), 1.0, 1e-14);
  EXPECT_TRUE(a.is_normalized());
  const Complex ab = hs_inner(a, b);
  const Complex ba = hs_inner(b, a);
  EXPECT_NEAR(std::abs(ab - std::conj(ba)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ab - (a.op().adjoint() * b.op()).trace()), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(hs_inner(a, kI * b) - kI * ab), 0.0, 1e-15);
}

TEST(State, VectorizationIsRowMajor) {
  const auto a = test::seeded_state(5, 5, 3);
  const CVector v = vectorize(a);
  for (Index m = 0; m < 5; ++m)
    for (Index n = 0; n < 5; ++n) EXPECT_EQ(v(vec_index(5, m, n)), a(m, n));
  EXPECT_EQ((unvectorize(v, 5).op() - a.op()).norm(), 0.0);
}

TEST(State, SupportWeight) {
  ConfigOperator op = ConfigOperator::Zero(6, 6);
  op(0, 0) = 3.0;
  op(1, 5) = 4.0;
  const QuantumState psi(op);
  EXPECT_NEAR(support_weight(psi, 5), 16.0 / 25.0, 1e-15);
  EXPECT_NEAR(support_weight(psi, 1), 16.0 / 25.0, 1e-15);
  EXPECT_NEAR(support_weight(psi, 0), 1.0, 1e-15);
  EXPECT_THROW(QuantumState::zero(4).normalized(), UsageError);
}
