#include "ncqm/observables.hpp"

#include <cmath>

namespace ncqm {

PositionPair position_ops(const FockContext& ctx) {
  return {SuperOperator::left(ctx.x1()).with_hermitian_flag(true),
          SuperOperator::left(ctx.x2()).with_hermitian_flag(true)};
}

MomentumPair momentum_ops(const FockContext& ctx) {
  const auto& p = ctx.params();
  const double c = p.hbar / p.theta;
  return {(c * SuperOperator::commutator(ctx.x2())).with_hermitian_flag(true),
          (-c * SuperOperator::commutator(ctx.x1())).with_hermitian_flag(true)};
}

std::pair<SuperOperator, SuperOperator> complex_momentum_ops(const FockContext& ctx) {
  const auto& p = ctx.params();
  const double c = p.hbar * std::sqrt(2.0 / p.theta);
  return {(-kI * c) * SuperOperator::commutator(ctx.b()),
          (kI * c) * SuperOperator::commutator(ctx.bdag())};
}

SuperOperator momentum_squared(const FockContext& ctx) {
  const auto [p1, p2] = momentum_ops(ctx);
  return (p1 * p1 + p2 * p2).with_hermitian_flag(true);
}

SuperOperator angular_momentum(const FockContext& ctx) {
  const auto& p = ctx.params();
  const auto [x1, x2] = position_ops(ctx);
  const auto [p1, p2] = momentum_ops(ctx);
  const SuperOperator lz = x1 * p2 - x2 * p1 + (p.theta / (2.0 * p.hbar)) * momentum_squared(ctx);
  return lz.with_hermitian_flag(true);
}

SuperOperator angular_momentum_commutator_form(const FockContext& ctx) {
  const auto& p = ctx.params();
  const Index n = ctx.dim();
  ConfigOperator r2 = ctx.x1() * ctx.x1() + ctx.x2() * ctx.x2();
  r2(n - 1, n - 1) += p.theta * static_cast<double>(n);
  return (-(p.hbar / (2.0 * p.theta)) * SuperOperator::commutator(r2)).with_hermitian_flag(true);
}

ObservableSet build_observables(const FockContext& ctx) {
  const auto& p = ctx.params();
  auto [x1, x2] = position_ops(ctx);
  auto [p1, p2] = momentum_ops(ctx);
  auto [pc, pcdag] = complex_momentum_ops(ctx);
  ObservableSet set{std::move(x1),
                    std::move(x2),
                    std::move(p1),
                    std::move(p2),
                    SuperOperator::left(ctx.b()),
                    SuperOperator::left(ctx.bdag()),
                    std::move(pc),
                    std::move(pcdag),
                    angular_momentum(ctx),
                    {}};
  set.ell_z = (-kI / (2.0 * p.theta)) * (ctx.x1() * ctx.x1() + ctx.x2() * ctx.x2());
  return set;
}

ConfigOperator rotation_unitary(Index dim, double phi) {
  ConfigOperator u = ConfigOperator::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n) u(n, n) = std::exp(-kI * phi * (static_cast<double>(n) + 0.5));
  return u;
}

QuantumState rotate(const QuantumState& psi, double phi) {
  const Index n = psi.dim();
  ConfigOperator out = psi.op();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) out(a, b) *= std::exp(kI * phi * static_cast<double>(a - b));
  return QuantumState(std::move(out));
}

QuantumState time_reverse(const QuantumState& psi) { return QuantumState(psi.op().adjoint()); }

QuantumState time_conjugate_apply(const SuperOperator& s, const QuantumState& psi) {
  return time_reverse(s.apply(time_reverse(psi)));
}

}  // namespace ncqm
