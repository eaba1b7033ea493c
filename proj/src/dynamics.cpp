#include "ncqm/dynamics.hpp"

#include <cmath>
#include <string>

#include "ncqm/error.hpp"
#include "ncqm/observables.hpp"

namespace ncqm {

const char* to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::free_particle: return "free";
    case SystemKind::oscillator: return "oscillator";
    case SystemKind::potential: return "potential";
    case SystemKind::custom: return "custom";
  }
  return "unknown";
}

Hamiltonian::Hamiltonian(FockContext ctx, HamiltonianSpec spec, SuperOperator op,
                         ConfigOperator potential)
    : ctx_(std::move(ctx)), spec_(std::move(spec)), op_(std::move(op)), potential_(std::move(potential)) {
  if (op_.dim() != ctx_.dim()) throw UsageError("hamiltonian: cutoff mismatch");
}

Hamiltonian Hamiltonian::custom(const FockContext& ctx, SuperOperator op) {
  HamiltonianSpec spec;
  spec.kind = SystemKind::custom;
  const Index n = ctx.dim();
  return Hamiltonian(ctx, spec, std::move(op), ConfigOperator::Zero(n, n));
}

ConfigOperator normal_ordered_potential(const FockContext& ctx, const CMatrix& coeffs) {
  if (coeffs.rows() != coeffs.cols())
    throw ValidationError("potential coefficient table must be square");
  const double scale = std::max(1.0, coeffs.cwiseAbs().maxCoeff());
  if ((coeffs - coeffs.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw ValidationError("potential coefficients must satisfy v(m, n) = conj(v(n, m))");

  const Index n = ctx.dim();
  const Index order = coeffs.rows();
  // powers[k] = b^k, truncated ladder operators
  std::vector<ConfigOperator> powers{ctx.identity()};
  for (Index k = 1; k < order; ++k) powers.push_back(powers.back() * ctx.b());
  ConfigOperator v = ConfigOperator::Zero(n, n);
  for (Index p = 0; p < order; ++p)
    for (Index q = 0; q < order; ++q)
      if (coeffs(p, q) != Complex{}) v += coeffs(p, q) * (powers[p].adjoint() * powers[q]);
  // Hermitian table gives Hermitian V up to rounding; symmetrize exactly.
  return 0.5 * (v + v.adjoint());
}

Hamiltonian hamiltonian(const FockContext& ctx, const HamiltonianSpec& spec) {
  const auto& p = ctx.params();
  const Index n = ctx.dim();
  const auto [pc, pcdag] = complex_momentum_ops(ctx);
  // Truncated b b^dag has 0 instead of N in its last diagonal entry. Restoring
  // it makes H the compression of the untruncated operator onto the cutoff
  // block, so the kinetic term keeps the weight P psi carries past level N - 1.
  ConfigOperator top = ConfigOperator::Zero(n, n);
  top(n - 1, n - 1) = static_cast<double>(n);
  const double c2 = 2.0 * p.hbar * p.hbar / p.theta;
  SuperOperator h = (1.0 / (2.0 * p.mass)) * (pcdag * pc + c2 * SuperOperator::right(top));
  ConfigOperator v = ConfigOperator::Zero(n, n);
  switch (spec.kind) {
    case SystemKind::free_particle:
      break;
    case SystemKind::oscillator:
      v = 0.5 * p.mass * p.omega * p.omega * (ctx.x1() * ctx.x1() + ctx.x2() * ctx.x2() + p.theta * top);
      break;
    case SystemKind::potential:
      if (!spec.potential_coeffs) throw ValidationError("potential Hamiltonian needs coefficients");
      v = normal_ordered_potential(ctx, *spec.potential_coeffs);
      break;
    case SystemKind::custom:
      throw UsageError("custom Hamiltonians are built with Hamiltonian::custom");
  }
  if (spec.kind != SystemKind::free_particle) h = h + SuperOperator::left(v);
  return Hamiltonian(ctx, spec, h.with_hermitian_flag(true), std::move(v));
}

PlaneWave plane_wave(const FockContext& ctx, Complex kappa) {
  const auto& p = ctx.params();
  const Index n = ctx.dim();
  if (n < 6) throw TruncationError("plane_wave needs a cutoff of at least 6");
  // b is nilpotent on the truncated space, so both series terminate.
  auto exp_nilpotent = [n](const ConfigOperator& a) {
    ConfigOperator sum = ConfigOperator::Identity(n, n);
    ConfigOperator term = ConfigOperator::Identity(n, n);
    for (Index k = 1; k < n; ++k) {
      term = term * a / static_cast<double>(k);
      sum += term;
    }
    return sum;
  };
  const ConfigOperator left = exp_nilpotent(kI * kappa * ctx.b());
  const ConfigOperator right = exp_nilpotent(kI * std::conj(kappa) * ctx.bdag());
  QuantumState psi(left * right);
  // Element (m, n) is a series over Fock levels k >= max(m, n) whose terms
  // shrink like (|kappa|^2 N)^j / (j!)^2 with j = k - max(m, n); the cutoff
  // drops every j >= N - max(m, n).
  const double x = std::norm(kappa) * static_cast<double>(n);
  Index margin = 1;
  double term = x;
  while (term >= 1e-12 && margin < n) {
    ++margin;
    term *= x / static_cast<double>(margin * margin);
  }
  const Index reliable = n - margin;
  if (reliable < n / 2)
    throw TruncationError("plane wave with |kappa| = " + std::to_string(std::abs(kappa)) +
                          " needs a larger cutoff than " + std::to_string(n) + " (truncation margin " +
                          std::to_string(margin) + " levels)");
  const double energy = p.hbar * p.hbar * std::norm(kappa) / (p.mass * p.theta);
  return {std::move(psi), energy, reliable};
}

namespace {
double block_residual(const ConfigOperator& residual, const ConfigOperator& psi, Index block) {
  return residual.topLeftCorner(block, block).norm() / psi.topLeftCorner(block, block).norm();
}
}  // namespace

double plane_wave_residual(const Hamiltonian& h, const PlaneWave& pw) {
  const QuantumState r = h.apply(pw.state) - Complex(pw.energy) * pw.state;
  return block_residual(r.op(), pw.state.op(), pw.reliable);
}

double plane_wave_momentum_residual(const FockContext& ctx, const PlaneWave& pw, Complex kappa) {
  const auto& p = ctx.params();
  const Complex eig = p.hbar * std::sqrt(2.0 / p.theta) * std::conj(kappa);
  const ConfigOperator r = -kI * p.hbar * std::sqrt(2.0 / p.theta) * (ctx.b() * pw.state.op() - pw.state.op() * ctx.b()) -
                           eig * pw.state.op();
  return block_residual(r, pw.state.op(), pw.reliable);
}

ContinuityReport continuity_report(const QuantumState& psi, const Hamiltonian& h) {
  if (h.kind() == SystemKind::custom)
    throw UsageError("continuity check needs a Hamiltonian of the form P^2/2m + V");
  const auto& ctx = h.context();
  const auto& p = ctx.params();
  const ConfigOperator& x1 = ctx.x1();
  const ConfigOperator& x2 = ctx.x2();
  auto comm = [](const ConfigOperator& a, const ConfigOperator& b) -> ConfigOperator {
    return a * b - b * a;
  };

  const ConfigOperator& s = psi.op();
  const ConfigOperator sd = s.adjoint();
  const ConfigOperator sdot = (-kI / p.hbar) * h.op().apply(s);
  const ConfigOperator rho_dot = sdot.adjoint() * s + sd * sdot;

  const Complex pref = p.hbar / (2.0 * p.mass * kI * p.theta * p.theta);
  const ConfigOperator j1 = pref * (sd * comm(x2, s) - comm(x2, sd) * s);
  const ConfigOperator j2 = pref * (sd * comm(x1, s) - comm(x1, sd) * s);

  ContinuityReport r;
  r.residual = (rho_dot - comm(x2, j1) - comm(x1, j2)).norm();
  r.trace_rho_dot = rho_dot.trace();
  r.rho_dot_norm = rho_dot.norm();
  return r;
}

double continuity_residual(const QuantumState& psi, const Hamiltonian& h) {
  return continuity_report(psi, h).residual;
}

}  // namespace ncqm
