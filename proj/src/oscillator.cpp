#include "ncqm/oscillator.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "ncqm/error.hpp"
#include "ncqm/observables.hpp"

namespace ncqm {

void validate_oscillator(const ModelParams& p) {
  if (!std::isfinite(p.theta) || p.theta < 0.0)
    throw ConfigError("theta must be non-negative, got " + std::to_string(p.theta));
  if (!std::isfinite(p.hbar) || p.hbar <= 0.0)
    throw ConfigError("hbar must be positive, got " + std::to_string(p.hbar));
  if (!std::isfinite(p.mass) || p.mass <= 0.0)
    throw ConfigError("mass must be positive, got " + std::to_string(p.mass));
  if (p.omega == 0.0) throw DegenerateOscillatorError("oscillator needs omega > 0 (got omega = 0)");
  if (!std::isfinite(p.omega) || p.omega < 0.0)
    throw ConfigError("omega must be positive, got " + std::to_string(p.omega));
}

Lambdas lambdas(const ModelParams& p) {
  validate_oscillator(p);
  const double mw = p.mass * p.omega;
  const double a = mw * mw * p.theta;
  const double root = mw * std::hypot(2.0 * p.hbar, mw * p.theta);
  Lambdas l;
  l.lambda1 = 0.5 * (a + root);
  // lambda1 * lambda2 = hbar^2 m^2 omega^2; avoids cancellation in (root - a).
  l.lambda2 = p.hbar * p.hbar * mw * mw / l.lambda1;
  return l;
}

double alpha(const ModelParams& p) {
  const Lambdas l = lambdas(p);
  const double h2 = p.hbar * p.hbar;
  const double t1 = p.theta * l.lambda1 / h2;
  const double s = p.theta * l.lambda2 / h2;
  const double from_lambda1 = -std::log1p(t1);
  const double from_lambda2 = std::log1p(-s);
  // log1p(-s) amplifies the rounding of s by s / ((1 - s) |alpha|); the
  // comparison allows for that on top of the fixed 1e-12.
  const double mag = std::abs(from_lambda1);
  const double cond = mag > 0.0 ? s / ((1.0 - s) * mag) : 0.0;
  const double tol = std::max(1e-12, 16.0 * std::numeric_limits<double>::epsilon() * cond);
  if (std::abs(from_lambda1 - from_lambda2) > tol * std::max(mag, std::numeric_limits<double>::min())) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "alpha from lambda1 (" << from_lambda1 << ") and lambda2 (" << from_lambda2
        << ") disagree";
    throw ConsistencyError(msg.str());
  }
  return from_lambda1;
}

Normalizers normalizers(const ModelParams& p) {
  const Lambdas l = lambdas(p);
  const double h2 = p.hbar * p.hbar;
  return {l.lambda1 * (2.0 * l.lambda1 * p.theta / h2 + 4.0),
          l.lambda2 * (-2.0 * l.lambda2 * p.theta / h2 + 4.0)};
}

BogoliubovTransform bogoliubov_transform(const ModelParams& p) {
  const Lambdas l = lambdas(p);
  const double a = p.mass * p.mass * p.omega * p.omega * p.theta;
  const double b = p.hbar * p.mass * p.omega;
  BogoliubovTransform out;
  out.g.setZero();
  out.g(0, 1) = kI * a;
  out.g(1, 0) = -kI * a;
  out.g(0, 2) = kI * b;
  out.g(2, 0) = -kI * b;
  out.g(1, 3) = kI * b;
  out.g(3, 1) = -kI * b;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(out.g);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver failed on the 4x4 g matrix");
  // Ascending order is (-l1, -l2, l2, l1); reorder to (l1, -l1, l2, -l2).
  const int order[4] = {3, 0, 2, 1};
  Eigen::Matrix4cd sdag;
  for (int c = 0; c < 4; ++c) {
    const double ev = solver.eigenvalues()(order[c]);
    Eigen::Vector4cd v = solver.eigenvectors().col(order[c]);
    const double big = v.cwiseAbs().maxCoeff();
    for (int i = 0; i < 4; ++i)
      if (std::abs(v(i)) >= (1.0 - 1e-8) * big) {
        v *= std::conj(v(i)) / std::abs(v(i));
        break;
      }
    out.eigenvalues(c) = ev;
    sdag.col(c) = v / std::sqrt(std::abs(ev));
  }
  out.s = sdag.adjoint();

  Eigen::Matrix4cd d = Eigen::Matrix4cd::Zero();
  d.diagonal() << 1.0, -1.0, 1.0, -1.0;
  out.sgs_residual = (out.s * out.g * sdag - d).cwiseAbs().maxCoeff();
  const double expected[4] = {l.lambda1, -l.lambda1, l.lambda2, -l.lambda2};
  for (int c = 0; c < 4; ++c)
    out.lambda_residual = std::max(out.lambda_residual,
                                   std::abs(out.eigenvalues(c) - expected[c]) / std::abs(expected[c]));
  return out;
}

LadderOps ladder_ops(const FockContext& ctx) {
  const auto& p = ctx.params();
  const Lambdas l = lambdas(p);
  const Normalizers k = normalizers(p);
  const auto [x1, x2] = position_ops(ctx);
  const auto [p1, p2] = momentum_ops(ctx);
  const double c1 = l.lambda1 / p.hbar;
  const double c2 = l.lambda2 / p.hbar;
  const double n1 = 1.0 / std::sqrt(k.k1);
  const double n2 = 1.0 / std::sqrt(k.k2);
  LadderOps out;
  out.a1 = n1 * (-c1 * x1 + (-kI * c1) * x2 + (-kI) * p1 + p2);
  out.a1dag = n1 * (-c1 * x1 + (kI * c1) * x2 + kI * p1 + p2);
  out.a2 = n2 * (c2 * x1 + (-kI * c2) * x2 + kI * p1 + p2);
  out.a2dag = n2 * (c2 * x1 + (kI * c2) * x2 + (-kI) * p1 + p2);
  return out;
}

Index min_ground_cutoff(const ModelParams& p) {
  const double a = alpha(p);
  if (!(a < 0.0)) throw TruncationError("ground state is not normalizable on a truncated space at theta = 0");
  auto ok = [a](Index n) { return std::exp(2.0 * a * static_cast<double>(n - 1)) < 1e-12; };
  Index n = std::max<Index>(2, static_cast<Index>(std::floor(std::log(1e-12) / (2.0 * a))));
  while (n > 2 && ok(n - 1)) --n;
  while (!ok(n)) ++n;
  return n;
}

QuantumState ground_state(const FockContext& ctx) {
  const auto& p = ctx.params();
  const double a = alpha(p);
  const Index n = ctx.dim();
  if (!(std::exp(2.0 * a * static_cast<double>(n - 1)) < 1e-12)) {
    std::ostringstream msg;
    msg << "ground state needs cutoff >= " << min_ground_cutoff(p) << " at theta = " << p.theta
        << " (got " << n << ")";
    throw TruncationError(msg.str());
  }
  ConfigOperator op = ConfigOperator::Zero(n, n);
  for (Index k = 0; k < n; ++k) op(k, k) = std::exp(a * static_cast<double>(k));
  return QuantumState(std::move(op)).normalized();
}

QuantumState excited_state(const FockContext& ctx, int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw UsageError("excited_state: quantum numbers must be non-negative");
  const LadderOps l = ladder_ops(ctx);
  QuantumState psi = ground_state(ctx);
  for (int i = 0; i < n2; ++i) psi = l.a2dag.apply(psi);
  for (int i = 0; i < n1; ++i) psi = l.a1dag.apply(psi);
  return psi.normalized();
}

double energy(const ModelParams& p, int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw UsageError("energy: quantum numbers must be non-negative");
  const Lambdas l = lambdas(p);
  return (l.lambda1 * (2.0 * n1 + 1.0) + l.lambda2 * (2.0 * n2 + 1.0)) / (2.0 * p.mass);
}

namespace {

double gaussian_exponent(const ModelParams& p) {
  const double s = p.theta * lambdas(p).lambda2 / (p.hbar * p.hbar);
  return s * (2.0 - s);
}

}  // namespace

double ground_probability(const ModelParams& p, Complex z) {
  if (!(p.theta > 0.0)) throw ConfigError("ground_probability needs theta > 0");
  const double c = gaussian_exponent(p);
  return c / (2.0 * std::numbers::pi * p.theta) * std::exp(-c * std::norm(z));
}

double ground_probability_series(const ModelParams& p, Complex z) {
  if (!(p.theta > 0.0)) throw ConfigError("ground_probability needs theta > 0");
  const double s = p.theta * lambdas(p).lambda2 / (p.hbar * p.hbar);
  const double c = s * (2.0 - s);
  const double x = s * s * std::norm(z);
  double term = std::exp(-2.0 * s * std::norm(z));
  double sum = 0.0;
  int small = 0;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) term *= x / k;
    sum += term;
    small = term <= 1e-14 * sum ? small + 1 : 0;
    if (small >= 3) return c / (2.0 * std::numbers::pi * p.theta) * sum;
  }
  throw ConvergenceError("ground-state Gaussian series did not converge");
}

double ground_log_shape(const ModelParams& p, double r) {
  const Lambdas l = lambdas(p);
  const double h2 = p.hbar * p.hbar;
  const double s = p.theta * l.lambda2 / h2;
  // c / (2 theta) = (lambda2 / hbar^2)(2 - s) / 2
  return -(l.lambda2 / h2) * (2.0 - s) * 0.5 * r * r;
}

OscillatorSolution solve_oscillator(const FockContext& ctx) {
  const auto& p = ctx.params();
  return {lambdas(p), alpha(p), normalizers(p), ladder_ops(ctx)};
}

}  // namespace ncqm
