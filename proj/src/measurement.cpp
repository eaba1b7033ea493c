#include "ncqm/measurement.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "ncqm/error.hpp"
#include "ncqm/parallel.hpp"

namespace ncqm {

namespace {

// u[n] = exp(-|z|^2 / 2) z^n / sqrt(n!)
CVector amplitudes(Complex z, Index count) {
  CVector u(count);
  if (count == 0) return u;
  u(0) = std::exp(-0.5 * std::norm(z));
  for (Index n = 1; n < count; ++n) u(n) = u(n - 1) * z / std::sqrt(static_cast<double>(n));
  return u;
}

Complex ipow(Complex base, Index e) {
  Complex out = 1.0;
  for (Index i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

StateSymbol::StateSymbol(CMatrix scaled) : scaled_(std::move(scaled)) {}

CMatrix StateSymbol::coefficients() const {
  CMatrix c = scaled_;
  for (Index a = 0; a < c.rows(); ++a)
    for (Index b = 0; b < c.cols(); ++b)
      c(a, b) /= std::exp(0.5 * (std::lgamma(a + 1.0) + std::lgamma(b + 1.0)));
  return c;
}

Complex StateSymbol::evaluate(Complex z) const {
  const CVector u = amplitudes(z, scaled_.cols());
  const CVector ubar = amplitudes(std::conj(z), scaled_.rows());
  return ubar.transpose() * scaled_ * u;
}

StateSymbol symbol(const QuantumState& psi) { return StateSymbol(psi.op()); }

StateSymbol deriv_z(const StateSymbol& sym) {
  const CMatrix& d = sym.scaled_coefficients();
  CMatrix out = CMatrix::Zero(d.rows() + 1, d.cols());
  for (Index a = 0; a <= d.rows(); ++a)
    for (Index b = 0; b < d.cols(); ++b) {
      Complex v{};
      if (a < d.rows() && b + 1 < d.cols()) v += std::sqrt(b + 1.0) * d(a, b + 1);
      if (a > 0) v -= std::sqrt(static_cast<double>(a)) * d(a - 1, b);
      out(a, b) = v;
    }
  return StateSymbol(std::move(out));
}

StateSymbol deriv_zbar(const StateSymbol& sym) {
  const CMatrix& d = sym.scaled_coefficients();
  CMatrix out = CMatrix::Zero(d.rows(), d.cols() + 1);
  for (Index a = 0; a < d.rows(); ++a)
    for (Index b = 0; b <= d.cols(); ++b) {
      Complex v{};
      if (b < d.cols() && a + 1 < d.rows()) v += std::sqrt(a + 1.0) * d(a + 1, b);
      if (b > 0) v -= std::sqrt(static_cast<double>(b)) * d(a, b - 1);
      out(a, b) = v;
    }
  return StateSymbol(std::move(out));
}

double coherent_tail_weight(Complex z, Index level) {
  // Poisson(|z|^2) tail, summed directly to avoid 1 - cdf cancellation.
  const double mu = std::norm(z);
  if (mu == 0.0) return level <= 0 ? 1.0 : 0.0;
  double log_term = -mu + level * std::log(mu) - std::lgamma(level + 1.0);
  double sum = 0.0;
  for (Index n = level;; ++n) {
    const double term = std::exp(log_term);
    sum += term;
    if (static_cast<double>(n) > mu && term <= 1e-18 * sum) break;
    if (n > level + 100000) break;
    log_term += std::log(mu) - std::log(n + 1.0);
  }
  return std::min(sum, 1.0);
}

QuantumState coherent_state_op(const FockContext& ctx, Complex z) {
  const Index n = ctx.dim();
  const double tail = coherent_tail_weight(z, n - 3);
  if (tail >= 1e-8) {
    std::ostringstream msg;
    msg << "coherent state at |z|^2 = " << std::norm(z) << " needs more than " << n
        << " Fock levels (weight " << tail << " at levels >= N - 3)";
    throw TruncationError(msg.str());
  }
  CVector ket = amplitudes(z, n);
  ket.normalize();
  return QuantumState(ket * ket.adjoint());
}

ProbabilitySeries::ProbabilitySeries(const QuantumState& psi, double theta, SeriesPolicy policy)
    : psi_(psi.op()), theta_(theta), policy_(policy) {
  if (!(theta > 0.0)) throw ConfigError("probability series needs theta > 0");
}

void ProbabilitySeries::reserve(double radius) const { basis(radius); }

// D(-z) spreads a vector supported below N over levels up to roughly
// (sqrt(N) + |z|)^2; the margin keeps the truncation edge out of reach.
std::shared_ptr<const ProbabilitySeries::Basis> ProbabilitySeries::basis(double radius) const {
  const double spread = std::sqrt(static_cast<double>(psi_.rows())) + radius;
  const Index need = std::max<Index>(psi_.rows() + 2, static_cast<Index>(std::ceil(spread * spread + 10.0 * spread + 20.0)));
  std::lock_guard<std::mutex> lock(mutex_);
  if (basis_ && basis_->dim >= need) return basis_;
  const Index dim = std::max(need, basis_ ? basis_->dim * 3 / 2 : Index{0});
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd off(dim - 1);
  for (Index n = 1; n < dim; ++n) off(n - 1) = std::sqrt(static_cast<double>(n));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw NumericalError("displacement eigensolver failed");
  auto fresh = std::make_shared<Basis>();
  fresh->dim = dim;
  fresh->values = solver.eigenvalues();
  fresh->vectors = solver.eigenvectors();
  basis_ = std::move(fresh);
  return basis_;
}

SeriesValue ProbabilitySeries::evaluate_capped(Complex z) const {
  const Index n = psi_.rows();
  const double rho = std::abs(z);
  const auto bs = basis(rho);
  // With z = rho e^{i phi}: D(z) = U Q exp(-i rho mu) Q^T U^dag, where
  // U = diag(e^{i (phi + pi/2) n}) and Q, mu diagonalize b + b^dag.
  const double phase = std::arg(z) + 0.5 * std::numbers::pi;
  const CVector coherent = amplitudes(z, n);
  const CVector r = psi_.transpose() * coherent.conjugate();  // r_n = <z|psi|n>
  CVector a(n);
  for (Index k = 0; k < n; ++k) a(k) = r(k) * std::polar(1.0, phase * static_cast<double>(k));
  CVector beta = bs->vectors.topRows(n).transpose() * a;
  for (Index j = 0; j < beta.size(); ++j) beta(j) *= std::polar(1.0, -rho * bs->values(j));

  const Index limit = std::min<Index>(bs->dim, policy_.max_terms);
  const CVector t = bs->vectors.topRows(limit) * beta;
  double sum = 0.0;
  int small = 0;
  for (Index k = 0; k < limit; ++k) {
    const double term = std::norm(t(k));
    sum += term;
    small = term <= policy_.rel_tol * sum ? small + 1 : 0;
    if (small >= policy_.consecutive)
      return {sum / (2.0 * std::numbers::pi * theta_), static_cast<int>(k + 1), true};
  }
  return {sum / (2.0 * std::numbers::pi * theta_), static_cast<int>(limit), false};
}

SeriesValue ProbabilitySeries::evaluate(Complex z) const {
  const SeriesValue v = evaluate_capped(z);
  if (!v.converged) {
    std::ostringstream msg;
    msg << "position series did not converge at z = (" << z.real() << ", " << z.imag()
        << ") after " << v.terms << " terms (partial sum " << v.value << ")";
    throw ConvergenceError(msg.str());
  }
  return v;
}

double position_probability(const FockContext& ctx, const QuantumState& psi, Complex z) {
  if (psi.dim() != ctx.dim()) throw UsageError("position_probability: cutoff mismatch");
  return ProbabilitySeries(psi, ctx.params().theta).evaluate(z).value;
}

GridSpec GridSpec::square(double half_width, Index points) {
  GridSpec g;
  g.x1_min = g.x2_min = -half_width;
  g.x1_max = g.x2_max = half_width;
  g.x1_points = g.x2_points = points;
  return g;
}

void GridSpec::validate() const {
  if (x1_points < 2 || x2_points < 2) throw ConfigError("grid needs at least 2 points per axis");
  if (!(x1_max > x1_min) || !(x2_max > x2_min)) throw ConfigError("grid ranges must be increasing");
  if (!std::isfinite(x1_min) || !std::isfinite(x1_max) || !std::isfinite(x2_min) ||
      !std::isfinite(x2_max))
    throw ConfigError("grid ranges must be finite");
}

ProbabilityGrid probability_grid(const FockContext& ctx, const QuantumState& psi,
                                 const GridSpec& spec) {
  spec.validate();
  if (psi.dim() != ctx.dim()) throw UsageError("probability_grid: cutoff mismatch");
  const double theta = ctx.params().theta;
  ProbabilityGrid g;
  g.spec = spec;
  const double h1 = (spec.x1_max - spec.x1_min) / static_cast<double>(spec.x1_points - 1);
  const double h2 = (spec.x2_max - spec.x2_min) / static_cast<double>(spec.x2_points - 1);
  for (Index i = 0; i < spec.x1_points; ++i) g.x1.push_back(spec.x1_min + h1 * static_cast<double>(i));
  for (Index j = 0; j < spec.x2_points; ++j) g.x2.push_back(spec.x2_min + h2 * static_cast<double>(j));
  g.values.assign(g.x1.size() * g.x2.size(), 0.0);

  const ProbabilitySeries series(psi, theta);
  double radius = 0.0;
  for (double a : {g.x1.front(), g.x1.back()})
    for (double b : {g.x2.front(), g.x2.back()})
      radius = std::max(radius, std::abs(to_complex_coordinate(a, b, theta)));
  series.reserve(radius);
  const double safe = static_cast<double>(ctx.dim()) / 3.0;
  std::vector<int> terms(g.x1.size(), 0);
  std::vector<std::size_t> unsafe(g.x1.size(), 0);
  std::vector<std::size_t> partial(g.x1.size(), 0);
  const SeriesPolicy policy;
  parallel_for(g.x1.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < g.x2.size(); ++j) {
      const Complex z = to_complex_coordinate(g.x1[i], g.x2[j], theta);
      const bool outside = std::norm(z) > safe;
      if (outside) ++unsafe[i];
      double value;
      try {
        const SeriesValue v = series.evaluate(z);
        value = v.value;
        terms[i] = std::max(terms[i], v.terms);
      } catch (const ConvergenceError&) {
        if (!outside) throw;
        // Terms are non-negative, so the capped sum is a lower bound.
        value = series.evaluate_capped(z).value;
        ++partial[i];
        terms[i] = policy.max_terms;
      }
      g.values[i * g.x2.size() + j] = value;
    }
  });
  g.max_terms_used = *std::max_element(terms.begin(), terms.end());

  double total = 0.0;
  for (std::size_t i = 0; i < g.x1.size(); ++i) {
    const double wi = (i == 0 || i + 1 == g.x1.size()) ? 0.5 : 1.0;
    for (std::size_t j = 0; j < g.x2.size(); ++j) {
      const double wj = (j == 0 || j + 1 == g.x2.size()) ? 0.5 : 1.0;
      total += wi * wj * g.values[i * g.x2.size() + j];
    }
  }
  g.normalization_estimate = total * h1 * h2;

  std::size_t flagged = 0;
  for (auto u : unsafe) flagged += u;
  if (flagged > 0) {
    std::ostringstream msg;
    msg << flagged << " of " << g.values.size() << " grid points have |z|^2 > N/3 = " << safe
        << "; values there may be affected by the Fock cutoff";
    g.warnings.push_back(msg.str());
  }
  std::size_t capped = 0;
  for (auto c : partial) capped += c;
  if (capped > 0) {
    std::ostringstream msg;
    msg << capped << " grid points outside |z|^2 <= N/3 did not converge within "
        << policy.max_terms << " terms; their values are partial sums (lower bounds)";
    g.warnings.push_back(msg.str());
  }
  return g;
}

namespace {

// <n|D(z)|k> for n < count from the closed form
//   n >= k: sqrt(k!/n!) z^(n-k) exp(-|z|^2/2) L_k^(n-k)(|z|^2)
//   n <  k: sqrt(n!/k!) (-zbar)^(k-n) exp(-|z|^2/2) L_n^(k-n)(|z|^2).
// The k-th derivative functional applied to |m><n| is <z|m> <n|D(z)|k> sqrt(k!).
CVector displacement_column(Complex z, int k, Index count) {
  const double x = std::norm(z);
  const double lr = std::log(std::abs(z));
  CVector col(count);
  for (Index n = 0; n < count; ++n) {
    const Index lo = std::min<Index>(n, k);
    const Index gap = std::abs(n - static_cast<Index>(k));
    double l_prev = 1.0, l = 1.0;  // L_0, then L_j by recurrence in the degree
    if (lo >= 1) l = 1.0 + static_cast<double>(gap) - x;
    for (Index j = 1; j < lo; ++j) {
      const double next = ((2.0 * j + 1.0 + gap - x) * l - (j + static_cast<double>(gap)) * l_prev) / (j + 1.0);
      l_prev = l;
      l = next;
    }
    double mag;
    if (gap == 0) {
      mag = std::exp(-0.5 * x);
    } else if (x == 0.0) {
      mag = 0.0;
    } else {
      mag = std::exp(0.5 * (std::lgamma(lo + 1.0) - std::lgamma(lo + gap + 1.0)) + gap * lr - 0.5 * x);
    }
    if (gap == 0 || mag == 0.0) {
      col(n) = mag * l;
      continue;
    }
    const Complex dir = n >= k ? z / std::abs(z) : -std::conj(z) / std::abs(z);
    col(n) = ipow(dir, gap) * (mag * l);
  }
  return col;
}

// sum_k conj(D(:, k)) conj(D(:, k))^dag until the series policy is met; the
// identity in exact arithmetic.
CMatrix derivative_gram(Complex z, Index count) {
  const SeriesPolicy policy;
  CMatrix gram = CMatrix::Zero(count, count);
  double trace = 0.0;
  int small = 0;
  for (int k = 0; k < policy.max_terms; ++k) {
    const CVector v = displacement_column(z, k, count).conjugate();
    gram += v * v.adjoint();
    const double term = v.squaredNorm();
    trace += term;
    small = term <= policy.rel_tol * trace ? small + 1 : 0;
    if (small >= policy.consecutive) return gram;
  }
  std::ostringstream msg;
  msg << "POVM derivative series did not converge at z = (" << z.real() << ", " << z.imag() << ")";
  throw ConvergenceError(msg.str());
}

CMatrix povm_kron(Complex z, Index count, double theta) {
  const CVector a = amplitudes(z, count);  // <m|z>
  const CMatrix left = a * a.adjoint();
  const CMatrix right = derivative_gram(z, count);
  const Index n2 = count * count;
  CMatrix out(n2, n2);
  const double pref = 1.0 / (2.0 * std::numbers::pi * theta);
  for (Index m = 0; m < count; ++m)
    for (Index mp = 0; mp < count; ++mp)
      out.block(m * count, mp * count, count, count) = (pref * left(m, mp)) * right;
  return out;
}

}  // namespace

CMatrix povm_matrix(const FockContext& ctx, Complex z) {
  return povm_kron(z, ctx.dim(), ctx.params().theta);
}

CMatrix povm_block(const FockContext& ctx, Complex z, Index levels) {
  if (levels < 1 || levels > ctx.dim()) throw UsageError("povm_block: levels out of range");
  return povm_kron(z, levels, ctx.params().theta);
}

double povm_expectation(const CMatrix& povm, const QuantumState& psi) {
  const CVector v = vectorize(psi);
  if (povm.rows() != v.size()) throw UsageError("povm_expectation: dimension mismatch");
  return (v.adjoint() * povm * v)(0, 0).real();
}

QuantumState post_measurement(const FockContext& ctx, const QuantumState& psi, Complex z) {
  if (psi.dim() != ctx.dim()) throw UsageError("post_measurement: cutoff mismatch");
  const CMatrix pi = povm_matrix(ctx, z);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(pi);
  if (solver.info() != Eigen::Success) throw NumericalError("post_measurement: eigensolver failed");
  const Eigen::VectorXd root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const CMatrix& u = solver.eigenvectors();
  const CVector v = vectorize(psi);
  const CVector out = u * (root.asDiagonal() * (u.adjoint() * v));
  const double p = out.squaredNorm();
  if (p < 1e-14) {
    std::ostringstream msg;
    msg << "outcome z = (" << z.real() << ", " << z.imag() << ") has probability density " << p
        << "; no post-measurement state";
    throw MeasurementError(msg.str());
  }
  return unvectorize(out / std::sqrt(p), ctx.dim());
}

}  // namespace ncqm
