#include "ncqm/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "ncqm/dynamics.hpp"
#include "ncqm/error.hpp"
#include "ncqm/measurement.hpp"
#include "ncqm/observables.hpp"
#include "ncqm/oscillator.hpp"

namespace ncqm {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "continuity", "symmetry", "povm",
                                              "oscillator-oracle"};
  return names;
}

QuantumState random_state(Index dim, Index support, std::mt19937_64& rng) {
  if (support < 1 || support > dim) throw UsageError("random_state: support out of range");
  std::normal_distribution<double> normal;
  ConfigOperator op = ConfigOperator::Zero(dim, dim);
  for (Index m = 0; m < support; ++m)
    for (Index n = 0; n < support; ++n) {
      const double re = normal(rng);
      const double im = normal(rng);
      op(m, n) = Complex(re, im);
    }
  return QuantumState(std::move(op)).normalized();
}

namespace {

void add(SuiteReport& r, std::string name, double value, double tol, std::string note = {}) {
  r.checks.push_back({std::move(name), value, tol, "max", value <= tol, std::move(note)});
}

void add_min(SuiteReport& r, std::string name, double value, double floor, std::string note = {}) {
  r.checks.push_back({std::move(name), value, floor, "min", value > floor, std::move(note)});
}

// ||A B psi - B A psi - c psi|| relative to the largest of the three pieces.
double commutator_residual(const SuperOperator& a, const SuperOperator& b, Complex c,
                           const QuantumState& psi) {
  const QuantumState ab = a.apply(b.apply(psi));
  const QuantumState ba = b.apply(a.apply(psi));
  const QuantumState cpsi = c * psi;
  const double scale = std::max({ab.norm(), ba.norm(), cpsi.norm(), 1e-300});
  return (ab - ba - cpsi).norm() / scale;
}

// ||x - y|| / max(||x||, ||y||)
double relative_gap(const QuantumState& x, const QuantumState& y) {
  const double scale = std::max({x.norm(), y.norm(), 1e-300});
  return (x - y).norm() / scale;
}

std::vector<QuantumState> sample_states(Index dim, Index support, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<QuantumState> out;
  for (int i = 0; i < count; ++i) out.push_back(random_state(dim, support, rng));
  return out;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

SuiteReport algebra_suite(const ModelParams& params, std::uint64_t seed) {
  SuiteReport r{"algebra", params, {}, {}};
  const FockContext ctx(params);
  const Index n = ctx.dim();
  const Index support = std::max<Index>(1, n - 3);
  const auto states = sample_states(n, support, seed, 3);
  const ObservableSet o = build_observables(ctx);
  const double th = params.theta;
  const double hb = params.hbar;
  struct Identity {
    const char* name;
    const SuperOperator* a;
    const SuperOperator* b;
    Complex c;
  };
  const Identity ids[] = {
      {"[X1,X2] = i theta", &o.X1, &o.X2, kI * th}, {"[X1,P1] = i hbar", &o.X1, &o.P1, kI * hb},
      {"[X2,P2] = i hbar", &o.X2, &o.P2, kI * hb},  {"[X1,P2] = 0", &o.X1, &o.P2, 0.0},
      {"[X2,P1] = 0", &o.X2, &o.P1, 0.0},           {"[P1,P2] = 0", &o.P1, &o.P2, 0.0},
      {"[B,B^dag] = 1", &o.B, &o.Bdag, 1.0},
  };
  for (const auto& id : ids) {
    double worst = 0.0;
    for (const auto& psi : states) worst = std::max(worst, commutator_residual(*id.a, *id.b, id.c, psi));
    add(r, id.name, worst, 1e-12, "states supported below level " + std::to_string(support));
  }
  double lz_forms = 0.0;
  const SuperOperator lz_comm = angular_momentum_commutator_form(ctx);
  for (const auto& psi : states) lz_forms = std::max(lz_forms, relative_gap(o.Lz.apply(psi), lz_comm.apply(psi)));
  add(r, "Lz composed = Lz commutator form", lz_forms, 1e-12);
  if (n <= 30) {
    double defect = 0.0;
    for (const SuperOperator* s : {&o.X1, &o.X2, &o.P1, &o.P2, &o.Lz})
      defect = std::max(defect, hermiticity_defect(*s));
    add(r, "X, P, Lz Hermitian (materialized)", defect, 1e-12);
  }
  return r;
}

SuiteReport continuity_suite(const ModelParams& params, std::uint64_t seed) {
  SuiteReport r{"continuity", params, {}, {}};
  const FockContext ctx(params);
  const Index n = ctx.dim();
  const Index support = std::max<Index>(1, n / 2);
  const auto states = sample_states(n, support, seed, 3);

  std::vector<std::pair<const char*, Hamiltonian>> hs;
  hs.emplace_back("free", hamiltonian(ctx, {SystemKind::free_particle, {}}));
  if (params.omega > 0.0) hs.emplace_back("oscillator", hamiltonian(ctx, {SystemKind::oscillator, {}}));
  for (const auto& [label, h] : hs) {
    double res = 0.0, tr = 0.0;
    for (const auto& psi : states) {
      const ContinuityReport c = continuity_report(psi, h);
      res = std::max(res, c.residual / psi.norm_sq());
      tr = std::max(tr, std::abs(c.trace_rho_dot));
    }
    add(r, std::string("continuity residual, ") + label + " H", res, 1e-8,
        "random states supported below level " + std::to_string(support));
    add(r, std::string("tr(rho_dot) = 0, ") + label + " H", tr, 1e-12);
  }

  if (params.omega > 0.0) {
    ModelParams gp = params;
    gp.cutoff = std::max(params.cutoff, min_ground_cutoff(params));
    const FockContext gctx(gp);
    const Hamiltonian h = hamiltonian(gctx, {SystemKind::oscillator, {}});
    add(r, "continuity residual, oscillator ground state", continuity_residual(ground_state(gctx), h),
        1e-10, "cutoff " + std::to_string(gp.cutoff));

    const SpectralDecomposition dec(hamiltonian(ctx, {SystemKind::oscillator, {}}).op());
    double drift = 0.0;
    for (int step = 1; step <= 20; ++step) {
      const double t = 0.5 * step;
      for (const auto& psi : states)
        drift = std::max(drift, std::abs(dec.evolve(psi, t, params.hbar).norm_sq() - 1.0));
    }
    add(r, "norm drift under evolve, t in [0, 10]", drift, 1e-10);
  }
  return r;
}

SuiteReport symmetry_suite(const ModelParams& params, std::uint64_t seed) {
  SuiteReport r{"symmetry", params, {}, {}};
  const FockContext ctx(params);
  const Index n = ctx.dim();
  const Index support = std::max<Index>(1, n - 5);
  const auto states = sample_states(n, support, seed, 3);
  const ObservableSet o = build_observables(ctx);
  const double k = params.theta / params.hbar;

  auto worst_over = [&](const std::function<double(const QuantumState&)>& f) {
    double w = 0.0;
    for (const auto& psi : states) w = std::max(w, f(psi));
    return w;
  };
  const double tol = 1e-10;
  add(r, "Theta X1 Theta^-1 = X1 + (theta/hbar) P2", worst_over([&](const QuantumState& psi) {
        return relative_gap(time_conjugate_apply(o.X1, psi), o.X1.apply(psi) + Complex(k) * o.P2.apply(psi));
      }), tol);
  add(r, "Theta X2 Theta^-1 = X2 - (theta/hbar) P1", worst_over([&](const QuantumState& psi) {
        return relative_gap(time_conjugate_apply(o.X2, psi), o.X2.apply(psi) - Complex(k) * o.P1.apply(psi));
      }), tol);
  add(r, "Theta P1 Theta^-1 = -P1", worst_over([&](const QuantumState& psi) {
        return relative_gap(time_conjugate_apply(o.P1, psi), Complex(-1.0) * o.P1.apply(psi));
      }), tol);
  add(r, "Theta P2 Theta^-1 = -P2", worst_over([&](const QuantumState& psi) {
        return relative_gap(time_conjugate_apply(o.P2, psi), Complex(-1.0) * o.P2.apply(psi));
      }), tol);
  add(r, "Theta Lz Theta^-1 = -Lz", worst_over([&](const QuantumState& psi) {
        return relative_gap(time_conjugate_apply(o.Lz, psi), Complex(-1.0) * o.Lz.apply(psi));
      }), tol);

  if (params.omega <= 0.0) {
    r.notes.push_back("omega = 0: oscillator relations skipped");
    return r;
  }
  const Hamiltonian h = hamiltonian(ctx, {SystemKind::oscillator, {}});
  add(r, "[Lz, H_osc] = 0", worst_over([&](const QuantumState& psi) {
        return commutator_residual(o.Lz, h.op(), 0.0, psi);
      }), tol);

  const LadderOps l = ladder_ops(ctx);
  const double hb = params.hbar;
  const struct {
    const char* name;
    const SuperOperator* a;
    double sign;
  } lz_rel[] = {{"[Lz, A1] = hbar A1", &l.a1, 1.0},
                {"[Lz, A1dag] = -hbar A1dag", &l.a1dag, -1.0},
                {"[Lz, A2dag] = hbar A2dag", &l.a2dag, 1.0},
                {"[Lz, A2] = -hbar A2", &l.a2, -1.0}};
  for (const auto& rel : lz_rel)
    add(r, rel.name, worst_over([&](const QuantumState& psi) {
          const QuantumState lhs = o.Lz.apply(rel.a->apply(psi)) - rel.a->apply(o.Lz.apply(psi));
          return relative_gap(lhs, Complex(rel.sign * hb) * rel.a->apply(psi));
        }), tol);

  const struct {
    const char* name;
    const SuperOperator* from;
    const SuperOperator* to;
  } swaps[] = {{"Theta A1 Theta^-1 = -A2", &l.a1, &l.a2},
               {"Theta A1dag Theta^-1 = -A2dag", &l.a1dag, &l.a2dag},
               {"Theta A2 Theta^-1 = -A1", &l.a2, &l.a1},
               {"Theta A2dag Theta^-1 = -A1dag", &l.a2dag, &l.a1dag}};
  for (const auto& sw : swaps)
    add(r, sw.name, worst_over([&](const QuantumState& psi) {
          return relative_gap(time_conjugate_apply(*sw.from, psi), Complex(-1.0) * sw.to->apply(psi));
        }), tol);

  const double breaking = worst_over([&](const QuantumState& psi) {
    const QuantumState d = time_conjugate_apply(h.op(), psi) - h.apply(psi);
    return d.norm() / psi.norm();
  });
  add_min(r, "time-reversal breaking ||(Theta H Theta^-1 - H) psi|| at theta = " + fmt(params.theta),
          breaking, 1e-8);
  ModelParams commutative = params;
  commutative.theta = 0.0;
  const double split0 = std::abs(energy(commutative, 1, 0) - energy(commutative, 0, 1));
  add(r, "time-reversal breaking E(1,0) - E(0,1) at theta = 0", split0, 1e-12,
      "analytic: theta = 0 has no finite Fock representation");
  const double split = energy(params, 1, 0) - energy(params, 0, 1);
  add_min(r, "time-reversal breaking E(1,0) - E(0,1) at theta = " + fmt(params.theta), split, 0.0);
  return r;
}

SuiteReport povm_suite(const ModelParams& params, std::uint64_t seed) {
  SuiteReport r{"povm", params, {}, {}};
  const FockContext ctx(params);
  const Index n = ctx.dim();
  const Index support = std::max<Index>(1, n / 2);
  const auto states = sample_states(n, support, seed, 3);
  const Complex points[] = {{0.0, 0.0}, {0.7, -0.4}, {-1.2, 0.9}, {0.3, 1.8}};

  double min_eig = 0.0, herm = 0.0, form = 0.0;
  for (const Complex z : points) {
    const CMatrix pi = povm_matrix(ctx, z);
    herm = std::max(herm, (pi - pi.adjoint()).cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(pi, Eigen::EigenvaluesOnly);
    min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
    for (const auto& psi : states) {
      const double a = povm_expectation(pi, psi);
      const double b = position_probability(ctx, psi, z);
      form = std::max(form, std::abs(a - b) / std::max(std::abs(b), 1e-300));
    }
  }
  add(r, "pi_z Hermitian", herm, 1e-12);
  add(r, "pi_z PSD: -min eigenvalue", -min_eig, 1e-12);
  add(r, "(psi|pi_z|psi) vs series, relative", form, 1e-10);

  double cov = 0.0;
  for (const double phi : {0.4, 1.3, -2.2})
    for (const Complex z : points)
      for (const auto& psi : states) {
        const double a = position_probability(ctx, rotate(psi, phi), z);
        const double b = position_probability(ctx, psi, std::polar(1.0, -phi) * z);
        cov = std::max(cov, std::abs(a - b) / std::max(b, 1e-300));
      }
  add(r, "P(rotate(psi, phi), z) = P(psi, e^{-i phi} z)", cov, 1e-10);

  // Resolution of the identity on span{|m><n| : m, n < 5}, trapezoid over
  // x in [-6 sqrt(theta), 6 sqrt(theta)]^2.
  const Index levels = std::min<Index>(5, n);
  const Index pts = 121;
  const double half = 6.0 * std::sqrt(params.theta);
  const double h = 2.0 * half / static_cast<double>(pts - 1);
  CMatrix acc = CMatrix::Zero(levels * levels, levels * levels);
  for (Index i = 0; i < pts; ++i)
    for (Index j = 0; j < pts; ++j) {
      const double w = ((i == 0 || i == pts - 1) ? 0.5 : 1.0) * ((j == 0 || j == pts - 1) ? 0.5 : 1.0);
      const Complex z = to_complex_coordinate(-half + h * static_cast<double>(i),
                                              -half + h * static_cast<double>(j), params.theta);
      acc += (w * h * h) * povm_block(ctx, z, levels);
    }
  const double ident = (acc - CMatrix::Identity(acc.rows(), acc.cols())).cwiseAbs().maxCoeff();
  add(r, "quadrature of pi_z = identity (levels < 5)", ident, 1e-3,
      "121 x 121 trapezoid over +-6 sqrt(theta)");

  double neg = 0.0;
  for (const auto& psi : states)
    for (const Complex z : points) neg = std::max(neg, -position_probability(ctx, psi, z));
  add(r, "position_probability >= 0", neg, 0.0);
  return r;
}

}  // namespace

Index oracle_cutoff(const ModelParams& params) {
  const Index need = static_cast<Index>(std::ceil(1.45 * static_cast<double>(min_ground_cutoff(params))));
  return std::max(params.cutoff, need);
}

std::vector<LevelMatch> match_oscillator_levels(const ModelParams& params, int max_quanta) {
  const FockContext ctx(params);
  const Index n = ctx.dim();
  const Hamiltonian h = hamiltonian(ctx, {SystemKind::oscillator, {}});
  const SpectralDecomposition dec(h.op());
  const auto& values = dec.eigenvalues();
  std::vector<LevelMatch> out;
  for (int n1 = 0; n1 <= max_quanta; ++n1)
    for (int n2 = 0; n1 + n2 <= max_quanta; ++n2) {
      LevelMatch m{n1, n2, energy(params, n1, n2), 0.0, 0.0, 0.0};
      const Index sector = n2 - n1;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < values.size(); ++k) {
        const Index idx = dec.block_members(k).front();
        if (idx % n - idx / n != sector) continue;
        const double gap = std::abs(values[k] - m.analytic);
        if (gap < best) {
          best = gap;
          m.numeric = values[k];
        }
      }
      m.rel_error = best / m.analytic;
      m.lz = params.hbar * static_cast<double>(sector);
      out.push_back(m);
    }
  return out;
}

namespace {

SuiteReport oracle_suite(const ModelParams& params, std::uint64_t seed) {
  SuiteReport r{"oscillator-oracle", params, {}, {}};
  if (params.omega <= 0.0) throw DegenerateOscillatorError("oscillator-oracle suite needs omega > 0");
  ModelParams p = params;
  p.cutoff = oracle_cutoff(params);
  if (p.cutoff != params.cutoff)
    r.notes.push_back("cutoff raised from " + std::to_string(params.cutoff) + " to " +
                      std::to_string(p.cutoff) + " so the ground state fits (needs >= " +
                      std::to_string(min_ground_cutoff(params)) + ")");
  r.params = p;
  const FockContext ctx(p);

  double worst = 0.0;
  for (const auto& m : match_oscillator_levels(p, 4)) worst = std::max(worst, m.rel_error);
  add(r, "numeric vs analytic spectrum, n1 + n2 <= 4 (relative)", worst, 1e-6);

  const BogoliubovTransform bt = bogoliubov_transform(p);
  add(r, "S g S^dag = D", bt.sgs_residual, 1e-12);
  add(r, "g eigenvalues vs lambda closed form (relative)", bt.lambda_residual, 1e-12);

  const QuantumState g = ground_state(ctx);
  const LadderOps l = ladder_ops(ctx);
  add(r, "A1 psi0 = 0", l.a1.apply(g).norm(), 1e-10);
  add(r, "A2 psi0 = 0", l.a2.apply(g).norm(), 1e-10);

  std::mt19937_64 rng(seed);
  const auto psi = random_state(p.cutoff, p.cutoff - 4, rng);
  double fock = 0.0;
  const SuperOperator* down[] = {&l.a1, &l.a2};
  const SuperOperator* up[] = {&l.a1dag, &l.a2dag};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      fock = std::max(fock, commutator_residual(*down[i], *up[j], i == j ? 1.0 : 0.0, psi));
  add(r, "[A_i, A_j^dag] = delta_ij", fock, 1e-10);

  double shape = 0.0;
  for (const double rad : {0.0, 0.5, 1.0, 1.5, 2.0})
    for (const double ang : {0.0, 1.1, 2.7}) {
      const Complex z = std::polar(rad, ang);
      const double closed = ground_probability(p, z);
      shape = std::max(shape, std::abs(position_probability(ctx, g, z) - closed) / closed);
    }
  add(r, "ground-state density: series vs closed form, |z| <= 2", shape, 1e-8);
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const ModelParams& params, std::uint64_t seed) {
  if (name == "algebra") return algebra_suite(params, seed);
  if (name == "continuity") return continuity_suite(params, seed);
  if (name == "symmetry") return symmetry_suite(params, seed);
  if (name == "povm") return povm_suite(params, seed);
  if (name == "oscillator-oracle") return oracle_suite(params, seed);
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace ncqm
