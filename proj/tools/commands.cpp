#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "ncqm/checks.hpp"
#include "ncqm/dynamics.hpp"
#include "ncqm/error.hpp"
#include "ncqm/observables.hpp"
#include "ncqm/oscillator.hpp"

namespace ncqm::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ConfigError("not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  const double v = parse_double(s);
  if (v != std::floor(v) || v < 0 || v > 1e6) throw ConfigError("not a non-negative integer: '" + s + "'");
  return static_cast<int>(v);
}

json params_json(const ModelParams& p) {
  return {{"theta", p.theta}, {"hbar", p.hbar}, {"mass", p.mass}, {"omega", p.omega}, {"cutoff", p.cutoff}};
}

Complex complex_from_json(const json& v, const char* key) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_string()) return parse_complex(v.get<std::string>());
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ConfigError(std::string("'") + key + "' must be a number, [re, im] or \"re,im\"");
}

std::pair<double, double> range_from_json(const json& v, const char* key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ConfigError(std::string("grid '") + key + "' must be [min, max]");
  return {v[0].get<double>(), v[1].get<double>()};
}

GridSpec grid_from_json(const json& g, Index default_points) {
  if (!g.is_object()) throw ConfigError("'grid' must be an object");
  GridSpec spec;
  Index n1 = default_points, n2 = default_points;
  if (g.contains("points")) {
    const json& p = g["points"];
    if (p.is_number_integer()) {
      n1 = n2 = p.get<Index>();
    } else if (p.is_array() && p.size() == 2) {
      n1 = p[0].get<Index>();
      n2 = p[1].get<Index>();
    } else {
      throw ConfigError("grid 'points' must be an integer or [n1, n2]");
    }
  }
  if (g.contains("half_width")) {
    spec = GridSpec::square(g["half_width"].get<double>(), n1);
  } else {
    if (!g.contains("x1") || !g.contains("x2")) throw ConfigError("grid needs 'half_width' or both 'x1' and 'x2'");
    std::tie(spec.x1_min, spec.x1_max) = range_from_json(g["x1"], "x1");
    std::tie(spec.x2_min, spec.x2_max) = range_from_json(g["x2"], "x2");
  }
  spec.x1_points = n1;
  spec.x2_points = n2;
  for (const auto& [key, _] : g.items())
    if (key != "points" && key != "half_width" && key != "x1" && key != "x2")
      throw ConfigError("unknown grid key '" + key + "'");
  spec.validate();
  return spec;
}

std::string default_format(const RunConfig& cfg) {
  if (!cfg.format.empty()) return cfg.format;
  return cfg.command == "probability" ? "csv" : "json";
}

double expectation(const SuperOperator& s, const QuantumState& psi) {
  return hs_inner(psi, s.apply(psi)).real() / psi.norm_sq();
}

Hamiltonian system_hamiltonian(const FockContext& ctx, const std::string& system) {
  if (system == "oscillator") return hamiltonian(ctx, {SystemKind::oscillator, {}});
  if (system == "free") return hamiltonian(ctx, {SystemKind::free_particle, {}});
  throw ConfigError("unknown system '" + system + "' (expected oscillator or free)");
}

// Closest analytic level in the Lz sector d = n2 - n1.
struct AnalyticMatch {
  int n1 = 0, n2 = 0;
  double energy = 0.0;
};

AnalyticMatch closest_level(const ModelParams& p, int sector, double e) {
  AnalyticMatch best{0, 0, std::numeric_limits<double>::infinity()};
  for (int n1 = std::max(0, -sector); n1 < 4 * static_cast<int>(p.cutoff) + 8; ++n1) {
    const int n2 = n1 + sector;
    const double a = energy(p, n1, n2);
    if (std::abs(a - e) < std::abs(best.energy - e)) best = {n1, n2, a};
    if (a > e && a > best.energy) break;
  }
  return best;
}

json spectrum_commutative(const RunConfig& cfg) {
  const ModelParams& p = cfg.params;
  std::vector<AnalyticMatch> all;
  const int top = static_cast<int>(cfg.levels) + 1;
  for (int n1 = 0; n1 <= top; ++n1)
    for (int n2 = 0; n1 + n2 <= top; ++n2) all.push_back({n1, n2, energy(p, n1, n2)});
  std::stable_sort(all.begin(), all.end(), [](const AnalyticMatch& a, const AnalyticMatch& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return (a.n2 - a.n1) < (b.n2 - b.n1);
  });
  json levels = json::array();
  for (std::size_t k = 0; k < cfg.levels && k < all.size(); ++k) {
    const auto& a = all[k];
    levels.push_back({{"index", k}, {"energy", a.energy}, {"lz", p.hbar * (a.n2 - a.n1)},
                      {"edge_weight", 0.0}, {"boundary", false}, {"n1", a.n1}, {"n2", a.n2},
                      {"analytic", a.energy}, {"rel_error", 0.0}});
  }
  return {{"command", "spectrum"}, {"system", "oscillator"}, {"params", params_json(p)},
          {"source", "analytic"}, {"levels", levels},
          {"warnings", json::array({"theta = 0 has no finite Fock representation; levels are analytic"})}};
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw ConfigError("expected 're' or 're,im', got '" + text + "'");
}

StateSelector StateSelector::parse(const std::string& text) {
  StateSelector s;
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "ground") {
    s.kind = Kind::ground;
  } else if (kind == "excited") {
    const auto parts = split(arg, ',');
    if (parts.size() != 2) throw ConfigError("excited state needs 'excited:n1,n2'");
    s.kind = Kind::excited;
    s.n1 = parse_int(parts[0]);
    s.n2 = parse_int(parts[1]);
  } else if (kind == "coherent" || kind == "plane") {
    if (arg.empty()) throw ConfigError(kind + " state needs '" + kind + ":re[,im]'");
    s.kind = kind == "coherent" ? Kind::coherent : Kind::plane;
    s.value = parse_complex(arg);
  } else if (kind == "file") {
    if (arg.empty()) throw ConfigError("file state needs 'file:path'");
    s.kind = Kind::file;
    s.path = arg;
  } else {
    throw ConfigError("unknown state '" + text + "' (ground, excited:n1,n2, coherent:z, plane:kappa, file:path)");
  }
  if (kind == "ground" && !arg.empty()) throw ConfigError("ground state takes no argument");
  return s;
}

std::string StateSelector::to_string() const {
  auto c = [](Complex v) { return num(v.real()) + "," + num(v.imag()); };
  switch (kind) {
    case Kind::ground: return "ground";
    case Kind::excited: return "excited:" + std::to_string(n1) + "," + std::to_string(n2);
    case Kind::coherent: return "coherent:" + c(value);
    case Kind::plane: return "plane:" + c(value);
    case Kind::file: return "file:" + path;
  }
  return {};
}

RunConfig apply_config(const json& doc, RunConfig cfg) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  if (!doc.contains("schema")) throw ConfigError("config is missing 'schema'");
  if (!doc["schema"].is_number_integer() || doc["schema"].get<int>() != 1)
    throw ConfigError("unsupported config schema " + doc["schema"].dump() + " (expected 1)");
  try {
    for (const auto& [key, v] : doc.items()) {
      if (key == "schema") continue;
      if (key == "theta") cfg.params.theta = v.get<double>();
      else if (key == "hbar") cfg.params.hbar = v.get<double>();
      else if (key == "mass") cfg.params.mass = v.get<double>();
      else if (key == "omega") cfg.params.omega = v.get<double>();
      else if (key == "cutoff") cfg.params.cutoff = v.get<Index>();
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (key == "out") cfg.out = v.get<std::string>();
      else if (key == "format") cfg.format = v.get<std::string>();
      else if (key == "system") cfg.system = v.get<std::string>();
      else if (key == "kappa") cfg.kappa = complex_from_json(v, "kappa");
      else if (key == "levels") cfg.levels = v.get<std::size_t>();
      else if (key == "state") cfg.state = StateSelector::parse(v.get<std::string>());
      else if (key == "grid") cfg.grid = grid_from_json(v, cfg.grid_points);
      else if (key == "grid_points") cfg.grid_points = v.get<Index>();
      else if (key == "time") cfg.time = v.get<double>();
      else if (key == "steps") cfg.steps = v.get<int>();
      else if (key == "state_out") cfg.state_out = v.get<std::string>();
      else if (key == "suite") cfg.suite = v.get<std::string>();
      else throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return apply_config(doc, std::move(base));
}

double default_half_width(const QuantumState& psi, double theta) {
  const Index n = psi.dim();
  double mean = 0.0;
  for (Index m = 0; m < n; ++m) mean += static_cast<double>(m) * psi.op().row(m).squaredNorm();
  mean /= psi.norm_sq();
  const double r2 = std::log(1e6) * (1.0 + mean);
  return std::sqrt(2.0 * theta * r2);
}

json state_to_json(const QuantumState& psi) {
  const Index n = psi.dim();
  json re = json::array(), im = json::array();
  for (Index m = 0; m < n; ++m) {
    json r = json::array(), i = json::array();
    for (Index k = 0; k < n; ++k) {
      r.push_back(psi(m, k).real());
      i.push_back(psi(m, k).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(i));
  }
  return {{"schema", 1}, {"dim", n}, {"re", re}, {"im", im}};
}

QuantumState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open state file '" + path + "'");
  try {
    const json doc = json::parse(in);
    if (doc.value("schema", 0) != 1) throw ConfigError("state file '" + path + "' needs schema 1");
    const Index n = doc.at("dim").get<Index>();
    const json& re = doc.at("re");
    const json& im = doc.at("im");
    if (n < 1 || re.size() != static_cast<std::size_t>(n) || im.size() != static_cast<std::size_t>(n))
      throw ConfigError("state file '" + path + "': re/im must be dim x dim");
    ConfigOperator op(n, n);
    for (Index m = 0; m < n; ++m) {
      if (re[m].size() != static_cast<std::size_t>(n) || im[m].size() != static_cast<std::size_t>(n))
        throw ConfigError("state file '" + path + "': re/im must be dim x dim");
      for (Index k = 0; k < n; ++k) op(m, k) = Complex(re[m][k].get<double>(), im[m][k].get<double>());
    }
    return QuantumState(std::move(op));
  } catch (const json::exception& e) {
    throw ConfigError("state file '" + path + "': " + e.what());
  }
}

QuantumState build_state(const FockContext& ctx, const StateSelector& sel) {
  switch (sel.kind) {
    case StateSelector::Kind::ground: return ground_state(ctx);
    case StateSelector::Kind::excited: return excited_state(ctx, sel.n1, sel.n2);
    case StateSelector::Kind::coherent: return coherent_state_op(ctx, sel.value);
    case StateSelector::Kind::plane: return plane_wave(ctx, sel.value).state;
    case StateSelector::Kind::file: {
      QuantumState psi = read_state_file(sel.path);
      if (psi.dim() != ctx.dim())
        throw ConfigError("state file has dim " + std::to_string(psi.dim()) + " but cutoff is " +
                          std::to_string(ctx.dim()));
      return psi;
    }
  }
  throw UsageError("unhandled state selector");
}

json run_spectrum(const RunConfig& cfg) {
  const ModelParams& p = cfg.params;
  if (cfg.system == "free") {
    const FockContext ctx(p);
    const Hamiltonian h = system_hamiltonian(ctx, "free");
    const PlaneWave pw = plane_wave(ctx, cfg.kappa);
    return {{"command", "spectrum"},
            {"system", "free"},
            {"params", params_json(p)},
            {"kappa", {cfg.kappa.real(), cfg.kappa.imag()}},
            {"levels", json::array({{{"index", 0},
                                     {"energy", pw.energy},
                                     {"lz", expectation(angular_momentum_commutator_form(ctx), pw.state)},
                                     {"edge_weight", support_weight(pw.state, std::max<Index>(1, p.cutoff - 5))},
                                     {"reliable_levels", pw.reliable},
                                     {"eigen_residual", plane_wave_residual(h, pw)}}})},
            {"warnings", json::array({"plane waves are not normalizable; eigen_residual is measured on the first " +
                                      std::to_string(pw.reliable) + " Fock levels"})}};
  }
  if (cfg.system != "oscillator") throw ConfigError("unknown system '" + cfg.system + "'");
  validate_oscillator(p);
  if (p.theta == 0.0) return spectrum_commutative(cfg);

  const FockContext ctx(p);
  const Hamiltonian h = system_hamiltonian(ctx, "oscillator");
  const SpectrumResult res = solve_spectrum(h, cfg.levels);
  json levels = json::array();
  int boundary = 0;
  for (std::size_t k = 0; k < res.eigenvalues.size(); ++k) {
    const double e = res.eigenvalues[k];
    const double lz = res.lz_expectations[k];
    const int sector = static_cast<int>(std::lround(lz / p.hbar));
    const AnalyticMatch a = closest_level(p, sector, e);
    const bool edge = res.edge_weights[k] > 1e-6;
    boundary += edge;
    levels.push_back({{"index", k}, {"energy", e}, {"lz", lz}, {"edge_weight", res.edge_weights[k]},
                      {"boundary", edge}, {"n1", a.n1}, {"n2", a.n2}, {"analytic", a.energy},
                      {"rel_error", std::abs(e - a.energy) / a.energy}});
  }
  json warnings = json::array();
  if (boundary > 0)
    warnings.push_back(std::to_string(boundary) + " of " + std::to_string(res.eigenvalues.size()) +
                       " levels carry more than 1e-6 of their weight within 5 levels of the cutoff");
  return {{"command", "spectrum"}, {"system", "oscillator"}, {"params", params_json(p)},
          {"source", "numeric"},   {"levels", levels},       {"warnings", warnings}};
}

ProbabilityGrid run_probability(const RunConfig& cfg, const QuantumState& psi) {
  const FockContext ctx(cfg.params);
  const GridSpec spec = cfg.grid ? *cfg.grid
                                 : GridSpec::square(default_half_width(psi, cfg.params.theta), cfg.grid_points);
  return probability_grid(ctx, psi, spec);
}

std::string grid_csv(const ProbabilityGrid& grid) {
  std::string s = "# row-major over (x1, x2), x2 fastest\nx1,x2,P\n";
  for (std::size_t i = 0; i < grid.x1.size(); ++i)
    for (std::size_t j = 0; j < grid.x2.size(); ++j)
      s += num(grid.x1[i]) + "," + num(grid.x2[j]) + "," + num(grid.at(i, j)) + "\n";
  return s;
}

json grid_sidecar(const RunConfig& cfg, const ProbabilityGrid& grid) {
  const GridSpec& g = grid.spec;
  return {{"command", "probability"},
          {"params", params_json(cfg.params)},
          {"state", cfg.state.to_string()},
          {"grid",
           {{"x1", {g.x1_min, g.x1_max}}, {"x2", {g.x2_min, g.x2_max}}, {"points", {g.x1_points, g.x2_points}}}},
          {"ordering", "row-major, x2 fastest"},
          {"normalization", grid.normalization_estimate},
          {"max_terms_used", grid.max_terms_used},
          {"warnings", grid.warnings}};
}

json run_evolve(const RunConfig& cfg) {
  if (cfg.steps < 1) throw ConfigError("steps must be >= 1");
  if (!std::isfinite(cfg.time)) throw ConfigError("time must be finite");
  const ModelParams& p = cfg.params;
  const FockContext ctx(p);
  const Hamiltonian h = system_hamiltonian(ctx, cfg.system);
  const QuantumState psi0 = build_state(ctx, cfg.state).normalized();
  const SpectralDecomposition dec(h.op());
  const ObservableSet o = build_observables(ctx);
  const SuperOperator lz = angular_momentum_commutator_form(ctx);
  json rows = json::array();
  QuantumState psi = psi0;
  for (int k = 0; k <= cfg.steps; ++k) {
    const double t = cfg.time * k / cfg.steps;
    psi = dec.evolve(psi0, t, p.hbar);
    rows.push_back({{"t", t},
                    {"norm", psi.norm()},
                    {"energy", expectation(h.op(), psi)},
                    {"lz", expectation(lz, psi)},
                    {"x1", expectation(o.X1, psi)},
                    {"x2", expectation(o.X2, psi)}});
  }
  if (!cfg.state_out.empty()) {
    std::ofstream f(cfg.state_out);
    if (!f) throw ConfigError("cannot write '" + cfg.state_out + "'");
    f << state_to_json(psi).dump() << "\n";
  }
  return {{"command", "evolve"},
          {"system", cfg.system},
          {"params", params_json(p)},
          {"state", cfg.state.to_string()},
          {"edge_weight", support_weight(psi0, std::max<Index>(1, p.cutoff - 5))},
          {"samples", rows}};
}

json run_check(const RunConfig& cfg) {
  std::vector<std::string> names;
  json notes = json::array();
  if (cfg.suite == "all") {
    for (const auto& n : suite_names()) {
      if (n == "oscillator-oracle" && cfg.params.omega == 0.0) {
        notes.push_back("oscillator-oracle skipped: omega = 0");
        continue;
      }
      names.push_back(n);
    }
  } else {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), cfg.suite) == known.end())
      throw UsageError("unknown suite '" + cfg.suite + "'");
    names.push_back(cfg.suite);
  }
  json suites = json::array();
  bool ok = true;
  for (const auto& n : names) {
    const SuiteReport r = run_suite(n, cfg.params, cfg.seed);
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance},
                        {"kind", c.kind}, {"passed", c.passed}, {"note", c.note}});
    suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"params", params_json(r.params)},
                      {"checks", checks}, {"notes", r.notes}});
    ok = ok && r.passed();
  }
  return {{"command", "check"}, {"seed", cfg.seed}, {"passed", ok}, {"suites", suites}, {"notes", notes}};
}

namespace {

std::string spectrum_csv(const json& report) {
  const bool free = report["system"] == "free";
  std::string s = free ? "index,energy,lz,edge_weight,reliable_levels,eigen_residual\n"
                       : "index,energy,lz,edge_weight,boundary,n1,n2,analytic,rel_error\n";
  for (const auto& l : report["levels"]) {
    s += std::to_string(l["index"].get<std::size_t>()) + "," + num(l["energy"]) + "," + num(l["lz"]) + "," +
         num(l["edge_weight"]);
    if (free) {
      s += "," + std::to_string(l["reliable_levels"].get<Index>()) + "," + num(l["eigen_residual"]);
    } else {
      s += std::string(",") + (l["boundary"].get<bool>() ? "1" : "0") + "," +
           std::to_string(l["n1"].get<int>()) + "," + std::to_string(l["n2"].get<int>()) + "," +
           num(l["analytic"]) + "," + num(l["rel_error"]);
    }
    s += "\n";
  }
  return s;
}

std::string evolve_csv(const json& report) {
  std::string s = "t,norm,energy,lz,x1,x2\n";
  for (const auto& r : report["samples"])
    s += num(r["t"]) + "," + num(r["norm"]) + "," + num(r["energy"]) + "," + num(r["lz"]) + "," +
         num(r["x1"]) + "," + num(r["x2"]) + "\n";
  return s;
}

std::string check_csv(const json& report) {
  std::string s = "suite,check,value,tolerance,kind,passed\n";
  for (const auto& suite : report["suites"])
    for (const auto& c : suite["checks"])
      s += suite["suite"].get<std::string>() + ",\"" + c["name"].get<std::string>() + "\"," + num(c["value"]) +
           "," + num(c["tolerance"]) + "," + c["kind"].get<std::string>() + "," +
           (c["passed"].get<bool>() ? "1" : "0") + "\n";
  return s;
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + cfg.out + "'");
  f << text;
}

void report_warnings(const json& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w.get<std::string>() << "\n";
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string format = default_format(cfg);
  if (format != "json" && format != "csv") throw ConfigError("unknown format '" + format + "' (json or csv)");
  // The commutative limit of the oscillator spectrum is analytic and skips the Fock checks.
  if (!(cfg.command == "spectrum" && cfg.system == "oscillator" && cfg.params.theta == 0.0))
    cfg.params.validate();

  if (cfg.command == "spectrum") {
    const json r = run_spectrum(cfg);
    report_warnings(r["warnings"], err);
    emit(format == "csv" ? spectrum_csv(r) : r.dump(2) + "\n", cfg, out);
    return kOk;
  }
  if (cfg.command == "probability") {
    const FockContext ctx(cfg.params);
    const QuantumState psi = build_state(ctx, cfg.state);
    const ProbabilityGrid grid = run_probability(cfg, psi);
    const json meta = grid_sidecar(cfg, grid);
    report_warnings(meta["warnings"], err);
    if (format == "csv") {
      emit(grid_csv(grid), cfg, out);
      if (!cfg.out.empty()) {
        std::ofstream f(cfg.out + ".json");
        if (!f) throw ConfigError("cannot write '" + cfg.out + ".json'");
        f << meta.dump(2) << "\n";
      }
    } else {
      json doc = meta;
      doc["x1"] = grid.x1;
      doc["x2"] = grid.x2;
      doc["P"] = grid.values;
      emit(doc.dump(2) + "\n", cfg, out);
    }
    return kOk;
  }
  if (cfg.command == "evolve") {
    const json r = run_evolve(cfg);
    emit(format == "csv" ? evolve_csv(r) : r.dump(2) + "\n", cfg, out);
    return kOk;
  }
  if (cfg.command == "check") {
    const json r = run_check(cfg);
    emit(format == "csv" ? check_csv(r) : r.dump(2) + "\n", cfg, out);
    for (const auto& s : r["suites"])
      for (const auto& c : s["checks"])
        if (!c["passed"].get<bool>())
          err << "FAIL " << s["suite"].get<std::string>() << ": " << c["name"].get<std::string>() << " = "
              << num(c["value"]) << " (" << c["kind"].get<std::string>() << " " << num(c["tolerance"]) << ")\n";
    return r["passed"].get<bool>() ? kOk : kCheckFailed;
  }
  throw ConfigError("unknown command '" + cfg.command + "'");
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace ncqm::cli
