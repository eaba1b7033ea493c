#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncqm/checks.hpp"
#include "ncqm/dynamics.hpp"
#include "ncqm/error.hpp"
#include "ncqm/measurement.hpp"
#include "ncqm/observables.hpp"
#include "ncqm/oscillator.hpp"

namespace py = pybind11;
using namespace ncqm;

namespace {

Hamiltonian system_hamiltonian(const FockContext& ctx, const std::string& system) {
  if (system == "oscillator") return hamiltonian(ctx, {SystemKind::oscillator, {}});
  if (system == "free") return hamiltonian(ctx, {SystemKind::free_particle, {}});
  throw ConfigError("unknown system '" + system + "'");
}

py::dict spectrum(const ModelParams& p, std::size_t levels, const std::string& system) {
  const FockContext ctx(p);
  const SpectrumResult r = solve_spectrum(system_hamiltonian(ctx, system), levels);
  py::list states;
  for (const auto& s : r.eigenstates) states.append(s.op());
  py::dict out;
  out["energies"] = r.eigenvalues;
  out["lz"] = r.lz_expectations;
  out["edge_weights"] = r.edge_weights;
  out["states"] = states;
  return out;
}

py::dict grid(const ModelParams& p, const QuantumState& psi, double half_width, Index points) {
  const ProbabilityGrid g = probability_grid(FockContext(p), psi, GridSpec::square(half_width, points));
  py::dict out;
  out["x1"] = g.x1;
  out["x2"] = g.x2;
  const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> values =
      Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
          g.values.data(), static_cast<Index>(g.x1.size()), static_cast<Index>(g.x2.size()));
  out["P"] = values;
  out["normalization"] = g.normalization_estimate;
  out["warnings"] = g.warnings;
  return out;
}

py::dict suite(const std::string& name, const ModelParams& p, std::uint64_t seed) {
  const SuiteReport r = run_suite(name, p, seed);
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict d;
    d["name"] = c.name;
    d["value"] = c.value;
    d["tolerance"] = c.tolerance;
    d["kind"] = c.kind;
    d["passed"] = c.passed;
    d["note"] = c.note;
    checks.append(d);
  }
  py::dict out;
  out["suite"] = r.suite;
  out["passed"] = r.passed();
  out["checks"] = checks;
  out["notes"] = r.notes;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum mechanics on the non-commutative plane over a truncated Fock space";

  auto base = py::register_exception<Error>(m, "NcqmError", PyExc_RuntimeError);
  auto config = py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<DegenerateOscillatorError>(m, "DegenerateOscillatorError", config.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<MeasurementError>(m, "MeasurementError", base.ptr());

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double theta, double hbar, double mass, double omega, Index cutoff) {
             ModelParams p{theta, hbar, mass, omega, cutoff};
             p.validate();
             return p;
           }),
           py::arg("theta") = 0.1, py::arg("hbar") = 1.0, py::arg("mass") = 1.0, py::arg("omega") = 1.0,
           py::arg("cutoff") = 30)
      .def_readwrite("theta", &ModelParams::theta)
      .def_readwrite("hbar", &ModelParams::hbar)
      .def_readwrite("mass", &ModelParams::mass)
      .def_readwrite("omega", &ModelParams::omega)
      .def_readwrite("cutoff", &ModelParams::cutoff)
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(theta=" + std::to_string(p.theta) + ", hbar=" + std::to_string(p.hbar) +
               ", mass=" + std::to_string(p.mass) + ", omega=" + std::to_string(p.omega) +
               ", cutoff=" + std::to_string(p.cutoff) + ")";
      });

  py::class_<QuantumState>(m, "QuantumState")
      .def(py::init<ConfigOperator>(), py::arg("matrix"))
      .def_property_readonly("matrix", &QuantumState::op)
      .def_property_readonly("dim", &QuantumState::dim)
      .def("norm", &QuantumState::norm)
      .def("normalized", &QuantumState::normalized);

  m.def("ground_state", [](const ModelParams& p) { return ground_state(FockContext(p)); }, py::arg("params"));
  m.def("excited_state", [](const ModelParams& p, int n1, int n2) { return excited_state(FockContext(p), n1, n2); },
        py::arg("params"), py::arg("n1"), py::arg("n2"));
  m.def("coherent_state", [](const ModelParams& p, Complex z) { return coherent_state_op(FockContext(p), z); },
        py::arg("params"), py::arg("z"));
  m.def(
      "plane_wave",
      [](const ModelParams& p, Complex kappa) {
        const FockContext ctx(p);
        const PlaneWave pw = plane_wave(ctx, kappa);
        const double residual = plane_wave_residual(hamiltonian(ctx, {SystemKind::free_particle, {}}), pw);
        return py::make_tuple(pw.state, pw.energy, pw.reliable, residual);
      },
      py::arg("params"), py::arg("kappa"),
      "Returns (state, energy, reliable_levels, eigen_residual on the reliable block).");

  m.def("spectrum", &spectrum, py::arg("params"), py::arg("levels") = 10, py::arg("system") = "oscillator");
  m.def(
      "evolve",
      [](const ModelParams& p, const QuantumState& psi, double t, const std::string& system) {
        return evolve(psi, system_hamiltonian(FockContext(p), system), t);
      },
      py::arg("params"), py::arg("state"), py::arg("t"), py::arg("system") = "oscillator");
  m.def(
      "lz_expectation",
      [](const ModelParams& p, const QuantumState& psi) {
        return hs_inner(psi, angular_momentum_commutator_form(FockContext(p)).apply(psi)).real() / psi.norm_sq();
      },
      py::arg("params"), py::arg("state"));

  m.def(
      "probability",
      [](const ModelParams& p, const QuantumState& psi, double x1, double x2) {
        return position_probability(FockContext(p), psi, to_complex_coordinate(x1, x2, p.theta));
      },
      py::arg("params"), py::arg("state"), py::arg("x1"), py::arg("x2"));
  m.def("probability_grid", &grid, py::arg("params"), py::arg("state"), py::arg("half_width"),
        py::arg("points") = 81);

  m.def("suite_names", &suite_names);
  m.def("run_suite", &suite, py::arg("name"), py::arg("params"), py::arg("seed") = 1);

  m.def(
      "lambdas",
      [](const ModelParams& p) {
        const Lambdas l = lambdas(p);
        return py::make_tuple(l.lambda1, l.lambda2);
      },
      py::arg("params"));
  m.def("alpha", &alpha, py::arg("params"));
  m.def("energy", &energy, py::arg("params"), py::arg("n1"), py::arg("n2"));
  m.def("min_ground_cutoff", &min_ground_cutoff, py::arg("params"));
  m.def(
      "ground_probability",
      [](const ModelParams& p, double x1, double x2) {
        return ground_probability(p, to_complex_coordinate(x1, x2, p.theta));
      },
      py::arg("params"), py::arg("x1"), py::arg("x2"));
}
