#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mshydro/cli.hpp"
#include "mshydro/coefficients.hpp"
#include "mshydro/dispersion.hpp"
#include "mshydro/hydro_spectral.hpp"
#include "mshydro/initial_condition.hpp"
#include "mshydro/moment_reference.hpp"
#include "mshydro/secularity.hpp"
#include "mshydro/selftest.hpp"
#include "mshydro/velocity_space.hpp"

namespace py = pybind11;
using namespace mshydro;

namespace {

ModelId model_of(const std::string& name) {
  const auto m = parse_model(name);
  if (!m) throw DomainError("unknown model '" + name + "'");
  return *m;
}

Branch branch_of(const std::string& name) {
  for (Branch b : {Branch::SoundPlus, Branch::SoundMinus, Branch::Entropy, Branch::ShearRelaxation,
                   Branch::HeatRelaxation})
    if (to_string(b) == name) return b;
  throw DomainError("unknown branch '" + name + "'");
}

EigenfunctionId eigenfunction_of(const std::string& name) {
  using E = EigenfunctionId;
  for (E id : {E::Psi01, E::Psi02, E::Psi11, E::Psi03, E::Psi20, E::Psi12, E::One, E::Cx, E::CsqHalf})
    if (name == to_string(id)) return id;
  throw DomainError("unknown eigenfunction '" + name + "'");
}

HydroState state_of(std::vector<double> u, std::vector<double> p, std::vector<double> s) {
  return HydroState(std::move(u), std::move(p), std::move(s));
}

py::tuple fields(const HydroState& h) { return py::make_tuple(h.u(), h.p(), h.s()); }

std::vector<std::string> exact_pair(const Rational& a, const Rational& b) { return {to_string(a), to_string(b)}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linearized-Boltzmann hydrodynamic model hierarchy (native core)";

  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<BranchCollisionError>(m, "BranchCollisionError", PyExc_RuntimeError);
  py::register_exception<UnsupportedInputError>(m, "UnsupportedInputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("inner", [](const std::string& a, const std::string& b) {
    return to_string(inner(psi_poly(eigenfunction_of(a)), psi_poly(eigenfunction_of(b))));
  }, py::arg("a"), py::arg("b"), "Exact Gaussian inner product of two named eigenfunctions, as 'p/q'.");
  m.def("eigenfunction", [](const std::string& name) { return to_string(psi_poly(eigenfunction_of(name))); },
        py::arg("name"));
  m.def("recursion_residual_is_zero", [](const std::string& which) {
    if (which == "stress") return recursion_residual(Recursion::Stress).is_zero();
    if (which == "heat") return recursion_residual(Recursion::Heat).is_zero();
    throw DomainError("recursion must be 'stress' or 'heat'");
  }, py::arg("which"));

  m.def("exact_coefficients", [](long long num, long long den) {
    const ExactEigenvalueSet set(Rational(num) / Rational(den));
    const auto ns = transport_ns(set);
    const auto b = transport_burnett(set);
    py::dict d;
    d["sound_diffusivity"] = to_string(ns.sound_diffusivity);
    d["entropy_diffusivity"] = to_string(ns.entropy_diffusivity);
    d["beta_u"] = to_string(b.beta_u);
    d["beta_p"] = to_string(b.beta_p);
    return d;
  }, py::arg("num"), py::arg("den") = 1, "Exact transport coefficients at lambda02 = num/den, as 'p/q' strings.");
  m.def("transport_coefficients", [](double lambda02) {
    const EigenvalueSet set(lambda02);
    const auto ns = transport_ns(set);
    const auto b = transport_burnett(set);
    py::dict d;
    d["sound_diffusivity"] = ns.sound_diffusivity;
    d["entropy_diffusivity"] = ns.entropy_diffusivity;
    d["beta_u"] = b.beta_u;
    d["beta_p"] = b.beta_p;
    return d;
  }, py::arg("lambda02") = -1.0);
  m.def("sound_speed", &sound_speed);

  m.def("sigma_asymptotic", [](double k, double eps, const std::string& branch, double lambda02) {
    return sigma_asymptotic(k, eps, EigenvalueSet(lambda02), branch_of(branch));
  }, py::arg("k"), py::arg("eps"), py::arg("branch"), py::arg("lambda02") = -1.0);
  m.def("symbol_matrix", [](const std::string& model, double k, double eps, double lambda02) {
    return symbol_matrix(model_of(model), k, eps, EigenvalueSet(lambda02));
  }, py::arg("model"), py::arg("k"), py::arg("eps"), py::arg("lambda02") = -1.0);
  m.def("symbol_eigenvalues", [](const std::string& model, double k, double eps, double lambda02) {
    return symbol_eigenvalues(model_of(model), k, eps, EigenvalueSet(lambda02));
  }, py::arg("model"), py::arg("k"), py::arg("eps"), py::arg("lambda02") = -1.0);
  m.def("branches", [](const std::string& model, std::vector<double> k_grid, double eps, double lambda02) {
    const auto t = branches(model_of(model), k_grid, eps, EigenvalueSet(lambda02));
    py::dict out;
    for (Branch b : model_branches(t.model)) {
      std::vector<std::complex<double>> values;
      for (std::size_t i = 0; i < t.k_grid.size(); ++i) values.push_back(t.sigma(i, b));
      out[py::str(std::string(to_string(b)))] = values;
    }
    return out;
  }, py::arg("model"), py::arg("k_grid"), py::arg("eps"), py::arg("lambda02") = -1.0,
     "Branch-labelled eigenvalues on an ascending k grid: {branch: [sigma, ...]}.");

  m.def("initial_state", [](const std::string& ic, std::size_t grid_size) {
    return fields(make_state(parse_initial_condition(ic, grid_size), grid_size));
  }, py::arg("ic"), py::arg("grid_size") = 256, "(u, p, s) sampled from an initial-condition string.");
  m.def("evolve", [](std::vector<double> u, std::vector<double> p, std::vector<double> s, const std::string& model,
                     double eps, double t, double lambda02) {
    const auto h = state_of(std::move(u), std::move(p), std::move(s));
    const EigenvalueSet set(lambda02);
    const ModelId id = model_of(model);
    if (id == ModelId::MomentReference)
      return fields(hydro_projection(evolve_moments(MomentState::from_hydro(h, eps, set), t)).hydro);
    return fields(evolve(h, id, eps, set, t));
  }, py::arg("u"), py::arg("p"), py::arg("s"), py::arg("model"), py::arg("eps"), py::arg("t"),
     py::arg("lambda02") = -1.0);
  m.def("acoustic_energy", [](std::vector<double> u, std::vector<double> p) {
    std::vector<double> s(u.size(), 0.0);
    return acoustic_energy(state_of(std::move(u), std::move(p), std::move(s)));
  }, py::arg("u"), py::arg("p"));
  m.def("h1_fluxes", [](std::vector<double> u, std::vector<double> p, std::vector<double> s, double lambda02) {
    const auto f = h1_fluxes(state_of(std::move(u), std::move(p), std::move(s)), EigenvalueSet(lambda02));
    return py::make_tuple(f.stress, f.heat_flux);
  }, py::arg("u"), py::arg("p"), py::arg("s"), py::arg("lambda02") = -1.0);
  m.def("ns_closure", [](double k, double eps, double lambda02) {
    const auto c = ns_closure_from_symbol(k, eps, EigenvalueSet(lambda02));
    return py::make_tuple(c.viscosity, c.conduction);
  }, py::arg("k"), py::arg("eps"), py::arg("lambda02") = -1.0);

  m.def("secular_ratio_series", [](const std::string& ic, double eps, std::vector<double> times, double lambda02) {
    const auto s = secular_ratio_series(parse_initial_condition(ic), eps, EigenvalueSet(lambda02), times);
    return py::make_tuple(s.naive_ratio, s.multiscale_ratio);
  }, py::arg("ic"), py::arg("eps"), py::arg("times"), py::arg("lambda02") = -1.0);
  m.def("multiscale_bound", [](const std::string& ic, double eps, double tmax, std::size_t samples, double lambda02) {
    return multiscale_bound(parse_initial_condition(ic), eps, EigenvalueSet(lambda02), tmax, samples).bound;
  }, py::arg("ic"), py::arg("eps"), py::arg("tmax"), py::arg("samples") = 1001, py::arg("lambda02") = -1.0);

  m.def("selftest", [] {
    std::ostringstream os;
    const bool ok = report_selftest(run_selftest(), os);
    return py::make_tuple(ok, os.str());
  });
  m.def("cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "mshydro");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    py::gil_scoped_release release;
    return cli_main(static_cast<int>(argv.size()), argv.data());
  }, py::arg("args"), "Run the command-line tool in-process; returns its exit status.");
}
