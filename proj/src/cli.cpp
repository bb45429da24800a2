#include "mshydro/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "mshydro/coefficients.hpp"
#include "mshydro/dispersion.hpp"
#include "mshydro/errors.hpp"
#include "mshydro/hydro_spectral.hpp"
#include "mshydro/moment_reference.hpp"
#include "mshydro/secularity.hpp"
#include "mshydro/selftest.hpp"

namespace mshydro {

namespace {

constexpr const char* kCommandNames[] = {"dispersion", "evolve", "compare", "secular", "selftest"};

std::vector<ModelId> models_or(const RunConfig& config, std::vector<ModelId> fallback) {
  return config.models.empty() ? fallback : config.models;
}

double l2_distance(const HydroState& a, const HydroState& b) {
  double sum = 0.0;
  for (auto f : {HydroField::U, HydroField::P, HydroField::S}) {
    std::vector<double> d(a.grid_size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = a.field(f)[j] - b.field(f)[j];
    const double n = l2_norm(d);
    sum += n * n;
  }
  return std::sqrt(sum);
}

HydroState state_at(const HydroState& initial, ModelId model, double eps, const EigenvalueSet& set, double t) {
  if (model == ModelId::MomentReference) {
    const MomentState m0 = MomentState::from_hydro(initial, eps, set);
    return t > 0.0 ? hydro_projection(evolve_moments(m0, t)).hydro : hydro_projection(m0).hydro;
  }
  return t > 0.0 ? evolve(initial, model, eps, set, t) : initial;
}

Table dispersion_table(const RunConfig& config, const EigenvalueSet& set) {
  std::vector<ModelId> models = models_or(config, {ModelId::Burnett});
  std::sort(models.begin(), models.end());
  models.erase(std::unique(models.begin(), models.end()), models.end());

  std::vector<double> k_grid(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i)
    k_grid[i] = config.samples == 1 ? config.kmin
                                    : config.kmin + (config.kmax - config.kmin) * static_cast<double>(i) /
                                                        static_cast<double>(config.samples - 1);

  Table table{{"model", "k", "branch", "re_sigma", "im_sigma"}, {}};
  for (ModelId model : models) {
    const DispersionTable d = branches(model, k_grid, config.eps, set);
    for (std::size_t i = 0; i < d.k_grid.size(); ++i)
      for (const auto& entry : d.rows[i])
        table.rows.push_back({std::string(to_string(model)), d.k_grid[i], std::string(to_string(entry.branch)),
                              entry.sigma.real(), entry.sigma.imag()});
  }
  return table;
}

Table evolve_table(const RunConfig& config, const EigenvalueSet& set) {
  const ModelId model = models_or(config, {ModelId::Burnett}).front();
  const HydroState initial = make_state(config.ic, config.grid_size);
  Table table{{"t", "x", "u", "p", "s"}, {}};
  for (double t : output_times(config.tmax, config.dt_out)) {
    const HydroState state = state_at(initial, model, config.eps, set, t);
    for (std::size_t j = 0; j < state.grid_size(); ++j)
      table.rows.push_back({t, state.x(j), state.u()[j], state.p()[j], state.s()[j]});
  }
  return table;
}

Table compare_table(const RunConfig& config, const EigenvalueSet& set) {
  const auto models = models_or(config, {ModelId::Euler, ModelId::NavierStokes, ModelId::Burnett});
  const HydroState initial = make_state(config.ic, config.grid_size);
  Table table{{"t"}, {}};
  for (ModelId m : models) table.header.push_back("l2_error_" + std::string(to_string(m)));
  for (double t : output_times(config.tmax, config.dt_out)) {
    const HydroState reference = state_at(initial, ModelId::MomentReference, config.eps, set, t);
    std::vector<Cell> row{t};
    for (ModelId m : models) row.emplace_back(l2_distance(state_at(initial, m, config.eps, set, t), reference));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table secular_table(const RunConfig& config, const EigenvalueSet& set) {
  // Measurement starts after the first acoustic period (the initial layer is excluded).
  const int mode = config.ic.terms.empty() ? 1 : config.ic.terms.front().mode;
  const double period = 2.0 * std::numbers::pi / (sound_speed() * mode);
  std::vector<double> times;
  for (double t : output_times(config.tmax, config.dt_out))
    if (t >= period * (1.0 - 1e-12)) times.push_back(t);
  if (times.empty()) throw DomainError("tmax is shorter than one acoustic period");

  const SecularSeries series = secular_ratio_series(config.ic, config.eps, set, times, config.grid_size);
  Table table{{"t", "naive_ratio", "multiscale_ratio"}, {}};
  for (std::size_t i = 0; i < times.size(); ++i)
    table.rows.push_back({series.times[i], series.naive_ratio[i], series.multiscale_ratio[i]});
  return table;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

bool flag_present(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

// Merges a flat key=value file into the argument list; explicit flags win.
void merge_config_file(std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return;

  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot read config file '" + path + "'");
  const bool has_command = std::any_of(args.begin(), args.end(), [](const std::string& a) {
    return std::find(std::begin(kCommandNames), std::end(kCommandNames), a) != std::end(kCommandNames);
  });

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(line_no) + " is not key=value", 0);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "config") continue;
    if (key == "command") {
      if (!has_command) args.insert(args.begin(), value);
      continue;
    }
    if (flag_present(args, key)) continue;
    if (key == "svg") {
      if (value == "1" || value == "true" || value == "yes") args.push_back("--svg");
      continue;
    }
    args.push_back("--" + key);
    args.push_back(value);
  }
}

}  // namespace

void validate(const RunConfig& config) {
  if (!(config.eps > 0.0)) throw DomainError("--eps must be positive");
  if (!(config.lambda02 < 0.0)) throw DomainError("--lambda02 must be negative");
  if (config.grid_size < 8 || config.grid_size % 2 != 0) throw DomainError("--grid must be even and >= 8");
  if (config.ic.terms.empty()) throw DomainError("--ic needs at least one term");
  for (const auto& t : config.ic.terms)
    if (t.mode < 1 || static_cast<std::size_t>(t.mode) >= config.grid_size / 2)
      throw DomainError("--ic mode " + std::to_string(t.mode) + " must be in [1, grid/2)");

  switch (config.command) {
    case Command::Dispersion:
      if (config.samples < 1) throw DomainError("--samples must be at least 1");
      if (!(config.kmin > 0.0)) throw DomainError("--kmin must be positive");
      if (config.samples > 1 && !(config.kmax > config.kmin)) throw DomainError("--kmax must exceed --kmin");
      break;
    case Command::Evolve:
      if (config.models.size() > 1) throw DomainError("evolve takes exactly one --model");
      [[fallthrough]];
    case Command::Compare:
    case Command::Secular:
      if (!(config.tmax > 0.0)) throw DomainError("--tmax must be positive");
      if (!(config.dt_out > 0.0)) throw DomainError("--dt-out must be positive");
      break;
    case Command::Selftest:
      break;
  }
  if (config.command == Command::Compare &&
      std::find(config.models.begin(), config.models.end(), ModelId::MomentReference) != config.models.end())
    throw DomainError("compare measures models against the moment reference; drop it from --model");
  if (config.command == Command::Secular && config.tmax > 1.0 / (config.eps * config.eps) * (1.0 + 1e-12))
    throw DomainError("secular: --tmax exceeds the validity horizon eps^-2");
}

std::vector<double> output_times(double tmax, double dt_out) {
  if (!(tmax > 0.0) || !(dt_out > 0.0)) throw DomainError("tmax and dt_out must be positive");
  std::vector<double> times;
  const auto steps = static_cast<std::size_t>(std::floor(tmax / dt_out * (1.0 + 1e-12)));
  for (std::size_t i = 0; i <= steps; ++i) times.push_back(static_cast<double>(i) * dt_out);
  if (tmax - times.back() > 1e-12 * tmax) times.push_back(tmax);
  else times.back() = tmax;
  return times;
}

Table build_table(const RunConfig& config, ChartSpec* chart) {
  validate(config);
  const EigenvalueSet set(config.lambda02);
  ChartSpec spec;
  Table table;
  switch (config.command) {
    case Command::Dispersion:
      table = dispersion_table(config, set);
      spec = {"k", {"im_sigma"}, {"model", "branch"}, "dispersion: Im sigma(k)"};
      break;
    case Command::Evolve:
      table = evolve_table(config, set);
      spec = {"x", {"u", "p", "s"}, {"t"}, "fields"};
      break;
    case Command::Compare:
      table = compare_table(config, set);
      spec = {"t", {}, {}, "L2 error against the moment reference"};
      break;
    case Command::Secular:
      table = secular_table(config, set);
      spec = {"t", {"naive_ratio", "multiscale_ratio"}, {}, "first-correction ratios"};
      break;
    case Command::Selftest:
      throw DomainError("selftest produces no table");
  }
  if (chart) *chart = spec;
  return table;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == Command::Selftest) return report_selftest(run_selftest(), out) ? 0 : 2;
    ChartSpec chart;
    const Table table = build_table(config, &chart);
    if (config.out_path == "-" && !config.emit_svg) {
      out << to_csv(table);
    } else {
      emit_outputs(table, config.out_path, config.emit_svg, chart);
    }
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 2;
  }
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    merge_config_file(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  RunConfig config;
  std::vector<std::string> model_names;
  std::string ic_text = "u:1:1";
  std::string config_path;

  CLI::App app{"Linearized-Boltzmann hydrodynamic model hierarchy: dispersion, evolution, comparison "
               "against the kinetic moment reference, and secular-growth experiments.",
               "mshydro"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--eps", config.eps, "Knudsen number (> 0)")->capture_default_str();
    sub->add_option("--lambda02", config.lambda02, "collision eigenvalue lambda02 (< 0)")->capture_default_str();
    sub->add_option("--out", config.out_path, "output CSV path, '-' for stdout")->capture_default_str();
    sub->add_flag("--svg", config.emit_svg, "also write a static SVG chart next to --out");
    sub->add_option("--config", config_path, "flat key=value file mirroring the long flag names");
  };
  auto add_models = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--model", model_names, help)->delimiter(',');
  };
  auto add_time = [&](CLI::App* sub) {
    sub->add_option("--grid", config.grid_size, "grid points on [0, 2 pi) (even, >= 8)")->capture_default_str();
    sub->add_option("--ic", ic_text, "initial condition, e.g. u:1:1.0,p:2:0.5:1.5708 (field:mode:amp[:phase])")
        ->capture_default_str();
    sub->add_option("--tmax", config.tmax, "final time")->capture_default_str();
    sub->add_option("--dt-out", config.dt_out, "output sampling interval")->capture_default_str();
  };

  auto* dispersion = app.add_subcommand("dispersion", "dispersion branches sigma(k) per model");
  add_common(dispersion);
  add_models(dispersion, "models: euler, ns, burnett, riemann, moment (comma separated; default burnett)");
  dispersion->add_option("--kmin", config.kmin, "smallest wavenumber")->capture_default_str();
  dispersion->add_option("--kmax", config.kmax, "largest wavenumber")->capture_default_str();
  dispersion->add_option("--samples", config.samples, "number of wavenumbers")->capture_default_str();

  auto* evolve_cmd = app.add_subcommand("evolve", "evolve an initial condition under one model");
  add_common(evolve_cmd);
  add_models(evolve_cmd, "model: euler, ns, burnett, riemann or moment (default burnett)");
  add_time(evolve_cmd);

  auto* compare = app.add_subcommand("compare", "L2 error of hydrodynamic models against the moment reference");
  add_common(compare);
  add_models(compare, "models to compare (default euler,ns,burnett)");
  add_time(compare);

  auto* secular = app.add_subcommand("secular", "naive vs multiscale first-correction ratios");
  add_common(secular);
  add_time(secular);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite of every module");

  std::vector<const char*> cargv{argv[0]};
  for (const auto& a : args) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*dispersion) config.command = Command::Dispersion;
    else if (*evolve_cmd) config.command = Command::Evolve;
    else if (*compare) config.command = Command::Compare;
    else if (*secular) config.command = Command::Secular;
    else if (*selftest) config.command = Command::Selftest;
    for (const auto& name : model_names) {
      const auto model = parse_model(name);
      if (!model) throw DomainError("unknown model '" + name + "'");
      config.models.push_back(*model);
    }
    config.ic = parse_initial_condition(ic_text, config.grid_size);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return run(config, std::cout, std::cerr);
}

}  // namespace mshydro
