#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mshydro/initial_condition.hpp"
#include "mshydro/model.hpp"
#include "mshydro/output.hpp"

namespace mshydro {

enum class Command { Dispersion, Evolve, Compare, Secular, Selftest };

struct RunConfig {
  Command command = Command::Selftest;
  std::vector<ModelId> models;
  double eps = 0.1;
  double lambda02 = -1.0;
  std::size_t grid_size = 256;
  double kmin = 0.1;
  double kmax = 4.0;
  std::size_t samples = 64;
  double tmax = 1.0;
  double dt_out = 0.1;
  IcSpec ic{{{HydroField::U, 1, 1.0, 0.0}}};
  std::string out_path = "-";
  bool emit_svg = false;
};

/// Throws DomainError describing the first violated constraint.
void validate(const RunConfig& config);

/// Output sample times 0, dt_out, 2 dt_out, ... up to tmax (tmax always included).
std::vector<double> output_times(double tmax, double dt_out);

/// Runs a data-producing command and returns its table:
///   dispersion  (model, k, branch, re_sigma, im_sigma)
///   evolve      (t, x, u, p, s)
///   compare     (t, l2_error_<model>...) against the moment reference
///   secular     (t, naive_ratio, multiscale_ratio)
Table build_table(const RunConfig& config, ChartSpec* chart = nullptr);

/// Executes the configured command. Returns the process exit status:
/// 0 success, 1 usage error (bad configuration or I/O), 2 numerical failure.
/// Diagnostics are written to err as a single line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Entry point for the command-line tool: flags, plus an optional flat
/// key=value file given with --config whose keys mirror the long flag names
/// (command-line flags win on conflict).
int cli_main(int argc, const char* const* argv);

}  // namespace mshydro
