#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <unistd.h>

#include "mshydro/cli.hpp"
#include "mshydro/coefficients.hpp"

using namespace mshydro;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

int call(std::vector<std::string> args) {
  args.insert(args.begin(), "mshydro");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / ("mshydro_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("output times include tmax exactly once") {
  const auto t = output_times(1.0, 0.1);
  CHECK(t.size() == 11);
  CHECK(t.back() == 1.0);
  const auto u = output_times(1.05, 0.5);
  CHECK(u == std::vector<double>{0.0, 0.5, 1.0, 1.05});
}

TEST_CASE("default dispersion run has 64 k samples times 3 branches") {
  RunConfig c;
  c.command = Command::Dispersion;
  c.models = {ModelId::Burnett};
  const auto t = build_table(c);
  CHECK(t.rows.size() == 64 * 3);
  CHECK(t.header == std::vector<std::string>{"model", "k", "branch", "re_sigma", "im_sigma"});
  c.models = {ModelId::MomentReference, ModelId::Euler};
  c.eps = 0.05;
  CHECK(build_table(c).rows.size() == 64 * 3 + 64 * 5);
}

TEST_CASE("runs are deterministic") {
  RunConfig c;
  c.command = Command::Evolve;
  c.grid_size = 16;
  c.models = {ModelId::MomentReference};
  std::ostringstream a, b, err;
  CHECK(run(c, a, err) == 0);
  CHECK(run(c, b, err) == 0);
  const std::string text = a.str();
  CHECK(text == b.str());
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 11 * 16);
}

TEST_CASE("euler evolve returns to the initial state after one period") {
  RunConfig c;
  c.command = Command::Evolve;
  c.models = {ModelId::Euler};
  c.grid_size = 32;
  c.ic = parse_initial_condition("u:1:1,p:1:0.3");
  c.tmax = 2.0 * std::numbers::pi / sound_speed();
  c.dt_out = c.tmax;
  const auto t = build_table(c);
  REQUIRE(t.rows.size() == 64);
  for (std::size_t j = 0; j < 32; ++j)
    for (std::size_t col = 2; col < 5; ++col)
      CHECK(std::abs(std::get<double>(t.rows[j][col]) - std::get<double>(t.rows[32 + j][col])) <= 1e-10);
}

TEST_CASE("usage errors exit with 1 and a single line") {
  RunConfig c;
  c.command = Command::Dispersion;
  std::ostringstream out, err;
  c.eps = 0.0;
  CHECK(run(c, out, err) == 1);
  const std::string message = err.str();
  CHECK(std::count(message.begin(), message.end(), '\n') == 1);
  c.eps = 0.1;
  c.kmin = 2.0;
  c.kmax = 1.0;
  CHECK(run(c, out, err) == 1);

  RunConfig s;
  s.command = Command::Secular;
  s.ic = parse_initial_condition("u:1:1,p:2:1");
  s.tmax = 10.0;
  CHECK(run(s, out, err) == 1);
  s.ic = parse_initial_condition("u:1:1");
  s.tmax = 1000.0;
  CHECK(run(s, out, err) == 1);

  CHECK(call({"evolve", "--ic", "u:1"}) == 1);
  CHECK(call({"evolve", "--model", "euler,ns"}) == 1);
  CHECK(call({"evolve", "--model", "bogus"}) == 1);
  CHECK(call({"dispersion", "--unknown-flag"}) == 1);
  CHECK(call({}) == 1);
}

TEST_CASE("numerical failures exit with 2") {
  {
    // Entropy and shear-relaxation branches of the moment system coalesce near eps k = 0.3.
    RunConfig m;
    m.command = Command::Dispersion;
    m.models = {ModelId::MomentReference};
    std::ostringstream out, err;
    CHECK(run(m, out, err) == 2);
    CHECK(err.str().find("refine") != std::string::npos);
  }
  RunConfig c;
  c.command = Command::Dispersion;
  c.models = {ModelId::Euler};
  c.kmin = 1e-15;
  c.kmax = 2e-15;
  c.samples = 2;
  std::ostringstream out, err;
  CHECK(run(c, out, err) == 2);
}

TEST_CASE("csv and svg files, byte-identical across runs") {
  TempDir dir;
  const auto a = dir.path / "a.csv", b = dir.path / "b.csv";
  CHECK(call({"dispersion", "--model", "ns,burnett", "--samples", "16", "--out", a.string(), "--svg"}) == 0);
  CHECK(call({"dispersion", "--model", "ns,burnett", "--samples", "16", "--out", b.string(), "--svg"}) == 0);
  CHECK(slurp(a) == slurp(b));
  const auto svg = slurp(dir.path / "a.svg");
  CHECK(svg == slurp(dir.path / "b.svg"));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(call({"dispersion", "--out", (dir.path / "no" / "x.csv").string()}) == 1);
  CHECK(call({"dispersion", "--svg"}) == 1);
}

TEST_CASE("config file supplies defaults; command line wins") {
  TempDir dir;
  const auto cfg = dir.path / "run.cfg";
  {
    std::ofstream f(cfg);
    f << "# comment\ncommand = dispersion\nmodel = euler\nsamples = 4\nkmax = 2\nout = " << (dir.path / "cfg.csv").string()
      << "\n";
  }
  CHECK(call({"--config", cfg.string()}) == 0);  // the file's command key picks the subcommand
  CHECK(call({"dispersion", "--config", cfg.string(), "--samples", "2"}) == 0);
  const auto csv = slurp(dir.path / "cfg.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 3);
  CHECK(csv.find("euler,2,") != std::string::npos);

  {
    std::ofstream f(cfg);
    f << "samples 4\n";
  }
  CHECK(call({"dispersion", "--config", cfg.string()}) == 1);
  CHECK(call({"dispersion", "--config", (dir.path / "absent.cfg").string()}) == 1);
}

TEST_CASE("compare and secular tables") {
  RunConfig c;
  c.command = Command::Compare;
  c.grid_size = 16;
  c.tmax = 0.5;
  c.dt_out = 0.25;
  const auto t = build_table(c);
  CHECK(t.header == std::vector<std::string>{"t", "l2_error_euler", "l2_error_navier_stokes", "l2_error_burnett"});
  CHECK(t.rows.size() == 3);
  CHECK(std::get<double>(t.rows[2][2]) < std::get<double>(t.rows[2][1]));

  RunConfig s;
  s.command = Command::Secular;
  s.tmax = 20.0;
  s.dt_out = 1.0;
  const auto st = build_table(s);
  CHECK(std::get<double>(st.rows.front()[0]) >= 2.0 * std::numbers::pi / sound_speed());
  s.tmax = 1.0;
  CHECK_THROWS_AS(build_table(s), DomainError);
}
