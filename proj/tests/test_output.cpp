#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mshydro/errors.hpp"
#include "mshydro/output.hpp"

using namespace mshydro;

namespace {

Table sample() {
  Table t{{"model", "k", "y"}, {}};
  for (int i = 0; i < 5; ++i) {
    t.rows.push_back({std::string("a"), 0.5 * i, 1.0 / (i + 1)});
    t.rows.push_back({std::string("b"), 0.5 * i, -0.1 * i});
  }
  return t;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("reals round trip through CSV text") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) CHECK(std::stod(format_real(v)) == v);
  CHECK(format_real(0.5) == "0.5");
}

TEST_CASE("csv layout") {
  const auto csv = to_csv(sample());
  CHECK(csv.rfind("model,k,y\na,0,1\nb,0,-0\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(to_csv(Table{{"a"}, {}}), DomainError);
  CHECK_THROWS_AS(to_csv(Table{{}, {{1.0}}}), DomainError);
  CHECK_THROWS_AS(to_csv(Table{{"a", "b"}, {{1.0}}}), DomainError);
}

TEST_CASE("svg is deterministic and well formed") {
  const ChartSpec spec{"k", {"y"}, {"model"}, "a < b & c"};
  const auto a = to_svg(sample(), spec);
  CHECK(a == to_svg(sample(), spec));
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("a &lt; b &amp; c") != std::string::npos);
  CHECK(a.find("model=a") != std::string::npos);
  CHECK(std::count(a.begin(), a.end(), '\n') > 10);
  CHECK_THROWS_AS(to_svg(sample(), ChartSpec{"nope", {}, {}, ""}), DomainError);
}

TEST_CASE("emit_outputs writes csv and svg files") {
  const auto dir = std::filesystem::temp_directory_path() / "mshydro_output_test";
  std::filesystem::create_directories(dir);
  const auto csv = dir / "table.csv";
  emit_outputs(sample(), csv, true, {});
  CHECK(slurp(csv) == to_csv(sample()));
  CHECK(slurp(dir / "table.svg") == to_svg(sample(), {}));
  CHECK_THROWS_AS(emit_outputs(sample(), "-", true, {}), DomainError);
  CHECK_THROWS_AS(emit_outputs(sample(), dir / "missing" / "x.csv", false, {}), std::ios_base::failure);
  std::filesystem::remove_all(dir);
}
