#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mshydro/errors.hpp"
#include "mshydro/initial_condition.hpp"

using namespace mshydro;

TEST_CASE("parse well-formed initial conditions") {
  const auto ic = parse_initial_condition(" u:1:1.0 , p:2:0.5:1.5708,s:3:-2e-1");
  REQUIRE(ic.terms.size() == 3);
  CHECK(ic.terms[0] == IcTerm{HydroField::U, 1, 1.0, 0.0});
  CHECK(ic.terms[1] == IcTerm{HydroField::P, 2, 0.5, 1.5708});
  CHECK(ic.terms[2] == IcTerm{HydroField::S, 3, -0.2, 0.0});
  CHECK(parse_initial_condition(to_string(ic)) == ic);
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* text, std::size_t n = 256) -> long {
    try {
      parse_initial_condition(text, n);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("q:1:1") == 0);
  CHECK(position_of("u:1.5:1") >= 2);
  CHECK(position_of("u:1") == 3);
  CHECK(position_of("u:1:1;p:1:1") == 5);
  CHECK(position_of("u:8:1", 16) == 2);
  CHECK(position_of("u:0:1") == 2);
  CHECK(position_of("u:1:abc") == 4);
  CHECK_THROWS_WITH_AS(parse_initial_condition("w:1:1"), doctest::Contains("'w'"), ParseError);
}

TEST_CASE("make_state samples sinusoids") {
  const auto s = make_state(parse_initial_condition("u:2:1.5:0.25,u:1:1,p:1:2"), 16);
  for (std::size_t j = 0; j < 16; ++j) {
    const double x = 2.0 * std::numbers::pi * j / 16.0;
    CHECK(s.u()[j] == doctest::Approx(1.5 * std::sin(2 * x + 0.25) + std::sin(x)));
    CHECK(s.p()[j] == doctest::Approx(2.0 * std::sin(x)));
    CHECK(s.s()[j] == 0.0);
  }
  CHECK_THROWS_AS(make_state(parse_initial_condition("u:5:1"), 8), DomainError);
}
