#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mshydro/hydro_spectral.hpp"

namespace mshydro {

/// One sinusoid: field(x) += amplitude * sin(mode * x + phase).
struct IcTerm {
  HydroField field;
  int mode;
  double amplitude;
  double phase = 0.0;

  bool operator==(const IcTerm&) const = default;
};

struct IcSpec {
  std::vector<IcTerm> terms;

  bool operator==(const IcSpec&) const = default;
};

/// Grammar:  term ("," term)*   with   term = field ":" mode ":" amplitude [":" phase]
/// field is one of u, p, s; mode a positive integer below grid_size / 2; phase
/// in radians. Whitespace is ignored. Throws ParseError carrying the offending
/// character offset.
IcSpec parse_initial_condition(std::string_view text, std::size_t grid_size = 256);

std::string to_string(const IcSpec& ic);

/// Samples the initial condition on an N-point grid.
HydroState make_state(const IcSpec& ic, std::size_t grid_size);

}  // namespace mshydro
