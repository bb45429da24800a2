#pragma once

#include <optional>
#include <string_view>

namespace mshydro {

/// Hydrodynamic models of increasing order plus the kinetic moment reference.
/// Native state ordering: (u, p, s) for Euler/NavierStokes/Burnett,
/// (R+, R-, s) for RiemannDecoupled, (n, u, p, Pi, q) for MomentReference.
enum class ModelId { Euler, NavierStokes, Burnett, RiemannDecoupled, MomentReference };

inline constexpr ModelId kAllModels[] = {ModelId::Euler, ModelId::NavierStokes, ModelId::Burnett,
                                         ModelId::RiemannDecoupled, ModelId::MomentReference};

constexpr int model_dimension(ModelId model) { return model == ModelId::MomentReference ? 5 : 3; }

constexpr std::string_view to_string(ModelId model) {
  switch (model) {
    case ModelId::Euler: return "euler";
    case ModelId::NavierStokes: return "navier_stokes";
    case ModelId::Burnett: return "burnett";
    case ModelId::RiemannDecoupled: return "riemann";
    case ModelId::MomentReference: return "moment";
  }
  return "?";
}

/// Accepts the canonical names above plus a few short aliases (ns, moments, ...).
std::optional<ModelId> parse_model(std::string_view name);

}  // namespace mshydro
