#include "mshydro/model.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace mshydro {

std::optional<ModelId> parse_model(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) {
    return c == '-' ? '_' : static_cast<char>(std::tolower(c));
  });
  if (key == "euler") return ModelId::Euler;
  if (key == "navier_stokes" || key == "ns" || key == "navierstokes") return ModelId::NavierStokes;
  if (key == "burnett") return ModelId::Burnett;
  if (key == "riemann" || key == "riemann_decoupled" || key == "riemanndecoupled") return ModelId::RiemannDecoupled;
  if (key == "moment" || key == "moments" || key == "moment_reference" || key == "momentreference")
    return ModelId::MomentReference;
  return std::nullopt;
}

}  // namespace mshydro
