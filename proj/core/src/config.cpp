#include "wbeuler/config.hpp"

#include <algorithm>
#include <sstream>

#include "wbeuler/errors.hpp"

namespace wbeuler {

bool BoundarySpec::uses(BoundaryKind kind) const {
  return std::find(sides.begin(), sides.end(), kind) != sides.end();
}

double EquilibriumSpec::param(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void RunConfig::validate(int dim) const {
  if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("CFL number must lie in (0, 1)");
  if (!(gamma > 1.0)) throw ConfigError("gamma must exceed 1");
  if (!(final_time >= 0.0)) throw ConfigError("final time must be non-negative");
  if (dim == 1) {
    if (order != 1 && order != 2 && order != 3 && order != 5) {
      std::ostringstream os;
      os << "order " << order << " is not available in 1D (use 1, 2, 3 or 5)";
      throw ConfigError(os.str());
    }
  } else if (dim == 2) {
    if (order != 3) throw ConfigError("2D schemes are third order only");
  } else {
    throw ConfigError("only 1D and 2D grids are supported");
  }
}

FluxKind parse_flux(std::string_view name) {
  if (name == "rusanov" || name == "llf") return FluxKind::rusanov;
  throw ConfigError("unknown flux '" + std::string(name) + "'");
}

SchemeMode parse_mode(std::string_view name) {
  if (name == "wb") return SchemeMode::well_balanced;
  if (name == "unb") return SchemeMode::unbalanced;
  throw ConfigError("unknown mode '" + std::string(name) + "' (expected wb or unb)");
}

BoundaryKind parse_boundary(std::string_view name) {
  if (name == "periodic") return BoundaryKind::periodic;
  if (name == "equilibrium") return BoundaryKind::equilibrium;
  if (name == "exact") return BoundaryKind::exact;
  if (name == "extrapolation") return BoundaryKind::extrapolation;
  throw ConfigError("unknown boundary '" + std::string(name) + "'");
}

std::string to_string(SchemeMode mode) {
  return mode == SchemeMode::well_balanced ? "wb" : "unb";
}

std::string to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::periodic: return "periodic";
    case BoundaryKind::equilibrium: return "equilibrium";
    case BoundaryKind::exact: return "exact";
    case BoundaryKind::extrapolation: return "extrapolation";
  }
  return "unknown";
}

}  // namespace wbeuler
