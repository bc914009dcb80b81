#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

namespace wbeuler {

enum class FluxKind { rusanov };

/// WB reconstructs fluctuations from the prescribed equilibrium; UNB
/// reconstructs the conservative variables directly (comparison scheme).
enum class SchemeMode { well_balanced, unbalanced };

enum class BoundaryKind {
  periodic,     ///< wraparound copy
  equilibrium,  ///< ghosts hold equilibrium cell averages
  exact,        ///< ghosts hold cell averages of a supplied exact solution
  extrapolation ///< zeroth-order copy of the nearest interior cell
};

/// Boundary treatment per side, ordered x-lo, x-hi, y-lo, y-hi.
struct BoundarySpec {
  std::array<BoundaryKind, 4> sides{BoundaryKind::equilibrium, BoundaryKind::equilibrium,
                                    BoundaryKind::equilibrium, BoundaryKind::equilibrium};

  static BoundarySpec uniform(BoundaryKind kind) { return {{kind, kind, kind, kind}}; }
  bool uses(BoundaryKind kind) const;
};

/// Named equilibrium plus its numeric parameters (temperature, nu, velocity, ...).
struct EquilibriumSpec {
  std::string name = "isothermal";
  std::string potential = "x";
  std::map<std::string, double> params;

  double param(const std::string& key, double fallback) const;
};

struct RunConfig {
  int order = 3;
  FluxKind flux = FluxKind::rusanov;
  double cfl = 0.45;
  double gamma = 1.4;
  BoundarySpec boundary;
  EquilibriumSpec equilibrium;
  double final_time = 0.0;
  SchemeMode mode = SchemeMode::well_balanced;
  /// Multiply the CFL step by min(dx)^(order/3 - 1) when order > 3 so the
  /// third-order integrator does not cap the observed spatial order.
  bool scale_time_step = false;
  /// Second order: minmod-limited slopes instead of the central slope.
  bool limit_slopes = false;
  std::string output_dir;

  /// Throws ConfigError unless 0 < cfl < 1, gamma > 1, final_time >= 0 and
  /// the order is supported for `dim` ({1,2,3,5} in 1D, {3} in 2D).
  void validate(int dim) const;
};

FluxKind parse_flux(std::string_view name);
SchemeMode parse_mode(std::string_view name);
BoundaryKind parse_boundary(std::string_view name);
std::string to_string(SchemeMode mode);
std::string to_string(BoundaryKind kind);

}  // namespace wbeuler
