#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "wbeuler/config.hpp"
#include "wbeuler/field.hpp"
#include "wbeuler/grid.hpp"
#include "wbeuler/physics.hpp"

namespace wbeuler {

using ScalarFunction = std::function<double(Point)>;
using VectorFunction = std::function<Point(Point)>;

/// Gravitational potential together with its gradient.
struct Potential {
  std::string name;
  ScalarFunction phi;
  VectorFunction grad;
};

/// Known names: zero, x, x2, x2half, sin2pix, x+y, y, r, r2, r2half.
Potential make_potential(std::string_view name);

/// Target equilibrium: density alpha, pressure beta with grad(beta) = -alpha grad(phi),
/// optionally moving with constant speed (U, 0) across a gravity field aligned with y.
struct EquilibriumPair {
  std::string name;
  int dim = 1;
  ScalarFunction alpha;
  ScalarFunction beta;
  ScalarFunction phi;
  VectorFunction grad_phi;
  double velocity = 0.0;
  std::map<std::string, double> params;

  /// beta / (gamma - 1) + U^2 alpha / 2, the equilibrium total energy density.
  double energy(Point x, double gamma) const;
  ConservedState state(Point x, double gamma) const;
  /// U != 0 is only an exact steady state when grad(phi) has no x component.
  bool gravity_transverse_to_flow(std::span<const Point> samples) const;
};

/// alpha = exp(-phi/T)/T, beta = exp(-phi/T). Throws ConfigError for T <= 0.
EquilibriumPair isothermal_pair(const Potential& phi, double temperature, int dim);
/// alpha = (1 - (nu-1)/nu phi)^(1/(nu-1)), beta = alpha^nu. Evaluating alpha or
/// beta where the base is not positive throws ConfigError.
EquilibriumPair polytropic_pair(const Potential& phi, double nu, int dim);
/// alpha = exp(-r), beta = (1+r) exp(-r) in 2D with phi = r^2/2.
EquilibriumPair radial_general_pair();
/// alpha = exp(-x), beta = (1+x) exp(-x) with phi = x^2/2 (temperature 1 + x).
EquilibriumPair nonisothermal_1d_pair();
/// Constant density rho0: beta = p0 - rho0 phi.
EquilibriumPair constant_density_pair(const Potential& phi, double rho0, double p0, int dim);
/// Copy of `pair` moving with speed (U, 0). Throws ConfigError for U != 0 in 1D.
EquilibriumPair with_velocity(EquilibriumPair pair, double velocity);
/// (K alpha, K beta); still satisfies the defining identity.
EquilibriumPair scaled(EquilibriumPair pair, double factor);

/// Registry lookup: isothermal, polytropic, nonisothermal, radial, constant-density.
/// Parameters: temperature, nu, velocity, rho0, p0.
EquilibriumPair make_equilibrium(const EquilibriumSpec& spec, int dim);

struct IdentityReport {
  double max_residual = 0.0;
  double tolerance = 0.0;
  Point worst{0.0, 0.0};
  bool passed = false;
};

/// Compares a central difference of beta with -alpha grad(phi) at each point.
/// `tol` has to dominate the O(h^2) error of the check itself.
IdentityReport verify_equilibrium_identity(const EquilibriumPair& pair, std::span<const Point> points,
                                           double h, double tol);

/// Cell averages of fn on every cell (halo included) with a tensor Gauss
/// rule of ceil(order/2) nodes per direction.
Field project_cell_averages(const ScalarFunction& fn, const Grid& grid, int order);

/// Same for a conserved state; the result has dim + 2 components.
Field project_state_averages(const std::function<ConservedState(Point)>& fn, const Grid& grid,
                             int order);

/// Average of a conserved state over one cell.
ConservedState cell_average(const std::function<ConservedState(Point)>& fn, const Grid& grid, int i,
                            int j, int order);

}  // namespace wbeuler
