#include "wbeuler/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wbeuler/errors.hpp"
#include "wbeuler/quadrature.hpp"

namespace wbeuler {

namespace {

double radius(Point x) { return std::hypot(x[0], x[1]); }

}  // namespace

Potential make_potential(std::string_view name) {
  using std::numbers::pi;
  Potential p;
  p.name = std::string(name);
  if (name == "zero") {
    p.phi = [](Point) { return 0.0; };
    p.grad = [](Point) { return Point{0.0, 0.0}; };
  } else if (name == "x") {
    p.phi = [](Point x) { return x[0]; };
    p.grad = [](Point) { return Point{1.0, 0.0}; };
  } else if (name == "x2") {
    p.phi = [](Point x) { return x[0] * x[0]; };
    p.grad = [](Point x) { return Point{2.0 * x[0], 0.0}; };
  } else if (name == "x2half") {
    p.phi = [](Point x) { return 0.5 * x[0] * x[0]; };
    p.grad = [](Point x) { return Point{x[0], 0.0}; };
  } else if (name == "sin2pix") {
    p.phi = [](Point x) { return std::sin(2.0 * pi * x[0]); };
    p.grad = [](Point x) { return Point{2.0 * pi * std::cos(2.0 * pi * x[0]), 0.0}; };
  } else if (name == "x+y") {
    p.phi = [](Point x) { return x[0] + x[1]; };
    p.grad = [](Point) { return Point{1.0, 1.0}; };
  } else if (name == "y") {
    p.phi = [](Point x) { return x[1]; };
    p.grad = [](Point) { return Point{0.0, 1.0}; };
  } else if (name == "r") {
    p.phi = [](Point x) { return radius(x); };
    p.grad = [](Point x) {
      const double r = radius(x);
      return r > 0.0 ? Point{x[0] / r, x[1] / r} : Point{0.0, 0.0};
    };
  } else if (name == "r2") {
    p.phi = [](Point x) { return x[0] * x[0] + x[1] * x[1]; };
    p.grad = [](Point x) { return Point{2.0 * x[0], 2.0 * x[1]}; };
  } else if (name == "r2half") {
    p.phi = [](Point x) { return 0.5 * (x[0] * x[0] + x[1] * x[1]); };
    p.grad = [](Point x) { return Point{x[0], x[1]}; };
  } else {
    throw ConfigError("unknown potential '" + std::string(name) + "'");
  }
  return p;
}

double EquilibriumPair::energy(Point x, double gamma) const {
  const double b = beta(x);
  if (velocity == 0.0) return b / (gamma - 1.0);
  return b / (gamma - 1.0) + 0.5 * velocity * velocity * alpha(x);
}

ConservedState EquilibriumPair::state(Point x, double gamma) const {
  ConservedState u;
  u.rho = alpha(x);
  u.m = {velocity * u.rho, 0.0};
  u.E = energy(x, gamma);
  return u;
}

bool EquilibriumPair::gravity_transverse_to_flow(std::span<const Point> samples) const {
  if (velocity == 0.0) return true;
  return std::all_of(samples.begin(), samples.end(), [&](Point x) { return grad_phi(x)[0] == 0.0; });
}

EquilibriumPair isothermal_pair(const Potential& phi, double temperature, int dim) {
  if (!(temperature > 0.0)) throw ConfigError("isothermal equilibrium needs a positive temperature");
  EquilibriumPair pair;
  pair.name = "isothermal";
  pair.dim = dim;
  pair.phi = phi.phi;
  pair.grad_phi = phi.grad;
  const double t = temperature;
  auto f = phi.phi;
  pair.alpha = [f, t](Point x) { return std::exp(-f(x) / t) / t; };
  pair.beta = [f, t](Point x) { return std::exp(-f(x) / t); };
  pair.params = {{"temperature", t}};
  return pair;
}

EquilibriumPair polytropic_pair(const Potential& phi, double nu, int dim) {
  if (!(nu > 1.0)) throw ConfigError("polytropic equilibrium needs nu > 1");
  EquilibriumPair pair;
  pair.name = "polytropic";
  pair.dim = dim;
  pair.phi = phi.phi;
  pair.grad_phi = phi.grad;
  auto f = phi.phi;
  auto alpha = [f, nu](Point x) {
    const double base = 1.0 - (nu - 1.0) / nu * f(x);
    if (!(base > 0.0)) {
      std::ostringstream os;
      os << "polytropic equilibrium undefined at (" << x[0] << ", " << x[1] << "): base " << base;
      throw ConfigError(os.str());
    }
    return std::pow(base, 1.0 / (nu - 1.0));
  };
  pair.alpha = alpha;
  pair.beta = [alpha, nu](Point x) { return std::pow(alpha(x), nu); };
  pair.params = {{"nu", nu}};
  return pair;
}

EquilibriumPair radial_general_pair() {
  EquilibriumPair pair;
  pair.name = "radial";
  pair.dim = 2;
  const Potential phi = make_potential("r2half");
  pair.phi = phi.phi;
  pair.grad_phi = phi.grad;
  pair.alpha = [](Point x) { return std::exp(-radius(x)); };
  pair.beta = [](Point x) {
    const double r = radius(x);
    return (1.0 + r) * std::exp(-r);
  };
  return pair;
}

EquilibriumPair nonisothermal_1d_pair() {
  EquilibriumPair pair;
  pair.name = "nonisothermal";
  pair.dim = 1;
  const Potential phi = make_potential("x2half");
  pair.phi = phi.phi;
  pair.grad_phi = phi.grad;
  pair.alpha = [](Point x) { return std::exp(-x[0]); };
  pair.beta = [](Point x) { return (1.0 + x[0]) * std::exp(-x[0]); };
  return pair;
}

EquilibriumPair constant_density_pair(const Potential& phi, double rho0, double p0, int dim) {
  if (!(rho0 > 0.0)) throw ConfigError("constant-density equilibrium needs rho0 > 0");
  EquilibriumPair pair;
  pair.name = "constant-density";
  pair.dim = dim;
  pair.phi = phi.phi;
  pair.grad_phi = phi.grad;
  auto f = phi.phi;
  pair.alpha = [rho0](Point) { return rho0; };
  pair.beta = [f, rho0, p0](Point x) { return p0 - rho0 * f(x); };
  pair.params = {{"rho0", rho0}, {"p0", p0}};
  return pair;
}

EquilibriumPair with_velocity(EquilibriumPair pair, double velocity) {
  if (velocity != 0.0 && pair.dim != 2)
    throw ConfigError("moving equilibria need a two-dimensional grid");
  pair.velocity = velocity;
  pair.params["velocity"] = velocity;
  return pair;
}

EquilibriumPair scaled(EquilibriumPair pair, double factor) {
  auto a = pair.alpha;
  auto b = pair.beta;
  pair.alpha = [a, factor](Point x) { return factor * a(x); };
  pair.beta = [b, factor](Point x) { return factor * b(x); };
  pair.params["scale"] = factor;
  return pair;
}

EquilibriumPair make_equilibrium(const EquilibriumSpec& spec, int dim) {
  EquilibriumPair pair;
  if (spec.name == "isothermal") {
    pair = isothermal_pair(make_potential(spec.potential), spec.param("temperature", 1.0), dim);
  } else if (spec.name == "polytropic") {
    pair = polytropic_pair(make_potential(spec.potential), spec.param("nu", 1.2), dim);
  } else if (spec.name == "nonisothermal") {
    if (dim != 1) throw ConfigError("the nonisothermal pair is one-dimensional");
    pair = nonisothermal_1d_pair();
  } else if (spec.name == "radial") {
    if (dim != 2) throw ConfigError("the radial pair is two-dimensional");
    pair = radial_general_pair();
  } else if (spec.name == "constant-density") {
    pair = constant_density_pair(make_potential(spec.potential), spec.param("rho0", 1.0),
                                 spec.param("p0", 10.0), dim);
  } else {
    throw ConfigError("unknown equilibrium '" + spec.name + "'");
  }
  return with_velocity(std::move(pair), spec.param("velocity", 0.0));
}

IdentityReport verify_equilibrium_identity(const EquilibriumPair& pair, std::span<const Point> points,
                                           double h, double tol) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  IdentityReport report;
  report.tolerance = tol;
  for (const Point& x : points) {
    const Point g = pair.grad_phi(x);
    const double a = pair.alpha(x);
    for (int k = 0; k < pair.dim; ++k) {
      Point xp = x, xm = x;
      xp[static_cast<std::size_t>(k)] += h;
      xm[static_cast<std::size_t>(k)] -= h;
      const double dbeta = (pair.beta(xp) - pair.beta(xm)) / (2.0 * h);
      const double residual = std::abs(dbeta + a * g[static_cast<std::size_t>(k)]);
      if (residual > report.max_residual) {
        report.max_residual = residual;
        report.worst = x;
      }
    }
  }
  report.passed = report.max_residual <= tol;
  return report;
}

Field project_cell_averages(const ScalarFunction& fn, const Grid& grid, int order) {
  const GaussRule& rule = gauss_legendre(gauss_nodes_for_order(order));
  Field out(grid, 1);
  const int ny = grid.dim() == 2 ? rule.size() : 1;
  CellRange::interior(grid, grid.ghost(0)).for_each([&](int i, int j) {
    double sum = 0.0;
    for (int b = 0; b < ny; ++b) {
      const double wy = grid.dim() == 2 ? rule.weights[static_cast<std::size_t>(b)] : 1.0;
      const double eta = grid.dim() == 2 ? rule.nodes[static_cast<std::size_t>(b)] : 0.0;
      double row = 0.0;
      for (int a = 0; a < rule.size(); ++a)
        row += rule.weights[static_cast<std::size_t>(a)] *
               fn(grid.local_to_physical(i, j, rule.nodes[static_cast<std::size_t>(a)], eta));
      sum += wy * row;
    }
    out(0, i, j) = sum;
  });
  return out;
}

ConservedState cell_average(const std::function<ConservedState(Point)>& fn, const Grid& grid, int i,
                            int j, int order) {
  const GaussRule& rule = gauss_legendre(gauss_nodes_for_order(order));
  const int ny = grid.dim() == 2 ? rule.size() : 1;
  ConservedState avg{0.0, {0.0, 0.0}, 0.0};
  for (int b = 0; b < ny; ++b) {
    const double wy = grid.dim() == 2 ? rule.weights[static_cast<std::size_t>(b)] : 1.0;
    const double eta = grid.dim() == 2 ? rule.nodes[static_cast<std::size_t>(b)] : 0.0;
    for (int a = 0; a < rule.size(); ++a) {
      const double w = wy * rule.weights[static_cast<std::size_t>(a)];
      const ConservedState u =
          fn(grid.local_to_physical(i, j, rule.nodes[static_cast<std::size_t>(a)], eta));
      avg.rho += w * u.rho;
      avg.m[0] += w * u.m[0];
      avg.m[1] += w * u.m[1];
      avg.E += w * u.E;
    }
  }
  return avg;
}

Field project_state_averages(const std::function<ConservedState(Point)>& fn, const Grid& grid,
                             int order) {
  const int dim = grid.dim();
  Field out(grid, dim + 2);
  CellRange::interior(grid, grid.ghost(0)).for_each([&](int i, int j) {
    const ConservedState u = cell_average(fn, grid, i, j, order);
    out(0, i, j) = u.rho;
    out(1, i, j) = u.m[0];
    if (dim == 2) out(2, i, j) = u.m[1];
    out(dim + 1, i, j) = u.E;
  });
  return out;
}

}  // namespace wbeuler
