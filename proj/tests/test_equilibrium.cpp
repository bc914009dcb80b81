#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <vector>

#include "wbeuler/equilibrium.hpp"
#include "wbeuler/errors.hpp"

using namespace wbeuler;

namespace {

std::vector<Point> samples() {
  std::vector<Point> p;
  for (int n = 1; n < 20; ++n) p.push_back({0.05 * n, 0.9 - 0.04 * n});
  return p;
}

}  // namespace

TEST(Equilibrium, IdentityForRegisteredPairs) {
  const auto pts = samples();
  const std::vector<EquilibriumPair> pairs{
      isothermal_pair(make_potential("x"), 1.0, 1),
      isothermal_pair(make_potential("x2"), 0.7, 1),
      isothermal_pair(make_potential("sin2pix"), 1.0, 1),
      polytropic_pair(make_potential("x2"), 1.2, 1),
      nonisothermal_1d_pair(),
      constant_density_pair(make_potential("x"), 2.0, 5.0, 1),
      isothermal_pair(make_potential("x+y"), 1.0 / 1.21, 2),
      polytropic_pair(make_potential("x+y"), 1.2, 2),
      radial_general_pair(),
      isothermal_pair(make_potential("r"), 1.0, 2),
      scaled(isothermal_pair(make_potential("x"), 1.0, 1), 3.0),
      with_velocity(isothermal_pair(make_potential("y"), 1.0 / 1.21, 2), 1.0),
  };
  for (const auto& p : pairs) {
    const IdentityReport r = verify_equilibrium_identity(p, pts, 1e-5, 1e-7);
    EXPECT_TRUE(r.passed) << p.name << " residual " << r.max_residual;
  }
}

TEST(Equilibrium, IsothermalValues) {
  const EquilibriumPair p = isothermal_pair(make_potential("x"), 2.0, 1);
  EXPECT_NEAR(p.alpha({1.0, 0.0}), std::exp(-0.5) / 2.0, 1e-16);
  EXPECT_NEAR(p.beta({1.0, 0.0}), std::exp(-0.5), 1e-16);
  EXPECT_THROW(isothermal_pair(make_potential("x"), 0.0, 1), ConfigError);
}

TEST(Equilibrium, PolytropicVacuumRejected) {
  const EquilibriumPair p = polytropic_pair(make_potential("x2"), 1.2, 1);
  EXPECT_NO_THROW(p.alpha({1.0, 0.0}));
  EXPECT_THROW(p.alpha({3.0, 0.0}), ConfigError);
}

TEST(Equilibrium, VelocityOnlyIn2d) {
  EXPECT_THROW(with_velocity(isothermal_pair(make_potential("x"), 1.0, 1), 1.0), ConfigError);
  const EquilibriumPair p = with_velocity(isothermal_pair(make_potential("y"), 1.0, 2), 1.0);
  const ConservedState u = p.state({0.3, 0.4}, 1.4);
  EXPECT_DOUBLE_EQ(u.m[0], u.rho);
  EXPECT_NEAR(u.E, p.beta({0.3, 0.4}) / 0.4 + 0.5 * u.rho, 1e-15);
}

TEST(Equilibrium, UnknownNames) {
  EXPECT_THROW(make_potential("cubic"), ConfigError);
  EXPECT_THROW(make_equilibrium(EquilibriumSpec{"adiabatic", "x", {}}, 1), ConfigError);
}

TEST(Equilibrium, CellAveragesAgainstKronrod) {
  const EquilibriumPair p = isothermal_pair(make_potential("sin2pix"), 1.0, 1);
  const Grid g = Grid::line(0.0, 1.0, 40, 2);
  const Field f = project_cell_averages(p.alpha, g, 12);
  for (int i = -2; i < 42; ++i) {
    const double a = g.face(0, i), b = g.face(0, i + 1);
    const double ref = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                           [&](double x) { return p.alpha({x, 0.0}); }, a, b) /
                       (b - a);
    EXPECT_NEAR(f(0, i), ref, 1e-13) << i;
  }
}

TEST(Equilibrium, CellAverage2dTensor) {
  const Grid g = Grid::rectangle({0.0, 0.0}, {1.0, 1.0}, {4, 4}, 1);
  const Field f = project_cell_averages([](Point x) { return x[0] * x[0] * x[1]; }, g, 4);
  // Cell (1, 2): x in [0.25, 0.5], y in [0.5, 0.75].
  const double ex = (0.125 - 0.015625) / 3.0 / 0.25 * (0.75 * 0.75 - 0.25) / 2.0 / 0.25;
  EXPECT_NEAR(f(0, 1, 2), ex, 1e-15);
}
