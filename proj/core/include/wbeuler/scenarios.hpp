#pragma once

#include <functional>

#include "wbeuler/grid.hpp"
#include "wbeuler/physics.hpp"

namespace wbeuler {

/// Advected sine profile in hydrostatic balance with phi = x:
/// rho = 1 + sin(k pi s)/5, v = u0, p = 9/2 - s + cos(k pi s)/(5 k pi), s = x - u0 t.
PrimitiveState manufactured_1d(double x, double t, double k, double u0);

/// Same profile along x + y with velocity (u0, v0) and phi = x + y.
PrimitiveState manufactured_2d(Point x, double t, double k, double u0, double v0);

/// Isothermal rest state for phi = x^2 (T = 1) plus a pressure bump
/// A exp(-100 (x - 1/2)^2).
PrimitiveState perturbed_isothermal_1d(double x, double amplitude);

/// Isothermal rest state for phi = x + y at temperature t_eq plus
/// A exp(-100 ((x - 0.3)^2 + (y - 0.3)^2) / t_eq) in the pressure.
PrimitiveState perturbed_isothermal_2d(Point x, double amplitude, double t_eq);

/// Radial density interface over the rest state rho = p = exp(-r) of phi = r.
/// The density jumps by drho across r_I(theta) = r0 (1 + eta cos(k theta));
/// the pressure changes law at r0 and stays continuous there.
struct RayleighTaylor {
  double r0 = 0.5;
  double k = 20.0;
  double eta = 0.02;
  double drho = 0.1;

  double a() const;
  double interface_radius(double theta) const;
  PrimitiveState operator()(Point x) const;
};

/// 2 * integral of dx / c(x) over [a, b]. Throws NonPhysicalState if c <= 0.
double sound_crossing_time(const std::function<double(double)>& sound_speed, double a, double b);

/// Mean of p / rho over the box [lo, hi] (1D uses the x extent only).
double average_temperature(const std::function<PrimitiveState(Point)>& state, Point lo, Point hi,
                           int dim);

}  // namespace wbeuler
