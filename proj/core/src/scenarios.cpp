#include "wbeuler/scenarios.hpp"

#include <cmath>
#include <numbers>

#include "wbeuler/errors.hpp"
#include "wbeuler/quadrature.hpp"

namespace wbeuler {

using std::numbers::pi;

PrimitiveState manufactured_1d(double x, double t, double k, double u0) {
  const double s = x - u0 * t;
  PrimitiveState w;
  w.rho = 1.0 + 0.2 * std::sin(k * pi * s);
  w.v = {u0, 0.0};
  w.p = 4.5 - s + std::cos(k * pi * s) / (5.0 * k * pi);
  return w;
}

PrimitiveState manufactured_2d(Point x, double t, double k, double u0, double v0) {
  const double s = x[0] + x[1] - (u0 + v0) * t;
  PrimitiveState w;
  w.rho = 1.0 + 0.2 * std::sin(k * pi * s);
  w.v = {u0, v0};
  w.p = 4.5 - s + std::cos(k * pi * s) / (5.0 * k * pi);
  return w;
}

PrimitiveState perturbed_isothermal_1d(double x, double amplitude) {
  const double e = std::exp(-x * x);
  const double d = x - 0.5;
  return {e, {0.0, 0.0}, e + amplitude * std::exp(-100.0 * d * d)};
}

PrimitiveState perturbed_isothermal_2d(Point x, double amplitude, double t_eq) {
  const double e = std::exp(-(x[0] + x[1]) / t_eq);
  const double dx = x[0] - 0.3, dy = x[1] - 0.3;
  return {e / t_eq, {0.0, 0.0}, e + amplitude * std::exp(-100.0 * (dx * dx + dy * dy) / t_eq)};
}

double RayleighTaylor::a() const { return std::exp(-r0) / (std::exp(-r0) + drho); }

double RayleighTaylor::interface_radius(double theta) const {
  return r0 * (1.0 + eta * std::cos(k * theta));
}

PrimitiveState RayleighTaylor::operator()(Point x) const {
  const double r = std::hypot(x[0], x[1]);
  const double theta = std::atan2(x[1], x[0]);
  const double aa = a();
  const double outer = std::exp((-r + r0 * (1.0 - aa)) / aa);
  PrimitiveState w;
  w.v = {0.0, 0.0};
  w.rho = r < interface_radius(theta) ? std::exp(-r) : outer / aa;
  w.p = r < r0 ? std::exp(-r) : outer;
  return w;
}

double sound_crossing_time(const std::function<double(double)>& sound_speed, double a, double b) {
  return 2.0 * composite_gauss(
                   [&](double x) {
                     const double c = sound_speed(x);
                     if (!(c > 0.0)) throw NonPhysicalState("sound speed vanishes");
                     return 1.0 / c;
                   },
                   a, b, 64, 8);
}

double average_temperature(const std::function<PrimitiveState(Point)>& state, Point lo, Point hi,
                           int dim) {
  const GaussRule& rule = gauss_legendre(8);
  const int panels = 64;
  const int ny = dim == 2 ? panels : 1;
  const double hx = (hi[0] - lo[0]) / panels;
  const double hy = (hi[1] - lo[1]) / panels;
  double sum = 0.0;
  for (int py = 0; py < ny; ++py)
    for (int b = 0; b < (dim == 2 ? rule.size() : 1); ++b) {
      const double wy = dim == 2 ? rule.weights[static_cast<std::size_t>(b)] / ny : 1.0;
      const double y = dim == 2 ? lo[1] + (py + 0.5 + rule.nodes[static_cast<std::size_t>(b)]) * hy : 0.0;
      for (int px = 0; px < panels; ++px)
        for (int a = 0; a < rule.size(); ++a) {
          const double x = lo[0] + (px + 0.5 + rule.nodes[static_cast<std::size_t>(a)]) * hx;
          const PrimitiveState w = state({x, y});
          sum += wy * rule.weights[static_cast<std::size_t>(a)] / panels * w.p / w.rho;
        }
    }
  return sum;
}

}  // namespace wbeuler
