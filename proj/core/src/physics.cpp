#include "wbeuler/physics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wbeuler/errors.hpp"

namespace wbeuler {

StateVector to_vector(const ConservedState& u, int dim) {
  StateVector s;
  s.dim = dim;
  s[0] = u.rho;
  for (int k = 0; k < dim; ++k) s[static_cast<std::size_t>(1 + k)] = u.m[static_cast<std::size_t>(k)];
  s[static_cast<std::size_t>(dim + 1)] = u.E;
  return s;
}

ConservedState from_vector(const StateVector& v) {
  ConservedState u;
  u.rho = v[0];
  u.m = {v[1], v.dim == 2 ? v[2] : 0.0};
  u.E = v[static_cast<std::size_t>(v.dim + 1)];
  return u;
}

double pressure(const ConservedState& u, double gamma) {
  if (!(u.rho > 0.0)) {
    std::ostringstream os;
    os << "non-positive density " << u.rho;
    throw NonPhysicalState(os.str());
  }
  const double m2 = u.m[0] * u.m[0] + u.m[1] * u.m[1];
  return (gamma - 1.0) * (u.E - 0.5 * m2 / u.rho);
}

bool is_physical(const ConservedState& u, double gamma) {
  return u.rho > 0.0 && pressure(u, gamma) > 0.0;
}

ConservedState conserved_from_primitive(const PrimitiveState& w, double gamma) {
  ConservedState u;
  u.rho = w.rho;
  u.m = {w.rho * w.v[0], w.rho * w.v[1]};
  u.E = w.p / (gamma - 1.0) + 0.5 * w.rho * (w.v[0] * w.v[0] + w.v[1] * w.v[1]);
  return u;
}

PrimitiveState primitive_from_conserved(const ConservedState& u, double gamma) {
  PrimitiveState w;
  w.p = pressure(u, gamma);
  w.rho = u.rho;
  w.v = {u.m[0] / u.rho, u.m[1] / u.rho};
  return w;
}

StateVector euler_flux(const ConservedState& u, double gamma, int k, int dim) {
  const double p = pressure(u, gamma);
  const double vk = u.m[static_cast<std::size_t>(k)] / u.rho;
  StateVector f;
  f.dim = dim;
  f[0] = u.m[static_cast<std::size_t>(k)];
  for (int d = 0; d < dim; ++d) f[static_cast<std::size_t>(1 + d)] = vk * u.m[static_cast<std::size_t>(d)];
  f[static_cast<std::size_t>(1 + k)] += p;
  f[static_cast<std::size_t>(dim + 1)] = vk * (u.E + p);
  return f;
}

double max_wave_speed(const ConservedState& u, double gamma, int k) {
  const double p = pressure(u, gamma);
  if (!(p > 0.0)) {
    std::ostringstream os;
    os << "non-positive pressure " << p << " in wave speed";
    throw NonPhysicalState(os.str());
  }
  return std::abs(u.m[static_cast<std::size_t>(k)] / u.rho) + std::sqrt(gamma * p / u.rho);
}

StateVector rusanov_flux(const ConservedState& ul, const ConservedState& ur, double gamma, int k,
                         int dim) {
  const StateVector fl = euler_flux(ul, gamma, k, dim);
  const StateVector fr = euler_flux(ur, gamma, k, dim);
  const double mu = std::max(max_wave_speed(ul, gamma, k), max_wave_speed(ur, gamma, k));
  const StateVector a = to_vector(ul, dim);
  const StateVector b = to_vector(ur, dim);
  StateVector f;
  f.dim = dim;
  for (std::size_t c = 0; c < f.size(); ++c) f[c] = 0.5 * (fl[c] + fr[c]) - 0.5 * mu * (b[c] - a[c]);
  return f;
}

}  // namespace wbeuler
