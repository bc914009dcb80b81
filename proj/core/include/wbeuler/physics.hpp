#pragma once

#include <array>
#include <cstddef>

namespace wbeuler {

/// Density, momentum and total energy. In 1D only m[0] is used.
struct ConservedState {
  double rho = 1.0;
  std::array<double, 2> m{0.0, 0.0};
  double E = 0.0;
};

struct PrimitiveState {
  double rho = 1.0;
  std::array<double, 2> v{0.0, 0.0};
  double p = 1.0;
};

/// Conserved/flux vector (rho, m_1..m_d, E) with d + 2 live entries.
struct StateVector {
  int dim = 1;
  std::array<double, 4> v{};

  std::size_t size() const { return static_cast<std::size_t>(dim) + 2; }
  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
};

StateVector to_vector(const ConservedState& u, int dim);
ConservedState from_vector(const StateVector& v);

/// (gamma - 1) (E - |m|^2 / (2 rho)). Throws NonPhysicalState if rho <= 0;
/// a non-positive result is returned as is for the caller to judge.
double pressure(const ConservedState& u, double gamma);

/// rho > 0 and pressure > 0.
bool is_physical(const ConservedState& u, double gamma);

/// E = p / (gamma - 1) + rho |v|^2 / 2.
ConservedState conserved_from_primitive(const PrimitiveState& w, double gamma);
PrimitiveState primitive_from_conserved(const ConservedState& u, double gamma);

/// Physical flux along direction k: (rho v_k, rho v_k v + p e_k, v_k (E + p)).
StateVector euler_flux(const ConservedState& u, double gamma, int k, int dim);

/// |v_k| + sqrt(gamma p / rho).
double max_wave_speed(const ConservedState& u, double gamma, int k);

/// Local Lax-Friedrichs flux between the state left of the face (ul) and the
/// state right of it (ur): (f(ul) + f(ur)) / 2 - mu (ur - ul) / 2 with mu the
/// larger of the two max wave speeds. rusanov_flux(u, u) == euler_flux(u).
StateVector rusanov_flux(const ConservedState& ul, const ConservedState& ur, double gamma, int k,
                         int dim);

}  // namespace wbeuler
