#pragma once

#include <string>
#include <vector>

namespace wbeuler {

enum class IntegratorKind { forward_euler, ssp_rk2, ssp_rk3 };

/// Explicit SSP Runge-Kutta method.
///
/// Stages are applied in the increment form U_i = U_n + dt sum_k a_ik L(U_k),
/// which at a steady state leaves U_n untouched. The equivalent Shu-Osher
/// convex-combination coefficients are kept for inspection.
struct TimeIntegrator {
  IntegratorKind kind = IntegratorKind::ssp_rk3;
  std::vector<std::vector<double>> a;  ///< Butcher matrix (strictly lower)
  std::vector<double> b;
  std::vector<double> c;
  std::vector<std::vector<double>> shu_osher_alpha;
  std::vector<std::vector<double>> shu_osher_beta;

  int stages() const { return static_cast<int>(b.size()); }
  std::string name() const;

  static TimeIntegrator forward_euler();
  static TimeIntegrator ssp_rk2();
  static TimeIntegrator ssp_rk3();
  /// q = 1: forward Euler, q = 2: Heun, q >= 3: SSP-RK3.
  static TimeIntegrator for_order(int order);
};

}  // namespace wbeuler
