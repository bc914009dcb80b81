#include "wbeuler/time_integrator.hpp"

namespace wbeuler {

std::string TimeIntegrator::name() const {
  switch (kind) {
    case IntegratorKind::forward_euler: return "forward-euler";
    case IntegratorKind::ssp_rk2: return "ssp-rk2";
    case IntegratorKind::ssp_rk3: return "ssp-rk3";
  }
  return "unknown";
}

TimeIntegrator TimeIntegrator::forward_euler() {
  TimeIntegrator t;
  t.kind = IntegratorKind::forward_euler;
  t.a = {{}};
  t.b = {1.0};
  t.c = {0.0};
  t.shu_osher_alpha = {{1.0}};
  t.shu_osher_beta = {{1.0}};
  return t;
}

TimeIntegrator TimeIntegrator::ssp_rk2() {
  TimeIntegrator t;
  t.kind = IntegratorKind::ssp_rk2;
  t.a = {{}, {1.0}};
  t.b = {0.5, 0.5};
  t.c = {0.0, 1.0};
  t.shu_osher_alpha = {{1.0}, {0.5, 0.5}};
  t.shu_osher_beta = {{1.0}, {0.0, 0.5}};
  return t;
}

TimeIntegrator TimeIntegrator::ssp_rk3() {
  TimeIntegrator t;
  t.kind = IntegratorKind::ssp_rk3;
  t.a = {{}, {1.0}, {0.25, 0.25}};
  t.b = {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0};
  t.c = {0.0, 1.0, 0.5};
  t.shu_osher_alpha = {{1.0}, {0.75, 0.25}, {1.0 / 3.0, 0.0, 2.0 / 3.0}};
  t.shu_osher_beta = {{1.0}, {0.0, 0.25}, {0.0, 0.0, 2.0 / 3.0}};
  return t;
}

TimeIntegrator TimeIntegrator::for_order(int order) {
  if (order <= 1) return forward_euler();
  if (order == 2) return ssp_rk2();
  return ssp_rk3();
}

}  // namespace wbeuler
