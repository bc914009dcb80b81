#pragma once

#include <functional>

#include "wbeuler/boundary.hpp"
#include "wbeuler/config.hpp"
#include "wbeuler/equilibrium.hpp"
#include "wbeuler/field.hpp"
#include "wbeuler/time_integrator.hpp"
#include "wbeuler/wellbalance.hpp"

namespace wbeuler {

/// A configured finite-volume scheme on one grid: reconstruction pipeline,
/// numerical flux, source quadrature, boundaries and time stepping.
class Scheme {
 public:
  /// The grid's halo must be at least ghost_width(order, dim).
  Scheme(const Grid& grid, RunConfig config, EquilibriumPair pair, ExactSolution exact = {});

  /// Grid with the halo this configuration needs.
  static Grid make_grid(Point lo, Point hi, std::array<int, 2> n, int dim, int order);

  const Grid& grid() const { return grid_; }
  const RunConfig& config() const { return config_; }
  const EquilibriumPair& pair() const { return reconstructor_.pair(); }
  const WellBalancedReconstructor& reconstructor() const { return reconstructor_; }
  int state_components() const { return grid_.dim() + 2; }

  /// Cell averages of a pointwise conserved state, accurate to order q + 2.
  Field project(const std::function<ConservedState(Point)>& fn) const;
  /// Cell averages of a primitive state, accurate to order q + 2.
  Field project_primitive(const std::function<PrimitiveState(Point)>& fn) const;
  /// Equilibrium cell averages (alpha, U alpha, 0, beta/(gamma-1) + U^2 alpha/2).
  const Field& equilibrium_state() const { return reconstructor_.tables().state_avg(); }

  void apply_boundary(Field& state, double t) const;

  /// dU/dt for every interior cell; ghosts of `state` must be filled.
  /// Throws NonPhysicalState with the offending location.
  Field rhs(const Field& state, double t) const;

  /// c min(dx) / sum_k max_k |v_k| + c_s over interior cells, optionally
  /// scaled by min(dx)^(q/3 - 1) for q > 3.
  double stable_dt(const Field& state) const;

  /// One step of `integrator`; fills ghosts before every stage.
  void advance(const TimeIntegrator& integrator, Field& state, double t, double dt) const;

  struct EvolveStats {
    int steps = 0;
    double time = 0.0;
  };
  using StepObserver = std::function<void(const Field&, double t, int step)>;

  /// Advance from t0 to t_final with CFL steps; the last step lands on t_final.
  EvolveStats evolve(Field& state, double t0, double t_final, const TimeIntegrator& integrator,
                     const StepObserver& observer = {}) const;
  /// evolve() to config().final_time with the integrator paired with the order.
  EvolveStats evolve(Field& state) const;

 private:
  void add_flux_divergence(const WBPointValues& values, Field& out) const;

  Grid grid_;
  RunConfig config_;
  WellBalancedReconstructor reconstructor_;
  ExactSolution exact_;
};

}  // namespace wbeuler
