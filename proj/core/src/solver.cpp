#include "wbeuler/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wbeuler/errors.hpp"
#include "wbeuler/source.hpp"

namespace wbeuler {

namespace {

void check_trace(const PointValue& v, int k, int f, int t, int p, Side side) {
  if (v.rho > 0.0 && v.p > 0.0) return;
  std::ostringstream os;
  os << "non-physical " << (side == Side::left ? "left" : "right") << " trace (rho " << v.rho
     << ", p " << v.p << ") at face " << f << " of direction " << k << ", transverse cell " << t
     << ", node " << p;
  throw NonPhysicalState(os.str());
}

}  // namespace

Scheme::Scheme(const Grid& grid, RunConfig config, EquilibriumPair pair, ExactSolution exact)
    : grid_(grid),
      config_((config.validate(grid.dim()), std::move(config))),
      reconstructor_(grid, std::move(pair), config_.order, config_.gamma, config_.mode, config_.limit_slopes),
      exact_(std::move(exact)) {
  if (reconstructor_.pair().dim != grid.dim())
    throw ConfigError("equilibrium dimension does not match the grid");
  if (config_.boundary.uses(BoundaryKind::exact) && !exact_)
    throw ConfigError("exact boundaries need an exact solution");
}

Grid Scheme::make_grid(Point lo, Point hi, std::array<int, 2> n, int dim, int order) {
  const int g = ghost_width(order, dim);
  if (dim == 1) return Grid::line(lo[0], hi[0], n[0], g);
  return Grid::rectangle(lo, hi, n, g);
}

Field Scheme::project(const std::function<ConservedState(Point)>& fn) const {
  return project_state_averages(fn, grid_, config_.order + 2);
}

Field Scheme::project_primitive(const std::function<PrimitiveState(Point)>& fn) const {
  const double gamma = config_.gamma;
  return project([&](Point x) { return conserved_from_primitive(fn(x), gamma); });
}

void Scheme::apply_boundary(Field& state, double t) const {
  BoundaryData data;
  data.equilibrium = &equilibrium_state();
  data.exact = exact_;
  data.projection_order = config_.order + 2;
  wbeuler::apply_boundary(state, config_.boundary, data, t);
}

void Scheme::add_flux_divergence(const WBPointValues& values, Field& out) const {
  const int dim = grid_.dim();
  const double gamma = config_.gamma;
  const GaussRule& face = reconstructor_.layout().face;
  std::vector<StateVector> flux;
  for (int k = 0; k < dim; ++k) {
    const int nf = grid_.cells(k) + 1;
    const int nt = grid_.cells(1 - k);
    flux.assign(static_cast<std::size_t>(nf) * static_cast<std::size_t>(nt), StateVector{dim, {}});
    for (int t = 0; t < nt; ++t)
      for (int f = 0; f < nf; ++f) {
        StateVector& F = flux[static_cast<std::size_t>(t) * static_cast<std::size_t>(nf) +
                              static_cast<std::size_t>(f)];
        for (int p = 0; p < face.size(); ++p) {
          const PointValue l = values.face_trace(k, f, t, p, Side::left);
          const PointValue r = values.face_trace(k, f, t, p, Side::right);
          check_trace(l, k, f, t, p, Side::left);
          check_trace(r, k, f, t, p, Side::right);
          const StateVector g = rusanov_flux(l.conserved(gamma), r.conserved(gamma), gamma, k, dim);
          for (std::size_t c = 0; c < F.size(); ++c)
            F[c] += face.weights[static_cast<std::size_t>(p)] * g[c];
        }
      }
    const double h = grid_.dx(k);
    CellRange::interior(grid_).for_each([&](int i, int j) {
      const int f = k == 0 ? i : j;
      const int t = k == 0 ? j : i;
      const std::size_t base = static_cast<std::size_t>(t) * static_cast<std::size_t>(nf);
      const StateVector& lo = flux[base + static_cast<std::size_t>(f)];
      const StateVector& hi = flux[base + static_cast<std::size_t>(f) + 1];
      for (std::size_t c = 0; c < lo.size(); ++c)
        out(static_cast<int>(c), i, j) -= (hi[c] - lo[c]) / h;
    });
  }
}

Field Scheme::rhs(const Field& state, double /*t*/) const {
  if (!(state.grid() == grid_)) throw GridMismatch("state grid differs from the scheme grid");
  const WBPointValues values = reconstructor_.point_values(state);
  Field out(grid_, state_components());
  out.fill(0.0);
  add_flux_divergence(values, out);
  CellRange::interior(grid_).for_each([&](int i, int j) {
    const StateVector s = source_cell(values, i, j);
    for (std::size_t c = 0; c < s.size(); ++c) out(static_cast<int>(c), i, j) += s[c];
  });
  return out;
}

double Scheme::stable_dt(const Field& state) const {
  const int dim = grid_.dim();
  std::array<double, 2> speed{0.0, 0.0};
  CellRange::interior(grid_).for_each([&](int i, int j) {
    ConservedState u;
    u.rho = state(0, i, j);
    u.m = {state(1, i, j), dim == 2 ? state(2, i, j) : 0.0};
    u.E = state(dim + 1, i, j);
    if (!is_physical(u, config_.gamma)) {
      std::ostringstream os;
      os << "non-physical cell average (rho " << u.rho << ") in cell (" << i << ", " << j << ")";
      throw NonPhysicalState(os.str());
    }
    for (int k = 0; k < dim; ++k)
      speed[static_cast<std::size_t>(k)] =
          std::max(speed[static_cast<std::size_t>(k)], max_wave_speed(u, config_.gamma, k));
  });
  double dt = config_.cfl * grid_.min_dx() / (speed[0] + speed[1]);
  if (config_.scale_time_step && config_.order > 3)
    dt *= std::pow(grid_.min_dx(), config_.order / 3.0 - 1.0);
  return dt;
}

void Scheme::advance(const TimeIntegrator& integrator, Field& state, double t, double dt) const {
  const int s = integrator.stages();
  std::vector<Field> k;
  k.reserve(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    Field stage = state;
    for (int l = 0; l < i; ++l) {
      const double a = integrator.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
      if (a != 0.0) stage.axpy(dt * a, k[static_cast<std::size_t>(l)]);
    }
    const double ts = t + integrator.c[static_cast<std::size_t>(i)] * dt;
    apply_boundary(stage, ts);
    k.push_back(rhs(stage, ts));
  }
  for (int i = 0; i < s; ++i) state.axpy(dt * integrator.b[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(i)]);
  apply_boundary(state, t + dt);
}

Scheme::EvolveStats Scheme::evolve(Field& state, double t0, double t_final,
                                   const TimeIntegrator& integrator, const StepObserver& observer) const {
  EvolveStats stats;
  double t = t0;
  apply_boundary(state, t);
  while (t < t_final) {
    double dt = stable_dt(state);
    if (!(dt > 0.0) || !std::isfinite(dt)) throw NonPhysicalState("time step collapsed");
    const bool last = t + dt >= t_final - 1e-12 * std::max(1.0, std::abs(t_final));
    if (last) dt = t_final - t;
    advance(integrator, state, t, dt);
    t = last ? t_final : t + dt;
    ++stats.steps;
    if (observer) observer(state, t, stats.steps);
  }
  stats.time = t;
  return stats;
}

Scheme::EvolveStats Scheme::evolve(Field& state) const {
  return evolve(state, 0.0, config_.final_time, TimeIntegrator::for_order(config_.order));
}

}  // namespace wbeuler
