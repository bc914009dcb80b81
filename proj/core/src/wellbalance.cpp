#include "wbeuler/wellbalance.hpp"

#include <cmath>
#include <sstream>

#include "wbeuler/errors.hpp"

namespace wbeuler {

namespace {

int projection_order(int order) { return order + 2; }

void check_density(double rho, int i, int j, const char* where) {
  if (!(rho > 0.0)) {
    std::ostringstream os;
    os << "non-positive density " << rho << " in cell (" << i << ", " << j << ") at " << where;
    throw NonPhysicalState(os.str());
  }
}

// Kinetic energy average of one cell from point values of the density and momentum.
template <typename PointFn>
double kinetic_average(const NodeLayout& layout, int dim, PointFn&& point) {
  const GaussRule& rule = layout.kinetic;
  const int nb = dim == 2 ? rule.size() : 1;
  double k = 0.0;
  for (int b = 0; b < nb; ++b) {
    const double wb = dim == 2 ? rule.weights[static_cast<std::size_t>(b)] : 1.0;
    double row = 0.0;
    for (int a = 0; a < rule.size(); ++a) {
      double rho = 0.0;
      std::array<double, 2> m{};
      point(a, b, rho, m);
      row += rule.weights[static_cast<std::size_t>(a)] * 0.5 * (m[0] * m[0] + m[1] * m[1]) / rho;
    }
    k += wb * row;
  }
  return k;
}

}  // namespace

int romberg_level_for_order(int order) {
  if (order <= 2) return 0;
  if (order <= 4) return 1;
  return 2;
}

int ghost_width(int order, int dim) {
  const int r = ReconstructionOperator::for_order(order, dim).stencil_radius();
  return order <= 2 ? 1 + r : 1 + 2 * r;
}

NodeLayout NodeLayout::for_scheme(int dim, int order) {
  NodeLayout l;
  l.dim = dim;
  l.order = order;
  l.romberg_level = romberg_level_for_order(order);
  if (dim == 2)
    l.face = gauss_legendre(2);
  else
    l.face = GaussRule{{0.0}, {1.0}};
  l.kinetic = gauss_legendre(order >= 3 ? (order + 2) / 2 : 1);
  return l;
}

ConservedState PointValue::conserved(double gamma) const {
  ConservedState u;
  u.rho = rho;
  u.m = m;
  u.E = p / (gamma - 1.0) + 0.5 * (m[0] * m[0] + m[1] * m[1]) / rho;
  return u;
}

EquilibriumTables::EquilibriumTables(const Grid& grid, const EquilibriumPair& pair,
                                     const NodeLayout& layout, double gamma)
    : grid_(grid), layout_(layout) {
  const int dim = grid.dim();
  const int q = layout.order;
  const double U = pair.velocity;
  alpha_avg_ = project_cell_averages(pair.alpha, grid, projection_order(q));
  beta_avg_ = project_cell_averages(pair.beta, grid, projection_order(q));

  const int nk = layout.kinetic.size();
  kin_alpha_.assign(grid.padded_size() * static_cast<std::size_t>(nk * nk), 0.0);
  const CellRange all = CellRange::interior(grid, grid.ghost(0));
  all.for_each([&](int i, int j) {
    for (int b = 0; b < (dim == 2 ? nk : 1); ++b)
      for (int a = 0; a < nk; ++a) {
        const double eta = dim == 2 ? layout.kinetic.nodes[static_cast<std::size_t>(b)] : 0.0;
        kin_alpha_[kinetic_index(i, j, a, b)] =
            pair.alpha(grid.local_to_physical(i, j, layout.kinetic.nodes[static_cast<std::size_t>(a)], eta));
      }
  });

  state_avg_ = Field(grid, dim + 2);
  all.for_each([&](int i, int j) {
    const double a = alpha_avg_(0, i, j);
    state_avg_(0, i, j) = a;
    state_avg_(1, i, j) = U * a;
    if (dim == 2) state_avg_(2, i, j) = 0.0;
    double kin = 0.0;
    if (U != 0.0) {
      if (layout.uses_kinetic_quadrature()) {
        kin = kinetic_average(layout, dim, [&](int ka, int kb, double& rho, std::array<double, 2>& m) {
          const double al = kinetic_alpha(i, j, ka, kb);
          rho = 0.0 + al;
          m = {0.0 + U * al, 0.0};
        });
      } else {
        const double m = U * a;
        kin = 0.5 * m * m / a;
      }
    }
    state_avg_(dim + 1, i, j) = beta_avg_(0, i, j) / (gamma - 1.0) + kin;
  });

  const int np = layout.face_nodes();
  for (int k = 0; k < dim; ++k) {
    const std::size_t n = static_cast<std::size_t>(grid.cells(k) + 1) *
                          static_cast<std::size_t>(grid.cells(1 - k)) * static_cast<std::size_t>(np);
    face_alpha_[static_cast<std::size_t>(k)].resize(n);
    face_beta_[static_cast<std::size_t>(k)].resize(n);
    for (int f = 0; f <= grid.cells(k); ++f)
      for (int t = 0; t < grid.cells(1 - k); ++t)
        for (int p = 0; p < np; ++p) {
          const Point x = face_point(k, f, t, p);
          face_alpha_[static_cast<std::size_t>(k)][face_index(k, f, t, p)] = pair.alpha(x);
          face_beta_[static_cast<std::size_t>(k)][face_index(k, f, t, p)] = pair.beta(x);
        }
  }

  const int inner = layout.segment_intervals() - 1;
  if (inner > 0) {
    const std::size_t n = grid.interior_size() * static_cast<std::size_t>(dim * np * inner);
    seg_alpha_.resize(n);
    seg_beta_.resize(n);
    CellRange::interior(grid).for_each([&](int i, int j) {
      for (int k = 0; k < dim; ++k)
        for (int p = 0; p < np; ++p)
          for (int s = 1; s <= inner; ++s) {
            const Point x = segment_point(i, j, k, p, s);
            seg_alpha_[segment_index(i, j, k, p, s)] = pair.alpha(x);
            seg_beta_[segment_index(i, j, k, p, s)] = pair.beta(x);
          }
    });
  }
}

Point EquilibriumTables::face_point(int k, int f, int t, int p) const {
  const double xi = layout_.face.nodes[static_cast<std::size_t>(p)];
  if (k == 0) return grid_.local_to_physical(f, t, -0.5, xi);
  return grid_.local_to_physical(t, f, xi, -0.5);
}

Point EquilibriumTables::segment_point(int i, int j, int k, int p, int n) const {
  const double xi = layout_.face.nodes[static_cast<std::size_t>(p)];
  const double s = layout_.segment_param(n);
  if (k == 0) return grid_.local_to_physical(i, j, s, xi);
  return grid_.local_to_physical(i, j, xi, s);
}

WBPointValues::WBPointValues(const WellBalancedReconstructor& owner, std::vector<PolynomialField> polys)
    : owner_(&owner), polys_(std::move(polys)) {}

PointValue WBPointValues::at_local(int i, int j, double xi, double eta, double alpha, double beta) const {
  const int dim = owner_->grid().dim();
  PointValue v;
  const double r = polys_[0](i, j).at_local(xi, eta);
  const double m0 = polys_[1](i, j).at_local(xi, eta);
  const double m1 = dim == 2 ? polys_[2](i, j).at_local(xi, eta) : 0.0;
  const double last = polys_[static_cast<std::size_t>(dim + 1)](i, j).at_local(xi, eta);
  if (owner_->mode() == SchemeMode::well_balanced) {
    v.rho = r + alpha;
    v.m = {m0 + owner_->pair().velocity * alpha, m1};
    v.p = last + beta;
  } else {
    v.rho = r;
    v.m = {m0, m1};
    v.p = (owner_->gamma() - 1.0) * (last - 0.5 * (m0 * m0 + m1 * m1) / r);
  }
  return v;
}

PointValue WBPointValues::at(int i, int j, Point x) const {
  const Grid& g = owner_->grid();
  const Point c = g.cell_center(i, j);
  const double xi = (x[0] - c[0]) / g.dx(0);
  const double eta = g.dim() == 2 ? (x[1] - c[1]) / g.dx(1) : 0.0;
  return at_local(i, j, xi, eta, owner_->pair().alpha(x), owner_->pair().beta(x));
}

PointValue WBPointValues::face_trace(int k, int f, int t, int p, Side side) const {
  const EquilibriumTables& tab = owner_->tables();
  const double xi = tab.layout().face.nodes[static_cast<std::size_t>(p)];
  const int cell = side == Side::left ? f - 1 : f;
  const double s = side == Side::left ? 0.5 : -0.5;
  const double a = tab.face_alpha(k, f, t, p);
  const double b = tab.face_beta(k, f, t, p);
  if (k == 0) return at_local(cell, t, s, xi, a, b);
  return at_local(t, cell, xi, s, a, b);
}

PointValue WBPointValues::segment_value(int i, int j, int k, int p, int n) const {
  const EquilibriumTables& tab = owner_->tables();
  const double xi = tab.layout().face.nodes[static_cast<std::size_t>(p)];
  const double s = tab.layout().segment_param(n);
  const double a = tab.segment_alpha(i, j, k, p, n);
  const double b = tab.segment_beta(i, j, k, p, n);
  if (k == 0) return at_local(i, j, s, xi, a, b);
  return at_local(i, j, xi, s, a, b);
}

WellBalancedReconstructor::WellBalancedReconstructor(const Grid& grid, EquilibriumPair pair, int order,
                                                     double gamma, SchemeMode mode, bool limit_slopes,
                                                     CwenoParameters cweno)
    : grid_(grid),
      pair_(std::move(pair)),
      order_(order),
      gamma_(gamma),
      mode_(mode),
      op_(ReconstructionOperator::for_order(order, grid.dim(), limit_slopes).kind(), cweno),
      tables_(grid, pair_, NodeLayout::for_scheme(grid.dim(), order), gamma) {
  if (grid.ghost(0) < ghost_width(order, grid.dim())) {
    std::ostringstream os;
    os << "order " << order << " needs " << ghost_width(order, grid.dim()) << " ghost layers, grid has "
       << grid.ghost(0);
    throw ConfigError(os.str());
  }
}

FluctuationAverages WellBalancedReconstructor::fluctuation_averages(const Field& cons) const {
  if (!(cons.grid() == grid_)) throw GridMismatch("state and reconstructor grids differ");
  const int dim = grid_.dim();
  const double U = pair_.velocity;
  const Field& abar = tables_.alpha_avg();
  const Field& bbar = tables_.beta_avg();

  FluctuationAverages f{Field(grid_, 1), Field(grid_, dim), Field(grid_, 1), {}};
  CellRange::interior(grid_, grid_.ghost(0)).for_each([&](int i, int j) {
    f.density(0, i, j) = cons(0, i, j) - abar(0, i, j);
    f.momentum(0, i, j) = cons(1, i, j) - U * abar(0, i, j);
    if (dim == 2) f.momentum(1, i, j) = cons(2, i, j);
  });

  const CellRange prange = pressure_range();
  if (!layout().uses_kinetic_quadrature()) {
    prange.for_each([&](int i, int j) {
      const double rho = cons(0, i, j);
      check_density(rho, i, j, "pressure average");
      double m2 = cons(1, i, j) * cons(1, i, j);
      if (dim == 2) m2 += cons(2, i, j) * cons(2, i, j);
      f.pressure(0, i, j) = (gamma_ - 1.0) * (cons(dim + 1, i, j) - 0.5 * m2 / rho) - bbar(0, i, j);
    });
    return f;
  }

  f.cached.push_back(op_.reconstruct(f.density, 0, prange));
  for (int c = 0; c < dim; ++c) f.cached.push_back(op_.reconstruct(f.momentum, c, prange));
  const NodeLayout& lay = layout();
  prange.for_each([&](int i, int j) {
    const double kin = kinetic_average(lay, dim, [&](int a, int b, double& rho, std::array<double, 2>& m) {
      const double xi = lay.kinetic.nodes[static_cast<std::size_t>(a)];
      const double eta = dim == 2 ? lay.kinetic.nodes[static_cast<std::size_t>(b)] : 0.0;
      const double al = tables_.kinetic_alpha(i, j, a, b);
      rho = f.cached[0](i, j).at_local(xi, eta) + al;
      check_density(rho, i, j, "kinetic energy node");
      m = {f.cached[1](i, j).at_local(xi, eta) + U * al,
           dim == 2 ? f.cached[2](i, j).at_local(xi, eta) : 0.0};
    });
    f.pressure(0, i, j) = (gamma_ - 1.0) * (cons(dim + 1, i, j) - kin) - bbar(0, i, j);
  });
  return f;
}

WBPointValues WellBalancedReconstructor::reconstruct(FluctuationAverages fluct) const {
  const int dim = grid_.dim();
  const CellRange range = flux_range();
  std::vector<PolynomialField> polys;
  if (fluct.cached.size() == static_cast<std::size_t>(dim + 1)) {
    polys = std::move(fluct.cached);
  } else {
    polys.push_back(op_.reconstruct(fluct.density, 0, range));
    for (int c = 0; c < dim; ++c) polys.push_back(op_.reconstruct(fluct.momentum, c, range));
  }
  polys.push_back(op_.reconstruct(fluct.pressure, 0, range));
  return WBPointValues(*this, std::move(polys));
}

WBPointValues WellBalancedReconstructor::reconstruct_unbalanced(const Field& cons) const {
  if (!(cons.grid() == grid_)) throw GridMismatch("state and reconstructor grids differ");
  const CellRange range = flux_range();
  std::vector<PolynomialField> polys;
  for (int c = 0; c < cons.components(); ++c) polys.push_back(op_.reconstruct(cons, c, range));
  return WBPointValues(*this, std::move(polys));
}

WBPointValues WellBalancedReconstructor::point_values(const Field& cons) const {
  if (mode_ == SchemeMode::unbalanced) return reconstruct_unbalanced(cons);
  return reconstruct(fluctuation_averages(cons));
}

}  // namespace wbeuler
