#include "wbeuler/boundary.hpp"

#include "wbeuler/equilibrium.hpp"
#include "wbeuler/errors.hpp"

namespace wbeuler {

namespace {

void fill_cell(Field& state, BoundaryKind kind, const BoundaryData& data, double t, int i, int j,
               int src_i, int src_j, int wrap_i, int wrap_j) {
  const Grid& g = state.grid();
  const int nc = state.components();
  switch (kind) {
    case BoundaryKind::periodic:
      for (int c = 0; c < nc; ++c) state(c, i, j) = state(c, wrap_i, wrap_j);
      return;
    case BoundaryKind::extrapolation:
      for (int c = 0; c < nc; ++c) state(c, i, j) = state(c, src_i, src_j);
      return;
    case BoundaryKind::equilibrium:
      for (int c = 0; c < nc; ++c) state(c, i, j) = (*data.equilibrium)(c, i, j);
      return;
    case BoundaryKind::exact: {
      const ConservedState u = cell_average(
          [&](Point x) { return data.exact(x, t); }, g, i, j, data.projection_order);
      const StateVector v = to_vector(u, g.dim());
      for (int c = 0; c < nc; ++c) state(c, i, j) = v[static_cast<std::size_t>(c)];
      return;
    }
  }
}

}  // namespace

void apply_boundary(Field& state, const BoundarySpec& spec, const BoundaryData& data, double t) {
  if (spec.uses(BoundaryKind::equilibrium) && data.equilibrium == nullptr)
    throw ConfigError("equilibrium boundary without equilibrium averages");
  if (spec.uses(BoundaryKind::exact) && !data.exact)
    throw ConfigError("exact boundary without an exact solution");
  const Grid& g = state.grid();
  const int nx = g.cells(0), gx = g.ghost(0);
  for (int j = 0; j < g.cells(1); ++j)
    for (int l = 1; l <= gx; ++l) {
      fill_cell(state, spec.sides[0], data, t, -l, j, 0, j, nx - l, j);
      fill_cell(state, spec.sides[1], data, t, nx - 1 + l, j, nx - 1, j, l - 1, j);
    }
  if (g.dim() < 2) return;
  const int ny = g.cells(1), gy = g.ghost(1);
  for (int i = -gx; i < nx + gx; ++i)
    for (int l = 1; l <= gy; ++l) {
      fill_cell(state, spec.sides[2], data, t, i, -l, i, 0, i, ny - l);
      fill_cell(state, spec.sides[3], data, t, i, ny - 1 + l, i, ny - 1, i, l - 1);
    }
}

}  // namespace wbeuler
