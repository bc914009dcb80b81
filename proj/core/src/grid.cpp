#include "wbeuler/grid.hpp"

#include <algorithm>
#include <sstream>

#include "wbeuler/errors.hpp"

namespace wbeuler {

namespace {

void check_direction(double lo, double hi, int n) {
  if (n < 1) throw ConfigError("grid needs at least one cell per direction");
  if (!(hi > lo)) {
    std::ostringstream os;
    os << "grid bounds must satisfy lo < hi, got [" << lo << ", " << hi << "]";
    throw ConfigError(os.str());
  }
}

}  // namespace

Grid Grid::line(double lo, double hi, int n, int ghost) {
  check_direction(lo, hi, n);
  if (ghost < 0) throw ConfigError("negative ghost width");
  Grid g;
  g.dim_ = 1;
  g.lo_ = {lo, 0.0};
  g.hi_ = {hi, 1.0};
  g.n_ = {n, 1};
  g.dx_ = {(hi - lo) / n, 1.0};
  g.ghost_ = ghost;
  return g;
}

Grid Grid::rectangle(Point lo, Point hi, std::array<int, 2> n, int ghost) {
  check_direction(lo[0], hi[0], n[0]);
  check_direction(lo[1], hi[1], n[1]);
  if (ghost < 0) throw ConfigError("negative ghost width");
  Grid g;
  g.dim_ = 2;
  g.lo_ = lo;
  g.hi_ = hi;
  g.n_ = n;
  g.dx_ = {(hi[0] - lo[0]) / n[0], (hi[1] - lo[1]) / n[1]};
  g.ghost_ = ghost;
  return g;
}

double Grid::min_dx() const { return dim_ == 1 ? dx_[0] : std::min(dx_[0], dx_[1]); }

double Grid::cell_volume() const { return dim_ == 1 ? dx_[0] : dx_[0] * dx_[1]; }

Point Grid::local_to_physical(int i, int j, double xi, double eta) const {
  Point x{lo_[0] + (i + 0.5 + xi) * dx_[0], 0.0};
  if (dim_ == 2) x[1] = lo_[1] + (j + 0.5 + eta) * dx_[1];
  return x;
}

Point Grid::cell_center(int i, int j) const {
  return {center(0, i), dim_ == 2 ? center(1, j) : 0.0};
}

bool Grid::operator==(const Grid& other) const {
  return dim_ == other.dim_ && lo_ == other.lo_ && hi_ == other.hi_ && n_ == other.n_ &&
         ghost_ == other.ghost_;
}

CellRange CellRange::interior(const Grid& grid, int halo) {
  CellRange r;
  for (int k = 0; k < 2; ++k) {
    const int h = k < grid.dim() ? halo : 0;
    r.begin[k] = -h;
    r.end[k] = grid.cells(k) + h;
  }
  return r;
}

}  // namespace wbeuler
