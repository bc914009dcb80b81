#pragma once

#include <array>
#include <cstddef>

namespace wbeuler {

/// Physical point. One-dimensional runs leave the second coordinate at 0.
using Point = std::array<double, 2>;

/// Uniform Cartesian mesh in one or two dimensions with a ghost halo.
///
/// Cell indices are signed and relative to the first interior cell:
/// interior cells of direction k are 0..n(k)-1 and ghosts extend to
/// -ghost(k) and n(k)+ghost(k)-1. A 1D grid has a single row (j = 0) and
/// no ghosts in the second direction.
///
/// All coordinates are computed as lo + index * dx so that the same face
/// or center is reproduced bitwise regardless of which cell asks for it.
class Grid {
 public:
  static Grid line(double lo, double hi, int n, int ghost);
  static Grid rectangle(Point lo, Point hi, std::array<int, 2> n, int ghost);

  int dim() const { return dim_; }
  int cells(int k) const { return n_[k]; }
  int ghost(int k) const { return k < dim_ ? ghost_ : 0; }
  double lo(int k) const { return lo_[k]; }
  double hi(int k) const { return hi_[k]; }
  double dx(int k) const { return dx_[k]; }
  double min_dx() const;
  double cell_volume() const;

  /// Center of cell i along direction k.
  double center(int k, int i) const { return lo_[k] + (i + 0.5) * dx_[k]; }
  /// Face f along direction k, i.e. the left face of cell f (x_{f-1/2}).
  double face(int k, int f) const { return lo_[k] + f * dx_[k]; }
  /// Point at local coordinates (xi, eta) in [-1/2, 1/2]^2 of cell (i, j).
  Point local_to_physical(int i, int j, double xi, double eta = 0.0) const;
  Point cell_center(int i, int j = 0) const;

  int padded(int k) const { return n_[k] + 2 * ghost(k); }
  std::size_t padded_size() const {
    return static_cast<std::size_t>(padded(0)) * static_cast<std::size_t>(padded(1));
  }
  std::size_t interior_size() const {
    return static_cast<std::size_t>(n_[0]) * static_cast<std::size_t>(n_[1]);
  }
  std::size_t index(int i, int j = 0) const {
    return static_cast<std::size_t>(j + ghost(1)) * static_cast<std::size_t>(padded(0)) +
           static_cast<std::size_t>(i + ghost(0));
  }
  bool is_interior(int i, int j = 0) const {
    return i >= 0 && i < n_[0] && j >= 0 && j < n_[1];
  }

  /// Same geometry and halo.
  bool operator==(const Grid& other) const;

 private:
  int dim_ = 1;
  std::array<double, 2> lo_{0.0, 0.0};
  std::array<double, 2> hi_{1.0, 1.0};
  std::array<int, 2> n_{1, 1};
  std::array<double, 2> dx_{1.0, 1.0};
  int ghost_ = 0;
};

/// Inclusive-exclusive box of cell indices, possibly reaching into the halo.
struct CellRange {
  std::array<int, 2> begin{0, 0};
  std::array<int, 2> end{1, 1};

  /// Interior cells widened by `halo` in every active direction.
  static CellRange interior(const Grid& grid, int halo = 0);

  template <typename F>
  void for_each(F&& f) const {
    for (int j = begin[1]; j < end[1]; ++j)
      for (int i = begin[0]; i < end[0]; ++i) f(i, j);
  }
};

}  // namespace wbeuler
