#pragma once

#include <span>
#include <vector>

#include "wbeuler/grid.hpp"

namespace wbeuler {

/// Cell-wise values of one or more components on a grid, halo included.
///
/// Interior entries start at zero and ghost entries at quiet NaN, so a
/// stencil that reads an unfilled ghost is detectable.
class Field {
 public:
  Field() = default;
  Field(const Grid& grid, int components);

  const Grid& grid() const { return grid_; }
  int components() const { return ncomp_; }

  double& operator()(int c, int i, int j = 0) { return data_[offset(c) + grid_.index(i, j)]; }
  double operator()(int c, int i, int j = 0) const { return data_[offset(c) + grid_.index(i, j)]; }

  std::span<double> component(int c) { return {data_.data() + offset(c), grid_.padded_size()}; }
  std::span<const double> component(int c) const {
    return {data_.data() + offset(c), grid_.padded_size()};
  }
  std::span<double> raw() { return data_; }
  std::span<const double> raw() const { return data_; }

  /// this += a * other on every entry (halo included).
  void axpy(double a, const Field& other);
  void fill(double value);

  /// True when every interior entry is finite.
  bool interior_finite() const;

 private:
  std::size_t offset(int c) const { return static_cast<std::size_t>(c) * grid_.padded_size(); }

  Grid grid_;
  int ncomp_ = 0;
  std::vector<double> data_;
};

}  // namespace wbeuler
