#include "wbeuler/field.hpp"

#include <cmath>
#include <limits>

#include "wbeuler/errors.hpp"

namespace wbeuler {

Field::Field(const Grid& grid, int components)
    : grid_(grid),
      ncomp_(components),
      data_(static_cast<std::size_t>(components) * grid.padded_size(),
            std::numeric_limits<double>::quiet_NaN()) {
  for (int c = 0; c < ncomp_; ++c)
    CellRange::interior(grid_).for_each([&](int i, int j) { (*this)(c, i, j) = 0.0; });
}

void Field::axpy(double a, const Field& other) {
  if (!(grid_ == other.grid_) || ncomp_ != other.ncomp_)
    throw GridMismatch("axpy on fields with different layout");
  for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += a * other.data_[n];
}

void Field::fill(double value) {
  for (double& v : data_) v = value;
}

bool Field::interior_finite() const {
  bool ok = true;
  for (int c = 0; c < ncomp_; ++c)
    CellRange::interior(grid_).for_each([&](int i, int j) {
      if (!std::isfinite((*this)(c, i, j))) ok = false;
    });
  return ok;
}

}  // namespace wbeuler
