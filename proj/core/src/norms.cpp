#include "wbeuler/norms.hpp"

#include <algorithm>
#include <cmath>

#include "wbeuler/errors.hpp"

namespace wbeuler {

namespace {

void check_same(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid()) || a.components() != b.components())
    throw GridMismatch("norm of fields on different grids");
}

}  // namespace

std::vector<double> l1_norm(const Field& a, const Field& b) {
  check_same(a, b);
  std::vector<double> out(static_cast<std::size_t>(a.components()), 0.0);
  const Grid& g = a.grid();
  for (int c = 0; c < a.components(); ++c) {
    double sum = 0.0;
    // Sequential over cells so repeated runs reduce in the same order.
    CellRange::interior(g).for_each([&](int i, int j) { sum += std::abs(a(c, i, j) - b(c, i, j)); });
    out[static_cast<std::size_t>(c)] = g.cell_volume() * sum;
  }
  return out;
}

std::vector<double> max_norm(const Field& a, const Field& b) {
  check_same(a, b);
  std::vector<double> out(static_cast<std::size_t>(a.components()), 0.0);
  for (int c = 0; c < a.components(); ++c)
    CellRange::interior(a.grid()).for_each([&](int i, int j) {
      auto& m = out[static_cast<std::size_t>(c)];
      m = std::max(m, std::abs(a(c, i, j) - b(c, i, j)));
    });
  return out;
}

double convergence_rate(double err_n, double err_2n) {
  if (!(err_n > 0.0) || !(err_2n > 0.0))
    throw std::invalid_argument("convergence_rate needs positive errors");
  return std::log2(err_n / err_2n);
}

double observed_order(std::span<const double> n, std::span<const double> err) {
  if (n.size() != err.size() || n.size() < 2)
    throw std::invalid_argument("observed_order needs at least two matching samples");
  const double m = static_cast<double>(n.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(err[i] > 0.0)) throw std::invalid_argument("observed_order needs positive errors");
    const double x = std::log(n[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return -slope;
}

}  // namespace wbeuler
