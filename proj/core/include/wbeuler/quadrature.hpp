#pragma once

#include <functional>
#include <vector>

namespace wbeuler {

/// Gauss-Legendre rule on the reference interval [-1/2, 1/2] with weights
/// summing to one, i.e. a rule for cell averages in local coordinates.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// n-point rule, exact for polynomials of degree 2n - 1. Rules are cached.
const GaussRule& gauss_legendre(int n);

/// Number of nodes per direction so that a cell average is accurate to
/// order q: ceil(q / 2).
int gauss_nodes_for_order(int q);

/// Integral of f over [a, b] by composite Gauss-Legendre.
double composite_gauss(const std::function<double(double)>& f, double a, double b, int panels,
                       int nodes_per_panel);

}  // namespace wbeuler
