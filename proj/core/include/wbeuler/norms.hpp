#pragma once

#include <span>
#include <vector>

#include "wbeuler/field.hpp"

namespace wbeuler {

/// Discrete L1 distance per component over interior cells:
/// cell volume times the sum of |a - b|. Throws GridMismatch.
std::vector<double> l1_norm(const Field& a, const Field& b);

/// Max-norm distance per component over interior cells.
std::vector<double> max_norm(const Field& a, const Field& b);

/// log2(err_n / err_2n). Both errors must be positive.
double convergence_rate(double err_n, double err_2n);

/// Least-squares slope of -log(err) against log(N): the observed order.
double observed_order(std::span<const double> n, std::span<const double> err);

}  // namespace wbeuler
