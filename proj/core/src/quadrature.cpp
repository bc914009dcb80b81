#include "wbeuler/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace wbeuler {

namespace {

// Newton iteration on P_n from the Chebyshev-like initial guess.
GaussRule build_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute derivative at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    // Map [-1, 1] -> [-1/2, 1/2] and normalise weights to sum to one.
    const std::size_t idx = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[idx] = 0.5 * x;
    rule.weights[idx] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  // Enforce exact symmetry of the nodes.
  for (int i = 0; i < n / 2; ++i) {
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    const double x = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
    const double w = 0.5 * (rule.weights[hi] + rule.weights[lo]);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1 || n > 32) throw std::invalid_argument("Gauss-Legendre rule size must be in [1, 32]");
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

int gauss_nodes_for_order(int q) { return q <= 1 ? 1 : (q + 1) / 2; }

double composite_gauss(const std::function<double(double)>& f, double a, double b, int panels,
                       int nodes_per_panel) {
  if (panels < 1) throw std::invalid_argument("composite_gauss needs at least one panel");
  const GaussRule& rule = gauss_legendre(nodes_per_panel);
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double panel = 0.0;
    for (int n = 0; n < rule.size(); ++n)
      panel += rule.weights[static_cast<std::size_t>(n)] * f(mid + h * rule.nodes[static_cast<std::size_t>(n)]);
    sum += panel;
  }
  return sum * h;
}

}  // namespace wbeuler
