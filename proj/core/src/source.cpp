#include "wbeuler/source.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wbeuler/errors.hpp"

namespace wbeuler {

namespace {

double ratio(double y, double alpha) {
  if (alpha == 0.0) throw NonPhysicalState("equilibrium density vanishes at a source quadrature node");
  return y / alpha;
}

}  // namespace

double romberg_wb_nodes(std::span<const double> ratio, std::span<const double> beta, double length,
                        int level) {
  const std::size_t m = std::size_t{1} << level;
  if (ratio.size() != m + 1 || beta.size() != m + 1)
    throw std::invalid_argument("romberg_wb_nodes needs 2^level + 1 node values");
  // Composite two-point rules on 2^k subsegments, k = 0..level.
  std::vector<double> t(static_cast<std::size_t>(level) + 1);
  for (int k = 0; k <= level; ++k) {
    const std::size_t stride = m >> k;
    double q = 0.0;
    for (std::size_t s = 0; s < m; s += stride)
      q += 0.5 * (ratio[s] + ratio[s + stride]) * (beta[s + stride] - beta[s]);
    t[static_cast<std::size_t>(k)] = q / length;
  }
  // Richardson recursion, in place from the finest level down.
  for (int j = 1; j <= level; ++j) {
    const double f = std::pow(4.0, j);
    for (int k = level; k >= j; --k)
      t[static_cast<std::size_t>(k)] =
          (f * t[static_cast<std::size_t>(k)] - t[static_cast<std::size_t>(k - 1)]) / (f - 1.0);
  }
  return t[static_cast<std::size_t>(level)];
}

double romberg_wb(const ScalarFunction& y, const EquilibriumPair& pair, Point a, Point b, int level) {
  const int m = 1 << level;
  std::vector<double> r(static_cast<std::size_t>(m) + 1), be(static_cast<std::size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) {
    const double s = static_cast<double>(n) / m;
    const Point x = n == 0 ? a : n == m ? b : Point{a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])};
    r[static_cast<std::size_t>(n)] = ratio(y(x), pair.alpha(x));
    be[static_cast<std::size_t>(n)] = pair.beta(x);
  }
  return romberg_wb_nodes(r, be, std::hypot(b[0] - a[0], b[1] - a[1]), level);
}

double wb_rule_segment(const ScalarFunction& y, const EquilibriumPair& pair, Point a, Point b) {
  return romberg_wb(y, pair, a, b, 0);
}

namespace {

// Momentum and energy contributions of direction k for segment p of cell (i, j).
std::pair<double, double> segment_sources(const WBPointValues& values, int i, int j, int k, int p) {
  const auto& owner = values.owner();
  const EquilibriumTables& tab = owner.tables();
  const NodeLayout& lay = tab.layout();
  const int m = lay.segment_intervals();
  const int f = k == 0 ? i : j;
  const int t = k == 0 ? j : i;
  std::array<double, 5> rr{}, rm{}, be{};
  auto put = [&](int n, const PointValue& v, double alpha, double beta) {
    rr[static_cast<std::size_t>(n)] = ratio(v.rho, alpha);
    rm[static_cast<std::size_t>(n)] = ratio(v.m[static_cast<std::size_t>(k)], alpha);
    be[static_cast<std::size_t>(n)] = beta;
  };
  put(0, values.face_trace(k, f, t, p, Side::right), tab.face_alpha(k, f, t, p), tab.face_beta(k, f, t, p));
  for (int n = 1; n < m; ++n)
    put(n, values.segment_value(i, j, k, p, n), tab.segment_alpha(i, j, k, p, n),
        tab.segment_beta(i, j, k, p, n));
  put(m, values.face_trace(k, f + 1, t, p, Side::left), tab.face_alpha(k, f + 1, t, p),
      tab.face_beta(k, f + 1, t, p));
  const std::size_t len = static_cast<std::size_t>(m) + 1;
  const double h = owner.grid().dx(k);
  const std::span<const double> bs(be.data(), len);
  return {romberg_wb_nodes({rr.data(), len}, bs, h, lay.romberg_level),
          romberg_wb_nodes({rm.data(), len}, bs, h, lay.romberg_level)};
}

}  // namespace

StateVector source_cell_1d(const WBPointValues& values, int i) {
  StateVector s{1, {}};
  const auto [mom, energy] = segment_sources(values, i, 0, 0, 0);
  s[1] = mom;
  s[2] = energy;
  return s;
}

StateVector source_cell_2d(const WBPointValues& values, int i, int j) {
  StateVector s{2, {}};
  const GaussRule& face = values.owner().layout().face;
  double energy = 0.0;
  for (int k = 0; k < 2; ++k) {
    double mom = 0.0, en = 0.0;
    for (int p = 0; p < face.size(); ++p) {
      const auto [qm, qe] = segment_sources(values, i, j, k, p);
      mom += face.weights[static_cast<std::size_t>(p)] * qm;
      en += face.weights[static_cast<std::size_t>(p)] * qe;
    }
    s[static_cast<std::size_t>(1 + k)] = mom;
    energy += en;
  }
  s[3] = energy;
  return s;
}

StateVector source_cell(const WBPointValues& values, int i, int j) {
  return values.owner().grid().dim() == 2 ? source_cell_2d(values, i, j) : source_cell_1d(values, i);
}

}  // namespace wbeuler
