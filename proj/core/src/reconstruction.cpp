#include "wbeuler/reconstruction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wbeuler {

namespace {

// Average over [s - 1/2, s + 1/2] of xi^k.
double monomial_average(int k, double s) {
  return (std::pow(s + 0.5, k + 1) - std::pow(s - 0.5, k + 1)) / (k + 1);
}

constexpr std::array<double, 5> kCentralMoments{1.0, 0.0, 1.0 / 12.0, 0.0, 1.0 / 80.0};

// Inverse of the matrix mapping 1D coefficients of degree n - 1 to the
// averages over cells offsets[0..n).
template <int N>
std::array<std::array<double, N>, N> interpolation_inverse(const std::array<int, N>& offsets) {
  std::array<std::array<double, 2 * N>, N> m{};
  for (int r = 0; r < N; ++r) {
    for (int c = 0; c < N; ++c) m[r][c] = monomial_average(c, offsets[r]);
    m[r][N + r] = 1.0;
  }
  for (int c = 0; c < N; ++c) {
    int pivot = c;
    for (int r = c + 1; r < N; ++r)
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    std::swap(m[c], m[pivot]);
    const double d = m[c][c];
    for (auto& v : m[c]) v /= d;
    for (int r = 0; r < N; ++r) {
      if (r == c) continue;
      const double f = m[r][c];
      for (int k = 0; k < 2 * N; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::array<std::array<double, N>, N> inv{};
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) inv[r][c] = m[r][N + c];
  return inv;
}

// Coefficients of the polynomial matching averages u at the given cells.
template <int N>
std::array<double, 6> fit(const std::array<std::array<double, N>, N>& inv, const std::array<double, N>& u) {
  std::array<double, 6> c{};
  for (int r = 0; r < N; ++r)
    for (int k = 0; k < N; ++k) c[r] += inv[r][k] * u[k];
  return c;
}

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

struct Candidate {
  std::array<double, 6> c{};
  double d = 0.0;
};

// Nonlinear CWENO combination: candidates[0] is the optimal polynomial and is
// replaced by P0 = (P_opt - sum d_k P_k) / d_0.
CellPolynomial combine(std::vector<Candidate> cand, CellPolynomial base, double eps, double power,
                       double mean) {
  const std::size_t n = cand.size();
  std::array<double, 6> p0 = cand[0].c;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t m = 0; m < 6; ++m) p0[m] -= cand[k].d * cand[k].c[m];
  for (auto& v : p0) v /= cand[0].d;
  cand[0].c = p0;

  std::vector<double> w(n);
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    CellPolynomial p = base;
    p.coeffs = cand[k].c;
    w[k] = cand[k].d / std::pow(eps + smoothness_indicator(p), power);
    total += w[k];
  }
  base.coeffs = {};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < 6; ++m) base.coeffs[m] += w[k] / total * cand[k].c[m];

  // Restore the cell average exactly.
  if (base.dim == 1) {
    double rest = 0.0;
    for (int k = 1; k <= base.degree; ++k) rest += base.coeffs[k] * kCentralMoments[k];
    base.coeffs[0] = mean - rest;
  } else {
    base.coeffs[0] = mean - (base.coeffs[3] + base.coeffs[5]) / 12.0;
  }
  return base;
}

}  // namespace

double CellPolynomial::average() const {
  if (dim == 2) return coeffs[0] + (coeffs[3] + coeffs[5]) / 12.0;
  double s = 0.0;
  for (int k = degree; k >= 0; --k) s += coeffs[k] * kCentralMoments[k];
  return s;
}

double evaluate(const CellPolynomial& poly, Point x) {
  const double xi = (x[0] - poly.center[0]) / poly.width[0];
  const double eta = poly.dim == 2 ? (x[1] - poly.center[1]) / poly.width[1] : 0.0;
  if (std::abs(xi) > 1.0 || std::abs(eta) > 1.0)
    throw std::out_of_range("point lies outside the polynomial's cell");
  return poly.at_local(xi, eta);
}

double smoothness_indicator(const CellPolynomial& poly) {
  const auto& c = poly.coeffs;
  if (poly.dim == 2) {
    return c[1] * c[1] + c[3] * c[3] / 3.0 + c[4] * c[4] / 12.0 + c[2] * c[2] + c[4] * c[4] / 12.0 +
           c[5] * c[5] / 3.0 + 4.0 * c[3] * c[3] + c[4] * c[4] + 4.0 * c[5] * c[5];
  }
  double is = 0.0;
  for (int l = 1; l <= poly.degree; ++l) {
    // d^l p / dxi^l = sum_k c_k k!/(k-l)! xi^(k-l)
    std::array<double, 5> d{};
    for (int k = l; k <= poly.degree; ++k) {
      double f = 1.0;
      for (int m = k - l + 1; m <= k; ++m) f *= m;
      d[static_cast<std::size_t>(k - l)] = f * c[static_cast<std::size_t>(k)];
    }
    for (int a = 0; a <= poly.degree - l; ++a)
      for (int b = 0; b <= poly.degree - l; ++b)
        if ((a + b) % 2 == 0) is += d[a] * d[b] * kCentralMoments[static_cast<std::size_t>(a + b)];
  }
  return is;
}

ReconstructionOperator::ReconstructionOperator(ReconstructionKind kind, CwenoParameters params)
    : kind_(kind), params_(params) {}

ReconstructionOperator ReconstructionOperator::for_order(int order, int dim, bool limit_slopes) {
  if (order <= 1) return ReconstructionOperator(ReconstructionKind::constant);
  if (order == 2)
    return ReconstructionOperator(limit_slopes ? ReconstructionKind::minmod : ReconstructionKind::linear);
  if (dim == 2) return ReconstructionOperator(ReconstructionKind::cweno3_2d);
  if (order <= 4) return ReconstructionOperator(ReconstructionKind::cweno3);
  return ReconstructionOperator(ReconstructionKind::cweno5);
}

int ReconstructionOperator::stencil_radius() const {
  switch (kind_) {
    case ReconstructionKind::constant: return 0;
    case ReconstructionKind::cweno5: return 2;
    default: return 1;
  }
}

int ReconstructionOperator::degree() const {
  switch (kind_) {
    case ReconstructionKind::constant: return 0;
    case ReconstructionKind::linear:
    case ReconstructionKind::minmod: return 1;
    case ReconstructionKind::cweno5: return 4;
    default: return 2;
  }
}

CellPolynomial ReconstructionOperator::reconstruct_cell(const Field& averages, int comp, int i, int j) const {
  const Grid& g = averages.grid();
  CellPolynomial poly;
  poly.dim = dim();
  poly.degree = degree();
  poly.center = g.cell_center(i, j);
  poly.width = {g.dx(0), g.dim() == 2 ? g.dx(1) : 1.0};

  auto get = [&](int di, int dj) {
    const double v = averages(comp, i + di, j + dj);
    if (std::isnan(v))
      throw std::logic_error("reconstruction stencil of cell (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") reads an unfilled ghost");
    return v;
  };
  const double mean = get(0, 0);
  const double eps = params_.epsilon_scale * g.min_dx() * g.min_dx();

  switch (kind_) {
    case ReconstructionKind::constant:
      poly.coeffs[0] = mean;
      return poly;
    case ReconstructionKind::linear:
      poly.coeffs[0] = mean;
      poly.coeffs[1] = 0.5 * (get(1, 0) - get(-1, 0));
      return poly;
    case ReconstructionKind::minmod:
      poly.coeffs[0] = mean;
      poly.coeffs[1] = minmod(mean - get(-1, 0), get(1, 0) - mean);
      return poly;
    case ReconstructionKind::cweno3: {
      const double um = get(-1, 0), up = get(1, 0);
      std::vector<Candidate> cand(3);
      const double c2 = 0.5 * (up - 2.0 * mean + um);
      cand[0] = {{mean - c2 / 12.0, 0.5 * (up - um), c2}, 0.5};
      cand[1] = {{mean, mean - um}, 0.25};
      cand[2] = {{mean, up - mean}, 0.25};
      return combine(std::move(cand), poly, eps, params_.power, mean);
    }
    case ReconstructionKind::cweno5: {
      static const auto inv5 = interpolation_inverse<5>({-2, -1, 0, 1, 2});
      static const auto inv_l = interpolation_inverse<3>({-2, -1, 0});
      static const auto inv_c = interpolation_inverse<3>({-1, 0, 1});
      static const auto inv_r = interpolation_inverse<3>({0, 1, 2});
      const std::array<double, 5> u{get(-2, 0), get(-1, 0), mean, get(1, 0), get(2, 0)};
      std::vector<Candidate> cand(4);
      cand[0] = {fit<5>(inv5, u), 0.75};
      cand[1] = {fit<3>(inv_l, {u[0], u[1], u[2]}), 1.0 / 12.0};
      cand[2] = {fit<3>(inv_c, {u[1], u[2], u[3]}), 1.0 / 12.0};
      cand[3] = {fit<3>(inv_r, {u[2], u[3], u[4]}), 1.0 / 12.0};
      return combine(std::move(cand), poly, eps, params_.power, mean);
    }
    case ReconstructionKind::cweno3_2d: {
      double sa = 0.0, sb = 0.0, sab = 0.0, saa = 0.0, sbb = 0.0;
      std::array<std::array<double, 3>, 3> u{};
      for (int b = -1; b <= 1; ++b)
        for (int a = -1; a <= 1; ++a) {
          const double v = get(a, b);
          u[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b + 1)] = v;
          const double r = v - mean;
          sa += a * v;
          sb += b * v;
          sab += a * b * v;
          saa += a * a * r;
          sbb += b * b * r;
        }
      std::vector<Candidate> cand(5);
      const double c3 = (6.0 * saa - 4.0 * sbb) / 20.0;
      const double c5 = (-4.0 * saa + 6.0 * sbb) / 20.0;
      cand[0] = {{mean - (c3 + c5) / 12.0, sa / 6.0, sb / 6.0, c3, sab / 4.0, c5}, 0.5};
      int k = 1;
      for (int sy : {-1, 1})
        for (int sx : {-1, 1}) {
          const double cx = sx * (u[static_cast<std::size_t>(1 + sx)][1] - mean);
          const double cy = sy * (u[1][static_cast<std::size_t>(1 + sy)] - mean);
          cand[static_cast<std::size_t>(k++)] = {{mean, cx, cy}, 0.125};
        }
      return combine(std::move(cand), poly, eps, params_.power, mean);
    }
  }
  throw std::logic_error("unknown reconstruction kind");
}

PolynomialField ReconstructionOperator::reconstruct(const Field& averages, int comp,
                                                    const CellRange& range) const {
  PolynomialField out(averages.grid());
  range.for_each([&](int i, int j) { out(i, j) = reconstruct_cell(averages, comp, i, j); });
  return out;
}

std::pair<double, double> boundary_extrapolated_pair(const PolynomialField& polys, int j) {
  return {polys(j).at_local(0.5), polys(j + 1).at_local(-0.5)};
}

}  // namespace wbeuler
