#pragma once

#include <array>
#include <utility>
#include <vector>

#include "wbeuler/field.hpp"
#include "wbeuler/grid.hpp"

namespace wbeuler {

enum class ReconstructionKind { constant, linear, minmod, cweno3, cweno5, cweno3_2d };

/// Nonlinear weight parameters: eps = epsilon_scale * dx^2, weights d / (eps + IS)^power.
struct CwenoParameters {
  double epsilon_scale = 1.0;
  double power = 2.0;
};

/// One reconstruction polynomial in local cell coordinates xi = (x - x_j) / dx.
///
/// 1D: coeffs[k] multiplies xi^k (degree <= 4).
/// 2D: 1, xi, eta, xi^2, xi eta, eta^2 (degree <= 2).
struct CellPolynomial {
  int dim = 1;
  int degree = 0;
  std::array<double, 6> coeffs{};
  Point center{0.0, 0.0};
  std::array<double, 2> width{1.0, 1.0};

  double at_local(double xi, double eta = 0.0) const {
    if (dim == 1) {
      double v = 0.0;
      for (int k = degree; k >= 0; --k) v = v * xi + coeffs[k];
      return v;
    }
    return coeffs[0] + xi * (coeffs[1] + coeffs[3] * xi + coeffs[4] * eta) +
           eta * (coeffs[2] + coeffs[5] * eta);
  }

  /// Exact mean over the cell.
  double average() const;
};

/// Value at a physical point. Points more than half a cell outside the
/// cell are rejected with std::out_of_range.
double evaluate(const CellPolynomial& poly, Point x);

/// One polynomial per cell of a grid; only the reconstructed range is valid.
class PolynomialField {
 public:
  PolynomialField() = default;
  explicit PolynomialField(const Grid& grid) : grid_(grid), polys_(grid.padded_size()) {}

  const Grid& grid() const { return grid_; }
  const CellPolynomial& operator()(int i, int j = 0) const { return polys_[grid_.index(i, j)]; }
  CellPolynomial& operator()(int i, int j = 0) { return polys_[grid_.index(i, j)]; }

 private:
  Grid grid_;
  std::vector<CellPolynomial> polys_;
};

class ReconstructionOperator {
 public:
  explicit ReconstructionOperator(ReconstructionKind kind, CwenoParameters params = {});

  /// constant / linear (minmod if limited) / cweno3 / cweno5 in 1D, cweno3_2d in 2D.
  static ReconstructionOperator for_order(int order, int dim, bool limit_slopes = false);

  ReconstructionKind kind() const { return kind_; }
  int stencil_radius() const;
  int degree() const;
  int dim() const { return kind_ == ReconstructionKind::cweno3_2d ? 2 : 1; }
  const CwenoParameters& parameters() const { return params_; }

  /// Polynomial for cell (i, j) from component `comp` of `averages`.
  /// Throws std::logic_error if the stencil touches an unfilled (NaN) ghost.
  CellPolynomial reconstruct_cell(const Field& averages, int comp, int i, int j = 0) const;

  /// Polynomials for every cell in `range`.
  PolynomialField reconstruct(const Field& averages, int comp, const CellRange& range) const;

 private:
  ReconstructionKind kind_;
  CwenoParameters params_;
};

/// Values at x_{j+1/2} from the polynomials of cells j and j+1 (1D).
std::pair<double, double> boundary_extrapolated_pair(const PolynomialField& polys, int j);

/// Jiang-Shu type indicator: sum over derivative orders l >= 1 of the
/// integral of (d^l p / dxi^l)^2 over the unit cell.
double smoothness_indicator(const CellPolynomial& poly);

}  // namespace wbeuler
