#pragma once

#include <array>
#include <vector>

#include "wbeuler/config.hpp"
#include "wbeuler/equilibrium.hpp"
#include "wbeuler/field.hpp"
#include "wbeuler/physics.hpp"
#include "wbeuler/quadrature.hpp"
#include "wbeuler/reconstruction.hpp"

namespace wbeuler {

/// Romberg level l with 2 + 2l >= q: 0 for q <= 2, 1 for q <= 4, 2 for q <= 6.
int romberg_level_for_order(int order);

/// Halo width the scheme needs: one layer for interface states plus the
/// stencil radius, plus another radius when the pressure average needs the
/// in-cell kinetic energy quadrature (q >= 3).
int ghost_width(int order, int dim);

/// Local evaluation points shared by all cells of a scheme.
struct NodeLayout {
  int dim = 1;
  int order = 1;
  int romberg_level = 0;
  GaussRule face;     ///< transverse face rule; 1D uses the single node 0
  GaussRule kinetic;  ///< per-direction rule for the kinetic energy average

  static NodeLayout for_scheme(int dim, int order);

  int segment_intervals() const { return 1 << romberg_level; }
  /// Position of Romberg node n in [-1/2, 1/2] along a segment.
  double segment_param(int n) const {
    return -0.5 + static_cast<double>(n) / static_cast<double>(segment_intervals());
  }
  int face_nodes() const { return face.size(); }
  /// Whether cell pressure averages go through the kinetic energy quadrature.
  bool uses_kinetic_quadrature() const { return order >= 3; }
};

enum class Side { left, right };

/// Equilibrium averages and point values, computed once per grid.
///
/// Point values on faces are stored per face so that both neighbours read
/// bitwise identical alpha and beta.
class EquilibriumTables {
 public:
  EquilibriumTables(const Grid& grid, const EquilibriumPair& pair, const NodeLayout& layout,
                    double gamma);

  const Field& alpha_avg() const { return alpha_avg_; }
  const Field& beta_avg() const { return beta_avg_; }
  /// Cell averages of the equilibrium conserved state (all cells).
  const Field& state_avg() const { return state_avg_; }

  /// Face node p of face f (left face of cell f) in direction k, transverse cell t.
  double face_alpha(int k, int f, int t, int p) const { return face_alpha_[k][face_index(k, f, t, p)]; }
  double face_beta(int k, int f, int t, int p) const { return face_beta_[k][face_index(k, f, t, p)]; }
  Point face_point(int k, int f, int t, int p) const;

  /// Interior Romberg node n (1 <= n < 2^l) on segment (k, p) of interior cell (i, j).
  double segment_alpha(int i, int j, int k, int p, int n) const {
    return seg_alpha_[segment_index(i, j, k, p, n)];
  }
  double segment_beta(int i, int j, int k, int p, int n) const {
    return seg_beta_[segment_index(i, j, k, p, n)];
  }
  Point segment_point(int i, int j, int k, int p, int n) const;

  /// Alpha at kinetic-energy node (a, b) of cell (i, j), any cell of the grid.
  double kinetic_alpha(int i, int j, int a, int b) const {
    return kin_alpha_[kinetic_index(i, j, a, b)];
  }

  const Grid& grid() const { return grid_; }
  const NodeLayout& layout() const { return layout_; }

 private:
  std::size_t face_index(int k, int f, int t, int p) const {
    const int transverse = grid_.cells(1 - k);
    return (static_cast<std::size_t>(f) * transverse + t) * layout_.face_nodes() + p;
  }
  std::size_t segment_index(int i, int j, int k, int p, int n) const {
    const int inner = layout_.segment_intervals() - 1;
    const std::size_t cell = static_cast<std::size_t>(j) * grid_.cells(0) + i;
    return ((cell * grid_.dim() + k) * layout_.face_nodes() + p) * inner + (n - 1);
  }
  std::size_t kinetic_index(int i, int j, int a, int b) const {
    const int nk = layout_.kinetic.size();
    return (grid_.index(i, j) * nk + b) * nk + a;
  }

  Grid grid_;
  NodeLayout layout_;
  Field alpha_avg_;
  Field beta_avg_;
  Field state_avg_;
  std::array<std::vector<double>, 2> face_alpha_;
  std::array<std::vector<double>, 2> face_beta_;
  std::vector<double> seg_alpha_;
  std::vector<double> seg_beta_;
  std::vector<double> kin_alpha_;
};

/// Cell averages of the reconstructed variables: density fluctuation r,
/// momentum fluctuation mu and pressure fluctuation pi (WB mode).
struct FluctuationAverages {
  Field density;   ///< r = rho - alpha
  Field momentum;  ///< mu = m - (U alpha, 0); dim components
  Field pressure;  ///< pi = p - beta
  /// Reconstructions of r and mu already built for the kinetic energy average.
  std::vector<PolynomialField> cached;
};

/// Point values of rho, m and p.
struct PointValue {
  double rho = 0.0;
  std::array<double, 2> m{0.0, 0.0};
  double p = 0.0;

  /// E = p / (gamma - 1) + |m|^2 / (2 rho), evaluated at the same point.
  ConservedState conserved(double gamma) const;
};

class WellBalancedReconstructor;

/// Reconstructed polynomials for one stage, evaluable at any point of a cell.
///
/// WB mode holds (r, mu_x[, mu_y], pi) and adds alpha, (U alpha, 0), beta at
/// the evaluation point; UNB mode holds (rho, m_x[, m_y], E).
class WBPointValues {
 public:
  WBPointValues(const WellBalancedReconstructor& owner, std::vector<PolynomialField> polys);

  /// Values at local point (xi, eta) of cell (i, j) given alpha, beta there.
  PointValue at_local(int i, int j, double xi, double eta, double alpha, double beta) const;
  /// Values at a physical point of cell (i, j); alpha and beta are evaluated.
  PointValue at(int i, int j, Point x) const;
  /// Trace of cell (f-1) (side left) or cell f (side right) at face node p.
  PointValue face_trace(int k, int f, int t, int p, Side side) const;
  /// Values at interior Romberg node n of segment (k, p) of cell (i, j).
  PointValue segment_value(int i, int j, int k, int p, int n) const;

  const WellBalancedReconstructor& owner() const { return *owner_; }
  const PolynomialField& polynomials(int var) const { return polys_[var]; }

 private:
  const WellBalancedReconstructor* owner_;
  std::vector<PolynomialField> polys_;
};

/// The fluctuation-based reconstruction pipeline for one grid and equilibrium.
class WellBalancedReconstructor {
 public:
  WellBalancedReconstructor(const Grid& grid, EquilibriumPair pair, int order, double gamma,
                            SchemeMode mode, bool limit_slopes = false, CwenoParameters cweno = {});

  /// r, mu, pi cell averages. For q <= 2 the pressure uses
  /// (gamma-1)(E - m^2/(2 rho)) on averages; for q >= 3 the kinetic energy is
  /// averaged in-cell from the well-balanced rho and m reconstructions.
  FluctuationAverages fluctuation_averages(const Field& cons) const;

  /// Reconstruct fluctuations and assemble point values (WB mode).
  WBPointValues reconstruct(FluctuationAverages fluct) const;

  /// Reconstruct rho, m, E directly (UNB mode).
  WBPointValues reconstruct_unbalanced(const Field& cons) const;

  /// Dispatches on the configured mode.
  WBPointValues point_values(const Field& cons) const;

  const Grid& grid() const { return grid_; }
  const EquilibriumPair& pair() const { return pair_; }
  const ReconstructionOperator& reconstruction() const { return op_; }
  const NodeLayout& layout() const { return tables_.layout(); }
  const EquilibriumTables& tables() const { return tables_; }
  int order() const { return order_; }
  double gamma() const { return gamma_; }
  SchemeMode mode() const { return mode_; }

  /// Cells whose interface polynomials are needed: interior plus one layer.
  CellRange flux_range() const { return CellRange::interior(grid_, 1); }
  /// Cells whose pressure averages feed the pressure reconstruction.
  CellRange pressure_range() const { return CellRange::interior(grid_, 1 + op_.stencil_radius()); }

 private:
  Grid grid_;
  EquilibriumPair pair_;
  int order_;
  double gamma_;
  SchemeMode mode_;
  ReconstructionOperator op_;
  EquilibriumTables tables_;
};

}  // namespace wbeuler
