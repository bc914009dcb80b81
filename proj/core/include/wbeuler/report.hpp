#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wbeuler/field.hpp"

namespace wbeuler {

struct ErrorRow {
  int n = 0;
  std::vector<double> error;  ///< per component (rho, m..., E)
  std::vector<double> rate;   ///< NaN where undefined (first row, zero errors)
};

/// Per-grid L1 errors with rates against the previous row.
class ErrorTable {
 public:
  explicit ErrorTable(int dim = 1) : dim_(dim) {}

  void add(int n, std::vector<double> error);
  const std::vector<ErrorRow>& rows() const { return rows_; }
  int dim() const { return dim_; }

  /// Least-squares slope of component c over the last `count` rows.
  double slope(int component, int count) const;

  /// Header N,err_rho,rate_rho,err_mx,rate_mx[,err_my,rate_my],err_E,rate_E.
  std::string csv() const;

 private:
  int dim_;
  std::vector<ErrorRow> rows_;
};

void write_text(const std::filesystem::path& path, const std::string& text);

/// Rows `x rho mx E p_fluctuation v` for the interior cells.
void write_field_1d(const std::filesystem::path& path, const Field& state, const Field& beta_avg,
                    double gamma);

/// Header `nx ny x0 y0 dx dy t gamma`, then `rho mx my E p_fluctuation` per
/// cell, x fastest.
void write_field_2d(const std::filesystem::path& path, const Field& state, const Field& beta_avg,
                    double t, double gamma);

/// (gamma - 1)(E - |m|^2 / (2 rho)) - beta on the averages of cell (i, j).
double pressure_fluctuation(const Field& state, const Field& beta_avg, int i, int j, double gamma);

}  // namespace wbeuler
