#include "wbeuler/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "wbeuler/norms.hpp"

namespace wbeuler {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void ErrorTable::add(int n, std::vector<double> error) {
  ErrorRow row{n, std::move(error), {}};
  row.rate.assign(row.error.size(), std::numeric_limits<double>::quiet_NaN());
  if (!rows_.empty()) {
    const ErrorRow& prev = rows_.back();
    for (std::size_t c = 0; c < row.error.size(); ++c) {
      const double a = prev.error[c], b = row.error[c];
      if (!(a > 0.0 && b > 0.0)) continue;
      row.rate[c] = n == 2 * prev.n ? convergence_rate(a, b)
                                    : std::log(a / b) / std::log(static_cast<double>(n) / prev.n);
    }
  }
  rows_.push_back(std::move(row));
}

double ErrorTable::slope(int component, int count) const {
  if (count < 2 || static_cast<std::size_t>(count) > rows_.size())
    throw std::invalid_argument("slope needs between 2 and rows() entries");
  std::vector<double> n, e;
  for (std::size_t r = rows_.size() - static_cast<std::size_t>(count); r < rows_.size(); ++r) {
    n.push_back(rows_[r].n);
    e.push_back(rows_[r].error[static_cast<std::size_t>(component)]);
  }
  return observed_order(n, e);
}

std::string ErrorTable::csv() const {
  std::string out = "N,err_rho,rate_rho,err_mx,rate_mx";
  if (dim_ == 2) out += ",err_my,rate_my";
  out += ",err_E,rate_E\n";
  for (const ErrorRow& row : rows_) {
    out += std::to_string(row.n);
    for (std::size_t c = 0; c < row.error.size(); ++c) {
      out += "," + sci(row.error[c]) + ",";
      if (!std::isnan(row.rate[c])) out += fixed(row.rate[c]);
    }
    out += "\n";
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << text;
}

double pressure_fluctuation(const Field& state, const Field& beta_avg, int i, int j, double gamma) {
  const int dim = state.grid().dim();
  const double rho = state(0, i, j);
  double m2 = state(1, i, j) * state(1, i, j);
  if (dim == 2) m2 += state(2, i, j) * state(2, i, j);
  return (gamma - 1.0) * (state(dim + 1, i, j) - 0.5 * m2 / rho) - beta_avg(0, i, j);
}

void write_field_1d(const std::filesystem::path& path, const Field& state, const Field& beta_avg,
                    double gamma) {
  const Grid& g = state.grid();
  std::string out;
  char buf[160];
  for (int i = 0; i < g.cells(0); ++i) {
    std::snprintf(buf, sizeof buf, "%.10e %.10e %.10e %.10e %.10e %.10e\n", g.center(0, i), state(0, i),
                  state(1, i), state(2, i), pressure_fluctuation(state, beta_avg, i, 0, gamma),
                  state(1, i) / state(0, i));
    out += buf;
  }
  write_text(path, out);
}

void write_field_2d(const std::filesystem::path& path, const Field& state, const Field& beta_avg,
                    double t, double gamma) {
  const Grid& g = state.grid();
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d %d %.10e %.10e %.10e %.10e %.10e %.10e\n", g.cells(0), g.cells(1),
                g.lo(0), g.lo(1), g.dx(0), g.dx(1), t, gamma);
  out += buf;
  for (int j = 0; j < g.cells(1); ++j)
    for (int i = 0; i < g.cells(0); ++i) {
      std::snprintf(buf, sizeof buf, "%.10e %.10e %.10e %.10e %.10e\n", state(0, i, j), state(1, i, j),
                    state(2, i, j), state(3, i, j), pressure_fluctuation(state, beta_avg, i, j, gamma));
      out += buf;
    }
  write_text(path, out);
}

}  // namespace wbeuler
