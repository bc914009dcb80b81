// Acceptance runner: one PASS/FAIL line per criterion.
//
// Usage: wbeuler_acceptance [--strict] [criterion ...]
// Without arguments every criterion runs. --strict turns a FAIL into a
// non-zero exit status.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wbeuler/equilibrium.hpp"
#include "wbeuler/experiment.hpp"
#include "wbeuler/norms.hpp"
#include "wbeuler/physics.hpp"
#include "wbeuler/reconstruction.hpp"
#include "wbeuler/scenarios.hpp"
#include "wbeuler/solver.hpp"
#include "wbeuler/source.hpp"

using namespace wbeuler;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [!]");
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

ErrorTable study(Experiment e, std::vector<int> grids) {
  e.grids = std::move(grids);
  return run_study(e);
}

// ---------------------------------------------------------------------------

Outcome convergence_1d() {
  Outcome out;
  struct Case {
    int order;
    std::vector<int> grids;
    double lo, hi;
  };
  const Case cases[] = {{1, {320, 640, 1280, 2560}, 0.90, 1e9},
                        {2, {160, 320, 640, 1280}, 1.9, 2.3},
                        {3, {320, 640, 1280, 2560}, 2.7, 1e9},
                        {5, {80, 160, 320, 640}, 4.7, 1e9}};
  for (const Case& c : cases) {
    Experiment e = default_experiment(Scenario::convergence_1d);
    e.config.order = c.order;
    const ErrorTable t = study(e, c.grids);
    const double s = t.slope(0, 4);
    out.require(s >= c.lo && s <= c.hi, "q=" + std::to_string(c.order) + " slope " + fmt("%.3f", s));
    if (c.order == 5) {
      const double err = t.rows()[2].error[0];
      const double ratio = err / 5.97e-7;
      out.require(ratio <= 5.0 && ratio >= 0.2, "q=5 err(320) " + fmt("%.3e", err));
    }
  }
  return out;
}

Outcome wellbalance_1d() {
  Outcome out;
  struct Pair {
    std::string name, potential;
    std::map<std::string, double> params;
  };
  const Pair pairs[] = {{"isothermal", "x", {{"temperature", 1.0}}},
                        {"isothermal", "x2", {{"temperature", 1.0}}},
                        {"isothermal", "sin2pix", {{"temperature", 1.0}}},
                        {"polytropic", "x2", {{"nu", 1.2}}},
                        {"nonisothermal", "x2half", {}}};
  double worst = 0.0;
  for (const Pair& p : pairs)
    for (int q : {1, 2, 3, 5}) {
      Experiment e = default_experiment(Scenario::wellbalance_1d);
      e.config.order = q;
      e.config.equilibrium = EquilibriumSpec{p.name, p.potential, p.params};
      const ErrorTable t = study(e, {20, 40, 80, 160});
      for (const auto& row : t.rows()) worst = std::max(worst, max_of(row.error));
    }
  out.require(worst <= 1e-13, "max deviation " + fmt("%.2e", worst));
  return out;
}

// L1 distance of velocity and pressure between the initial and final state.
std::pair<double, double> rest_residual(const CaseRun& run, double gamma) {
  const Grid& g = run.final_state.grid();
  double dv = 0.0, dp = 0.0;
  for (int i = 0; i < g.cells(0); ++i) {
    ConservedState a, b;
    a.rho = run.initial(0, i);
    a.m[0] = run.initial(1, i);
    a.E = run.initial(2, i);
    b.rho = run.final_state(0, i);
    b.m[0] = run.final_state(1, i);
    b.E = run.final_state(2, i);
    dv += std::abs(b.m[0] / b.rho - a.m[0] / a.rho);
    dp += std::abs(pressure(b, gamma) - pressure(a, gamma));
  }
  return {dv * g.dx(0), dp * g.dx(0)};
}

Outcome unbalanced_residual() {
  Outcome out;
  for (int q : {3, 5}) {
    Experiment e = default_experiment(Scenario::wellbalance_1d);
    e.config.order = q;
    e.config.mode = SchemeMode::unbalanced;
    e.config.equilibrium.potential = "x2";
    const CaseRun run = run_case(e, 40);
    const auto [dv, dp] = rest_residual(run, e.config.gamma);
    const std::string tag = "q=" + std::to_string(q) + " v " + fmt("%.2e", dv) + " p " + fmt("%.2e", dp);
    if (q == 3)
      out.require(dv >= 1e-5 && dv <= 1e-3 && dp >= 1e-5 && dp <= 1e-3, tag);
    else
      out.require(dv <= 1e-6 && dp <= 1e-6, tag);
  }
  return out;
}

Outcome perturbation() {
  Outcome out;
  Experiment base = default_experiment(Scenario::perturb_1d);
  const double gamma = base.config.gamma;
  for (double amp : {1e-5, 1e-7}) {
    Experiment ref = base;
    ref.amplitude = amp;
    ref.config.order = 5;
    const CaseRun fine = run_case(ref, 810);
    const auto pref = pressure_fluctuation_profile(fine, gamma);

    auto distance = [&](SchemeMode mode) {
      Experiment e = base;
      e.amplitude = amp;
      e.config.order = 3;
      e.config.mode = mode;
      const CaseRun run = run_case(e, 120);
      const Grid& g = run.final_state.grid();
      const auto restricted = restrict_to(fine.final_state.grid(), pref, g);
      const auto p = pressure_fluctuation_profile(run, gamma);
      return relative_l1(g, p, restricted, 0.0, 1.0);
    };
    const double wb = distance(SchemeMode::well_balanced);
    if (amp == 1e-5) {
      const double unb = distance(SchemeMode::unbalanced);
      out.require(wb <= 0.20, "A=1e-5 WB " + fmt("%.3f", wb));
      out.require(unb >= 1.0, "UNB " + fmt("%.2f", unb));
    } else {
      out.require(wb <= 0.30, "A=1e-7 WB " + fmt("%.3f", wb));
    }
  }
  return out;
}

Outcome accuracy_2d(Scenario s, const std::string& label) {
  Outcome out;
  const ErrorTable t = study(default_experiment(s), {20, 40, 80, 160});
  const double err = t.rows().back().error[0];
  const double ratio = err / 1.35e-5;
  const double slope = t.slope(0, 4);
  out.require(ratio <= 3.0 && ratio >= 1.0 / 3.0, label + " err(160) " + fmt("%.3e", err));
  out.require(slope >= 2.9, "slope " + fmt("%.3f", slope));
  return out;
}

Outcome wellbalance_2d() {
  Outcome out;
  struct Pair {
    std::string name;
    std::map<std::string, double> params;
  };
  const Pair pairs[] = {{"isothermal", {{"temperature", 1.0 / 1.21}}}, {"polytropic", {{"nu", 1.2}}}, {"radial", {}}};
  for (const Pair& p : pairs) {
    Experiment e = default_experiment(Scenario::wellbalance_2d);
    e.config.equilibrium = EquilibriumSpec{p.name, p.name == "radial" ? "r2half" : "x+y", p.params};
    const ErrorTable t = study(e, {20, 40, 80, 160});
    double worst = 0.0;
    for (const auto& row : t.rows()) worst = std::max(worst, max_of(row.error));
    out.require(worst <= 1e-13, p.name + " " + fmt("%.2e", worst));
  }
  return out;
}

Outcome moving_equilibrium() {
  Outcome out = accuracy_2d(Scenario::moving_accuracy, "accuracy");

  const ErrorTable wb = study(default_experiment(Scenario::moving_wellbalance), {20, 40, 80, 160});
  bool bounded = true, decreasing = true;
  double prev = 1e300, first = 0.0;
  for (const auto& row : wb.rows()) {
    const double m = max_of(row.error);
    if (first == 0.0) first = m;
    bounded = bounded && m <= 1e-11;
    decreasing = decreasing && m < prev;
    prev = m;
  }
  out.require(bounded, "moving-WB max " + fmt("%.2e", first) + " -> " + fmt("%.2e", prev));
  out.require(decreasing, "strictly decreasing");

  Experiment st = default_experiment(Scenario::moving_wellbalance);
  st.config.equilibrium.params["velocity"] = 0.0;
  const ErrorTable t = study(st, {20, 40, 80, 160});
  const double mx = t.rows().back().error[1];
  const double slope = t.slope(1, 4);
  out.require(mx >= 1e-8, "stationary-WB mx(160) " + fmt("%.2e", mx));
  out.require(slope >= 2.5 && slope <= 3.5, "order " + fmt("%.2f", slope));
  return out;
}

Outcome property_suite() {
  Outcome out;
  const double gamma = 1.4;

  std::mt19937_64 rng(20260417);
  std::uniform_real_distribution<double> pos(0.1, 10.0), vel(-5.0, 5.0);
  double flux_err = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const int dim = 1 + n % 2;
    const PrimitiveState w{pos(rng), {vel(rng), dim == 2 ? vel(rng) : 0.0}, pos(rng)};
    const ConservedState u = conserved_from_primitive(w, gamma);
    for (int k = 0; k < dim; ++k) {
      const StateVector f = euler_flux(u, gamma, k, dim);
      const StateVector g = rusanov_flux(u, u, gamma, k, dim);
      for (std::size_t c = 0; c < f.size(); ++c)
        flux_err = std::max(flux_err, std::abs(f[c] - g[c]) / (1.0 + std::abs(f[c])));
    }
  }
  out.require(flux_err <= 1e-14, "flux consistency " + fmt("%.1e", flux_err));

  double zero_err = 0.0, lin_err = 0.0;
  const Grid g = Grid::line(0.0, 1.0, 16, 2);
  for (auto kind : {ReconstructionKind::constant, ReconstructionKind::linear, ReconstructionKind::minmod,
                    ReconstructionKind::cweno3, ReconstructionKind::cweno5}) {
    const ReconstructionOperator op(kind);
    Field zero(g, 1), lin(g, 1);
    for (int i = -2; i < 18; ++i) {
      zero(0, i) = 0.0;
      lin(0, i) = 3.0 - 2.0 * g.center(0, i);
    }
    for (int i = 0; i < 16; ++i) {
      const CellPolynomial pz = op.reconstruct_cell(zero, 0, i);
      const CellPolynomial pl = op.reconstruct_cell(lin, 0, i);
      for (double xi : {-0.5, -0.2, 0.0, 0.3, 0.5}) {
        zero_err = std::max(zero_err, std::abs(pz.at_local(xi)));
        if (kind != ReconstructionKind::constant)
          lin_err = std::max(lin_err, std::abs(pl.at_local(xi) - (3.0 - 2.0 * (g.center(0, i) + xi * g.dx(0)))));
      }
    }
  }
  {
    const Grid g2 = Grid::rectangle({0.0, 0.0}, {1.0, 1.0}, {8, 8}, 1);
    const ReconstructionOperator op(ReconstructionKind::cweno3_2d);
    Field lin(g2, 1);
    CellRange::interior(g2, 1).for_each([&](int i, int j) {
      const Point c = g2.cell_center(i, j);
      lin(0, i, j) = 1.0 + c[0] - 2.0 * c[1];
    });
    CellRange::interior(g2).for_each([&](int i, int j) {
      const CellPolynomial p = op.reconstruct_cell(lin, 0, i, j);
      const Point x = g2.local_to_physical(i, j, 0.5, -0.5);
      lin_err = std::max(lin_err, std::abs(p.at_local(0.5, -0.5) - (1.0 + x[0] - 2.0 * x[1])));
    });
  }
  out.require(zero_err == 0.0, "zero preservation " + fmt("%.1e", zero_err));
  out.require(lin_err <= 1e-13, "linear exactness " + fmt("%.1e", lin_err));

  const EquilibriumPair iso = isothermal_pair(make_potential("x2"), 1.0, 1);
  double tele = 0.0;
  for (int level = 0; level <= 3; ++level) {
    const Point a{0.1, 0.0}, b{0.35, 0.0};
    const double exact = (iso.beta(b) - iso.beta(a)) / 0.25;
    tele = std::max(tele, std::abs(romberg_wb(iso.alpha, iso, a, b, level) - exact) / std::abs(exact));
  }
  out.require(tele <= 4e-15, "Romberg telescoping " + fmt("%.1e", tele));

  std::vector<Point> pts;
  for (int n = 1; n < 20; ++n) pts.push_back({0.05 * n, 0.03 * n + 0.1});
  const std::vector<EquilibriumPair> pairs{
      isothermal_pair(make_potential("x"), 1.0, 1),        isothermal_pair(make_potential("x2"), 1.0, 1),
      isothermal_pair(make_potential("sin2pix"), 1.0, 1),  polytropic_pair(make_potential("x2"), 1.2, 1),
      nonisothermal_1d_pair(),                             isothermal_pair(make_potential("x+y"), 1 / 1.21, 2),
      polytropic_pair(make_potential("x+y"), 1.2, 2),      radial_general_pair(),
      isothermal_pair(make_potential("r"), 1.0, 2),        constant_density_pair(make_potential("x"), 1.0, 3.0, 1),
      with_velocity(isothermal_pair(make_potential("y"), 1 / 1.21, 2), 1.0)};
  bool identity = true;
  for (const auto& p : pairs) identity = identity && verify_equilibrium_identity(p, pts, 1e-5, 1e-7).passed;
  out.require(identity, "equilibrium identity (" + std::to_string(pairs.size()) + " pairs)");

  RunConfig cfg;
  cfg.order = 3;
  cfg.boundary = BoundarySpec::uniform(BoundaryKind::periodic);
  cfg.equilibrium = {"isothermal", "zero", {{"temperature", 1.0}}};
  const Grid gp = Scheme::make_grid({0.0, 0.0}, {1.0, 1.0}, {64, 1}, 1, 3);
  const Scheme scheme(gp, cfg, make_equilibrium(cfg.equilibrium, 1));
  Field u = scheme.project_primitive([](Point x) {
    return PrimitiveState{1.0 + 0.3 * std::sin(2 * std::numbers::pi * x[0]), {0.5, 0.0}, 1.0 + 0.2 * std::cos(2 * std::numbers::pi * x[0])};
  });
  auto mass = [&](const Field& f) {
    double s = 0.0;
    for (int i = 0; i < 64; ++i) s += f(0, i);
    return s;
  };
  const double m0 = mass(u);
  const TimeIntegrator rk = TimeIntegrator::for_order(3);
  double t = 0.0;
  for (int n = 0; n < 100; ++n) {
    scheme.apply_boundary(u, t);
    const double dt = scheme.stable_dt(u);
    scheme.advance(rk, u, t, dt);
    t += dt;
  }
  const double drift = std::abs(mass(u) - m0) / m0;
  out.require(drift <= 1e-13, "mass drift " + fmt("%.1e", drift));
  return out;
}

Outcome rayleigh_taylor() {
  Outcome out;
  Experiment flat = default_experiment(Scenario::rayleigh_taylor);
  flat.rt.eta = 0.0;
  flat.rt.drho = 0.0;
  flat.config.final_time = 0.25;
  const CaseRun f = run_case(flat, 40);
  const double dev = max_of(l1_norm(f.final_state, f.initial));
  out.require(dev <= 1e-13, "degenerate deviation " + fmt("%.1e", dev));

  Experiment e = default_experiment(Scenario::rayleigh_taylor);
  try {
    const CaseRun run = run_case(e, 100);
    const Grid& g = run.final_state.grid();
    double worst = 0.0;
    CellRange::interior(g).for_each([&](int i, int j) {
      const Point c = g.cell_center(i, j);
      if (std::hypot(c[0], c[1]) <= 0.9) return;
      worst = std::max(worst, std::abs(run.final_state(0, i, j) - run.initial(0, i, j)));
    });
    out.require(worst <= 1e-3, "100^2 t=1 outer density " + fmt("%.2e", worst));
  } catch (const std::exception& ex) {
    out.require(false, std::string("100^2 run aborted: ") + ex.what());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  std::set<int> only;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--strict")
      strict = true;
    else
      only.insert(std::atoi(arg.c_str()));
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1D convergence", convergence_1d},
      {"1D well balance", wellbalance_1d},
      {"UNB residual scale", unbalanced_residual},
      {"perturbation resolution", perturbation},
      {"2D accuracy", [] { return accuracy_2d(Scenario::accuracy_2d, "static"); }},
      {"2D well balance", wellbalance_2d},
      {"moving equilibrium", moving_equilibrium},
      {"property suite", property_suite},
      {"Rayleigh-Taylor", rayleigh_taylor},
  };

  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const int id = static_cast<int>(n) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", id, criteria[n].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d criteria failed\n", failed);
  return strict && failed ? 1 : 0;
}
