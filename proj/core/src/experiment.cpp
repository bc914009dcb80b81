#include "wbeuler/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"
#include "wbeuler/errors.hpp"
#include "wbeuler/norms.hpp"

namespace wbeuler {

namespace {

constexpr double kTableTemperature = 1.0 / 1.21;

struct ScenarioName {
  Scenario id;
  const char* name;
};

constexpr ScenarioName kScenarioNames[] = {
    {Scenario::convergence_1d, "convergence-1d"},   {Scenario::wellbalance_1d, "wellbalance-1d"},
    {Scenario::perturb_1d, "perturb-1d"},           {Scenario::accuracy_2d, "accuracy-2d"},
    {Scenario::wellbalance_2d, "wellbalance-2d"},   {Scenario::perturb_2d, "perturb-2d"},
    {Scenario::rayleigh_taylor, "rayleigh-taylor"}, {Scenario::moving_accuracy, "moving-accuracy"},
    {Scenario::moving_wellbalance, "moving-wellbalance"}, {Scenario::custom, "custom"},
};

bool is_two_dimensional(Scenario s) {
  switch (s) {
    case Scenario::accuracy_2d:
    case Scenario::wellbalance_2d:
    case Scenario::perturb_2d:
    case Scenario::rayleigh_taylor:
    case Scenario::moving_accuracy:
    case Scenario::moving_wellbalance:
      return true;
    default:
      return false;
  }
}

ConservedState conserved(const PrimitiveState& w, double gamma) { return conserved_from_primitive(w, gamma); }

}  // namespace

Scenario parse_scenario(std::string_view name) {
  for (const auto& s : kScenarioNames)
    if (name == s.name) return s.id;
  throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

std::string to_string(Scenario s) {
  for (const auto& e : kScenarioNames)
    if (e.id == s) return e.name;
  return "unknown";
}

Experiment default_experiment(Scenario s) {
  Experiment e;
  e.scenario = s;
  e.dim = is_two_dimensional(s) ? 2 : 1;
  RunConfig& c = e.config;
  c.order = 3;
  c.boundary = BoundarySpec::uniform(BoundaryKind::equilibrium);
  c.equilibrium = EquilibriumSpec{"isothermal", "x", {}};
  switch (s) {
    case Scenario::convergence_1d:
      e.lo = {0.0, 0.0};
      e.hi = {2.0, 1.0};
      e.k = 5.0;
      e.u0 = 1.0;
      c.final_time = 0.1;
      c.boundary = BoundarySpec::uniform(BoundaryKind::exact);
      c.scale_time_step = true;
      e.grids = {20, 40, 80, 160, 320, 640};
      break;
    case Scenario::wellbalance_1d:
      c.final_time = 2.0;
      c.equilibrium.params["temperature"] = 1.0;
      e.grids = {20, 40, 80, 160};
      break;
    case Scenario::perturb_1d:
      e.lo = {-1.0, 0.0};
      e.hi = {2.0, 1.0};
      e.amplitude = 1e-3;
      c.final_time = 0.25;
      c.equilibrium.potential = "x2";
      c.equilibrium.params["temperature"] = 1.0;
      e.grids = {120};
      e.dump_fields = true;
      break;
    case Scenario::accuracy_2d:
    case Scenario::moving_accuracy:
      e.lo = {0.0, 0.0};
      e.hi = {2.0, 2.0};
      e.k = 1.0;
      e.u0 = 1.0;
      e.v0 = 0.0;
      c.final_time = 0.1;
      c.boundary = BoundarySpec::uniform(BoundaryKind::exact);
      c.equilibrium.potential = "x+y";
      if (s == Scenario::moving_accuracy) c.equilibrium.params["velocity"] = 1.0;
      e.grids = {20, 40, 80, 160};
      break;
    case Scenario::wellbalance_2d:
      c.final_time = 0.1;
      c.equilibrium.potential = "x+y";
      c.equilibrium.params["temperature"] = kTableTemperature;
      e.grids = {20, 40, 80};
      break;
    case Scenario::perturb_2d:
      e.amplitude = 1e-5;
      c.final_time = 0.15;
      c.equilibrium.potential = "x+y";
      c.equilibrium.params["temperature"] = kTableTemperature;
      e.grids = {50};
      e.dump_fields = true;
      break;
    case Scenario::rayleigh_taylor:
      e.lo = {-1.0, -1.0};
      e.hi = {1.0, 1.0};
      c.final_time = 1.0;
      c.boundary = BoundarySpec::uniform(BoundaryKind::exact);
      c.equilibrium.potential = "r";
      c.equilibrium.params["temperature"] = 1.0;
      e.grids = {100};
      e.dump_fields = true;
      break;
    case Scenario::moving_wellbalance:
      c.final_time = 0.1;
      c.boundary = BoundarySpec::uniform(BoundaryKind::exact);
      c.equilibrium.potential = "y";
      c.equilibrium.params["temperature"] = kTableTemperature;
      c.equilibrium.params["velocity"] = 1.0;
      e.u0 = 1.0;
      e.grids = {20, 40, 80, 160};
      break;
    case Scenario::custom:
      c.final_time = 0.1;
      c.equilibrium.params["temperature"] = 1.0;
      e.grids = {50};
      break;
  }
  return e;
}

Experiment parse_experiment(const std::string& json_text) {
  using nlohmann::json;
  static const std::set<std::string> allowed{
      "scenario", "order",  "flux",     "cfl",        "gamma",   "mode",     "equilibrium",
      "potential", "temperature", "nu", "velocity",   "final_time", "grids", "boundary",
      "domain",   "amplitude", "k",     "u0",         "v0",      "out",      "scale_time_step",
      "dim",      "dump",      "limiter"};
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("invalid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  for (const auto& item : j.items())
    if (!allowed.count(item.key())) throw ConfigError("unknown configuration key '" + item.key() + "'");

  try {
    Experiment e = default_experiment(parse_scenario(j.value("scenario", std::string("custom"))));
    RunConfig& c = e.config;
    if (j.contains("dim")) e.dim = j["dim"].get<int>();
    if (j.contains("order")) c.order = j["order"].get<int>();
    if (j.contains("flux")) c.flux = parse_flux(j["flux"].get<std::string>());
    if (j.contains("cfl")) c.cfl = j["cfl"].get<double>();
    if (j.contains("gamma")) c.gamma = j["gamma"].get<double>();
    if (j.contains("mode")) c.mode = parse_mode(j["mode"].get<std::string>());
    if (j.contains("equilibrium")) c.equilibrium.name = j["equilibrium"].get<std::string>();
    if (j.contains("potential")) c.equilibrium.potential = j["potential"].get<std::string>();
    for (const char* key : {"temperature", "nu", "velocity"})
      if (j.contains(key)) c.equilibrium.params[key] = j[key].get<double>();
    if (j.contains("final_time")) c.final_time = j["final_time"].get<double>();
    if (j.contains("grids")) e.grids = j["grids"].get<std::vector<int>>();
    if (j.contains("boundary")) {
      const json& b = j["boundary"];
      if (b.is_string()) {
        c.boundary = BoundarySpec::uniform(parse_boundary(b.get<std::string>()));
      } else {
        const auto sides = b.get<std::vector<std::string>>();
        if (sides.size() != 4) throw ConfigError("boundary list needs four sides (x-lo, x-hi, y-lo, y-hi)");
        for (std::size_t s = 0; s < 4; ++s) c.boundary.sides[s] = parse_boundary(sides[s]);
      }
    }
    if (j.contains("domain")) {
      const auto d = j["domain"].get<std::vector<double>>();
      if (d.size() != 2 && d.size() != 4) throw ConfigError("domain is [x0, x1] or [x0, x1, y0, y1]");
      e.lo[0] = d[0];
      e.hi[0] = d[1];
      if (d.size() == 4) {
        e.lo[1] = d[2];
        e.hi[1] = d[3];
      }
    }
    if (j.contains("amplitude")) e.amplitude = j["amplitude"].get<double>();
    if (j.contains("k")) e.k = j["k"].get<double>();
    if (j.contains("u0")) e.u0 = j["u0"].get<double>();
    if (j.contains("v0")) e.v0 = j["v0"].get<double>();
    if (j.contains("out")) c.output_dir = j["out"].get<std::string>();
    if (j.contains("scale_time_step")) c.scale_time_step = j["scale_time_step"].get<bool>();
    if (j.contains("dump")) e.dump_fields = j["dump"].get<bool>();
    if (j.contains("limiter")) {
      const auto l = j["limiter"].get<std::string>();
      if (l != "minmod" && l != "none") throw ConfigError("limiter is 'minmod' or 'none'");
      c.limit_slopes = l == "minmod";
    }
    c.validate(e.dim);
    if (e.grids.empty() || std::any_of(e.grids.begin(), e.grids.end(), [](int n) { return n < 1; }))
      throw ConfigError("grids must be a non-empty list of positive sizes");
    return e;
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("bad configuration value: ") + ex.what());
  }
}

CaseSetup setup_case(const Experiment& exp, int n) {
  CaseSetup s;
  s.config = exp.config;
  const int dim = exp.dim;
  const double gamma = s.config.gamma;
  s.grid = Scheme::make_grid(exp.lo, exp.hi, {n, dim == 2 ? n : 1}, dim, s.config.order);
  EquilibriumSpec& spec = s.config.equilibrium;
  const double k = exp.k, u0 = exp.u0, v0 = exp.v0;

  switch (exp.scenario) {
    case Scenario::convergence_1d: {
      auto prim = [k, u0](Point x, double t) { return manufactured_1d(x[0], t, k, u0); };
      if (!spec.params.count("temperature"))
        spec.params["temperature"] =
            average_temperature([&](Point x) { return prim(x, 0.0); }, exp.lo, exp.hi, 1);
      s.exact = [prim, gamma](Point x, double t) { return conserved(prim(x, t), gamma); };
      s.compare_to_initial = false;
      break;
    }
    case Scenario::accuracy_2d:
    case Scenario::moving_accuracy: {
      auto prim = [k, u0, v0](Point x, double t) { return manufactured_2d(x, t, k, u0, v0); };
      if (!spec.params.count("temperature"))
        spec.params["temperature"] =
            average_temperature([&](Point x) { return prim(x, 0.0); }, exp.lo, exp.hi, 2);
      s.exact = [prim, gamma](Point x, double t) { return conserved(prim(x, t), gamma); };
      s.compare_to_initial = false;
      break;
    }
    case Scenario::perturb_1d: {
      const double a = exp.amplitude;
      s.initial = [a, gamma](Point x) { return conserved(perturbed_isothermal_1d(x[0], a), gamma); };
      break;
    }
    case Scenario::perturb_2d: {
      const double a = exp.amplitude;
      const double t_eq = spec.param("temperature", kTableTemperature);
      s.initial = [a, t_eq, gamma](Point x) { return conserved(perturbed_isothermal_2d(x, a, t_eq), gamma); };
      break;
    }
    case Scenario::rayleigh_taylor: {
      const RayleighTaylor rt = exp.rt;
      s.initial = [rt, gamma](Point x) { return conserved(rt(x), gamma); };
      break;
    }
    default:
      break;
  }

  s.pair = make_equilibrium(spec, dim);
  if (!s.initial) {
    if (s.exact) {
      auto ex = s.exact;
      s.initial = [ex](Point x) { return ex(x, 0.0); };
    } else {
      EquilibriumPair base = s.pair;
      if (exp.scenario == Scenario::moving_wellbalance) base = with_velocity(base, u0);
      const double a = exp.amplitude;
      const Point mid{0.5 * (exp.lo[0] + exp.hi[0]), dim == 2 ? 0.5 * (exp.lo[1] + exp.hi[1]) : 0.0};
      s.initial = [base, a, mid, gamma](Point x) {
        ConservedState u = base.state(x, gamma);
        if (a != 0.0) {
          const double d2 = (x[0] - mid[0]) * (x[0] - mid[0]) + (x[1] - mid[1]) * (x[1] - mid[1]);
          u.E += a * std::exp(-100.0 * d2) / (gamma - 1.0);
        }
        return u;
      };
    }
  }
  if (!s.exact && s.config.boundary.uses(BoundaryKind::exact)) {
    auto init = s.initial;
    s.exact = [init](Point x, double) { return init(x); };
  }
  return s;
}

CaseRun run_case(const Experiment& exp, int n) {
  CaseSetup s = setup_case(exp, n);
  const Scheme scheme(s.grid, s.config, s.pair, s.exact);
  CaseRun run;
  Field u = scheme.project(s.initial);
  run.initial = u;
  run.stats = scheme.evolve(u);
  run.final_state = std::move(u);
  if (s.compare_to_initial) {
    run.reference = run.initial;
  } else {
    const double tf = s.config.final_time;
    auto ex = s.exact;
    run.reference = scheme.project([ex, tf](Point x) { return ex(x, tf); });
  }
  run.beta_avg = scheme.reconstructor().tables().beta_avg();
  return run;
}

ErrorTable run_study(const Experiment& exp) {
  Experiment quiet = exp;
  quiet.config.output_dir.clear();
  quiet.dump_fields = false;
  return run_experiment(quiet).table;
}

ExperimentOutput run_experiment(const Experiment& exp) {
  ExperimentOutput out{ErrorTable(exp.dim), {}};
  const std::filesystem::path dir = exp.config.output_dir;
  const std::string stem = to_string(exp.scenario);
  for (int n : exp.grids) {
    const CaseRun run = run_case(exp, n);
    out.table.add(n, l1_norm(run.final_state, run.reference));
    if (exp.dump_fields && !dir.empty()) {
      const auto path = dir / (stem + "_N" + std::to_string(n) + ".dat");
      if (exp.dim == 2)
        write_field_2d(path, run.final_state, run.beta_avg, run.stats.time, exp.config.gamma);
      else
        write_field_1d(path, run.final_state, run.beta_avg, exp.config.gamma);
      out.files.push_back(path);
    }
  }
  if (!dir.empty()) {
    const auto path = dir / (stem + ".csv");
    write_text(path, out.table.csv());
    out.files.push_back(path);
  }
  return out;
}

std::vector<double> restrict_to(const Grid& fine, std::span<const double> values, const Grid& coarse) {
  std::vector<double> out(static_cast<std::size_t>(coarse.cells(0)), 0.0);
  for (int c = 0; c < coarse.cells(0); ++c) {
    const double a = coarse.face(0, c), b = coarse.face(0, c + 1);
    double sum = 0.0, covered = 0.0;
    for (int f = 0; f < fine.cells(0); ++f) {
      const double overlap = std::min(b, fine.face(0, f + 1)) - std::max(a, fine.face(0, f));
      if (overlap <= 0.0) continue;
      sum += overlap * values[static_cast<std::size_t>(f)];
      covered += overlap;
    }
    if (covered <= 0.0) throw GridMismatch("coarse cell not covered by the fine grid");
    out[static_cast<std::size_t>(c)] = sum / covered;
  }
  return out;
}

double relative_l1(const Grid& grid, std::span<const double> a, std::span<const double> ref, double x_lo,
                   double x_hi) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < grid.cells(0); ++i) {
    const double x = grid.center(0, i);
    if (x < x_lo || x > x_hi) continue;
    num += std::abs(a[static_cast<std::size_t>(i)] - ref[static_cast<std::size_t>(i)]);
    den += std::abs(ref[static_cast<std::size_t>(i)]);
  }
  if (!(den > 0.0)) throw std::invalid_argument("reference vanishes on the comparison window");
  return num / den;
}

std::vector<double> pressure_fluctuation_profile(const CaseRun& run, double gamma) {
  const Grid& g = run.final_state.grid();
  std::vector<double> p(static_cast<std::size_t>(g.cells(0)));
  for (int i = 0; i < g.cells(0); ++i)
    p[static_cast<std::size_t>(i)] = pressure_fluctuation(run.final_state, run.beta_avg, i, 0, gamma);
  return p;
}

}  // namespace wbeuler
