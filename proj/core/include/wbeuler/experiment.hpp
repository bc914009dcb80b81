#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wbeuler/config.hpp"
#include "wbeuler/equilibrium.hpp"
#include "wbeuler/report.hpp"
#include "wbeuler/scenarios.hpp"
#include "wbeuler/solver.hpp"

namespace wbeuler {

enum class Scenario {
  convergence_1d,
  wellbalance_1d,
  perturb_1d,
  accuracy_2d,
  wellbalance_2d,
  perturb_2d,
  rayleigh_taylor,
  moving_accuracy,
  moving_wellbalance,
  custom
};

Scenario parse_scenario(std::string_view name);
std::string to_string(Scenario s);

/// One experiment: a scenario, scheme settings and the grids to run.
/// Grid entries are cells per direction.
struct Experiment {
  Scenario scenario = Scenario::convergence_1d;
  int dim = 1;
  RunConfig config;
  std::vector<int> grids;
  Point lo{0.0, 0.0};
  Point hi{1.0, 1.0};
  double amplitude = 0.0;  ///< perturbation amplitude
  double k = 5.0;          ///< wave number of the manufactured solutions
  double u0 = 1.0;         ///< advection / flow velocity of the initial state
  double v0 = 0.0;
  RayleighTaylor rt;
  bool dump_fields = false;
};

/// Scenario defaults (domain, equilibrium, boundaries, final time, grids).
Experiment default_experiment(Scenario s);

/// Flat JSON object; unspecified keys keep the scenario defaults and unknown
/// keys raise ConfigError.
Experiment parse_experiment(const std::string& json_text);

/// Everything needed to run one grid of an experiment.
struct CaseSetup {
  Grid grid;
  RunConfig config;
  EquilibriumPair pair;
  ExactSolution exact;                          ///< empty when there is none
  std::function<ConservedState(Point)> initial;
  bool compare_to_initial = true;               ///< well-balance style deviation
};

CaseSetup setup_case(const Experiment& exp, int n);

struct CaseRun {
  Field initial;
  Field final_state;
  Field reference;  ///< exact averages at the final time, or the initial state
  Field beta_avg;
  Scheme::EvolveStats stats;
};

/// Project, evolve to the final time and build the reference field.
CaseRun run_case(const Experiment& exp, int n);

/// L1 errors (or deviations) over all grids of the experiment.
ErrorTable run_study(const Experiment& exp);

struct ExperimentOutput {
  ErrorTable table;
  std::vector<std::filesystem::path> files;
};

/// run_study plus CSV and optional field dumps into config.output_dir.
ExperimentOutput run_experiment(const Experiment& exp);

/// Overlap-weighted average of fine 1D cell values onto the cells of `coarse`.
std::vector<double> restrict_to(const Grid& fine, std::span<const double> values, const Grid& coarse);

/// Relative L1 distance sum |a - ref| / sum |ref| over cells with centers in [a_lo, a_hi].
double relative_l1(const Grid& grid, std::span<const double> a, std::span<const double> ref, double x_lo,
                   double x_hi);

/// Interior pressure fluctuation of a 1D run, one value per cell.
std::vector<double> pressure_fluctuation_profile(const CaseRun& run, double gamma);

}  // namespace wbeuler
