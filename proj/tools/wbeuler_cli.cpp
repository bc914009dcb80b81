#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wbeuler/errors.hpp"
#include "wbeuler/experiment.hpp"

using namespace wbeuler;

namespace {

struct Options {
  int order = 0;
  std::string flux = "rusanov";
  double cfl = 0.45;
  std::vector<int> grids;
  std::string mode;
  std::string equilibrium;
  std::string potential;
  std::string out;
  int dim = 1;
  double amplitude = -1.0;
  bool minmod = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--order", o.order, "Scheme order (1, 2, 3 or 5; 3 in 2D)");
  cmd->add_option("--flux", o.flux, "Numerical flux")->check(CLI::IsMember({"rusanov", "llf"}));
  cmd->add_option("--cfl", o.cfl, "CFL number")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--grids", o.grids, "Cells per direction, comma separated")->delimiter(',');
  cmd->add_option("--mode", o.mode, "wb or unb")->check(CLI::IsMember({"wb", "unb"}));
  cmd->add_option("--equilibrium", o.equilibrium,
                  "isothermal, polytropic, nonisothermal, radial or constant-density");
  cmd->add_option("--potential", o.potential, "Gravitational potential name");
  cmd->add_option("--out", o.out, "Output directory for CSV tables and field dumps");
  cmd->add_flag("--minmod", o.minmod, "Limit second-order slopes with minmod");
}

void apply(Experiment& e, const Options& o) {
  if (o.order > 0) e.config.order = o.order;
  e.config.flux = parse_flux(o.flux);
  e.config.cfl = o.cfl;
  e.config.limit_slopes = o.minmod;
  if (!o.grids.empty()) e.grids = o.grids;
  if (!o.mode.empty()) e.config.mode = parse_mode(o.mode);
  if (!o.potential.empty()) e.config.equilibrium.potential = o.potential;
  if (!o.equilibrium.empty()) {
    e.config.equilibrium.name = o.equilibrium;
    if (o.equilibrium == "polytropic") e.config.equilibrium.params.emplace("nu", 1.2);
    if (o.equilibrium == "polytropic" && o.potential.empty() && e.dim == 1)
      e.config.equilibrium.potential = "x2";
  }
  if (o.amplitude >= 0.0) e.amplitude = o.amplitude;
  e.config.output_dir = o.out;
}

int execute(const Experiment& e) {
  e.config.validate(e.dim);
  const ExperimentOutput out = run_experiment(e);
  std::cout << out.table.csv();
  for (const auto& f : out.files) std::cerr << "wrote " << f.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Well-balanced finite-volume solver for the Euler equations with gravity"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run an experiment described by a JSON file");
  run->add_option("config", config_path, "Configuration file")->required()->check(CLI::ExistingFile);

  Options conv, wb, pert, rt, mov;
  auto* convergence = app.add_subcommand("convergence", "Accuracy study on the manufactured solutions");
  add_common(convergence, conv);
  convergence->add_option("--dim", conv.dim, "1 or 2")->check(CLI::IsMember({1, 2}));

  auto* wellbalance = app.add_subcommand("wellbalance", "Preservation of an equilibrium");
  add_common(wellbalance, wb);
  wellbalance->add_option("--dim", wb.dim, "1 or 2")->check(CLI::IsMember({1, 2}));

  auto* perturb = app.add_subcommand("perturb", "Small pressure perturbation of an isothermal state");
  add_common(perturb, pert);
  perturb->add_option("--dim", pert.dim, "1 or 2")->check(CLI::IsMember({1, 2}));
  perturb->add_option("--amplitude", pert.amplitude, "Perturbation amplitude");

  auto* rayleigh = app.add_subcommand("rt", "Radial Rayleigh-Taylor instability");
  add_common(rayleigh, rt);

  auto* moving = app.add_subcommand("moving", "Moving equilibrium: accuracy and preservation");
  add_common(moving, mov);
  bool accuracy = false;
  moving->add_flag("--accuracy", accuracy, "Run the accuracy study instead of the preservation test");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      std::ifstream in(config_path);
      std::stringstream ss;
      ss << in.rdbuf();
      Experiment e = parse_experiment(ss.str());
      return execute(e);
    }
    if (*convergence) {
      Experiment e = default_experiment(conv.dim == 2 ? Scenario::accuracy_2d : Scenario::convergence_1d);
      apply(e, conv);
      return execute(e);
    }
    if (*wellbalance) {
      Experiment e = default_experiment(wb.dim == 2 ? Scenario::wellbalance_2d : Scenario::wellbalance_1d);
      apply(e, wb);
      return execute(e);
    }
    if (*perturb) {
      Experiment e = default_experiment(pert.dim == 2 ? Scenario::perturb_2d : Scenario::perturb_1d);
      apply(e, pert);
      return execute(e);
    }
    if (*rayleigh) {
      Experiment e = default_experiment(Scenario::rayleigh_taylor);
      apply(e, rt);
      return execute(e);
    }
    if (*moving) {
      Experiment e =
          default_experiment(accuracy ? Scenario::moving_accuracy : Scenario::moving_wellbalance);
      apply(e, mov);
      return execute(e);
    }
  } catch (const ConfigError& ex) {
    std::cerr << "configuration error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
