#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "wbeuler/errors.hpp"
#include "wbeuler/experiment.hpp"
#include "wbeuler/norms.hpp"
#include "wbeuler/report.hpp"
#include "wbeuler/scenarios.hpp"

using namespace wbeuler;
using std::numbers::pi;

TEST(Norms, RateAndOrder) {
  EXPECT_DOUBLE_EQ(convergence_rate(8e-3, 1e-3), 3.0);
  const std::vector<double> n{10, 20, 40}, e{1.0, 0.25, 0.0625};
  EXPECT_NEAR(observed_order(n, e), 2.0, 1e-14);
}

TEST(Report, CsvLayout) {
  ErrorTable t(1);
  t.add(20, {1e-2, 2e-2, 4e-2});
  t.add(40, {1.25e-3, 2.5e-3, 5e-3});
  EXPECT_EQ(t.csv(),
            "N,err_rho,rate_rho,err_mx,rate_mx,err_E,rate_E\n"
            "20,1.00000e-02,,2.00000e-02,,4.00000e-02,\n"
            "40,1.25000e-03,3.00,2.50000e-03,3.00,5.00000e-03,3.00\n");
  EXPECT_DOUBLE_EQ(t.rows()[1].rate[0], convergence_rate(1e-2, 1.25e-3));
}

TEST(Report, CsvHeader2dAndZeroErrors) {
  ErrorTable t(2);
  t.add(20, {0.0, 0.0, 0.0, 0.0});
  t.add(40, {0.0, 0.0, 0.0, 0.0});
  EXPECT_EQ(t.csv().substr(0, t.csv().find('\n')), "N,err_rho,rate_rho,err_mx,rate_mx,err_my,rate_my,err_E,rate_E");
  EXPECT_TRUE(std::isnan(t.rows()[1].rate[0]));
}

TEST(Experiment, UnknownKeyRejected) {
  EXPECT_THROW(parse_experiment(R"({"scenario":"wellbalance-1d","ordr":3})"), ConfigError);
  EXPECT_THROW(parse_experiment(R"({"scenario":"nope"})"), ConfigError);
  EXPECT_THROW(parse_experiment("{oops"), ConfigError);
}

TEST(Experiment, ParseOverrides) {
  const Experiment e = parse_experiment(
      R"({"scenario":"wellbalance-1d","order":5,"grids":[10,20],"mode":"unb","potential":"x2","cfl":0.3})");
  EXPECT_EQ(e.scenario, Scenario::wellbalance_1d);
  EXPECT_EQ(e.config.order, 5);
  EXPECT_EQ(e.grids, (std::vector<int>{10, 20}));
  EXPECT_EQ(e.config.mode, SchemeMode::unbalanced);
  EXPECT_EQ(e.config.equilibrium.potential, "x2");
  EXPECT_DOUBLE_EQ(e.config.cfl, 0.3);
}

TEST(Experiment, ScenarioNamesRoundTrip) {
  for (const char* n : {"convergence-1d", "wellbalance-1d", "perturb-1d", "accuracy-2d", "wellbalance-2d",
                        "perturb-2d", "rayleigh-taylor", "moving-accuracy", "moving-wellbalance", "custom"})
    EXPECT_EQ(to_string(parse_scenario(n)), n);
}

TEST(Experiment, WellBalanceStudyIsMachineZero) {
  Experiment e = default_experiment(Scenario::wellbalance_1d);
  e.grids = {20};
  e.config.final_time = 0.5;
  const ErrorTable t = run_study(e);
  for (double v : t.rows()[0].error) EXPECT_LE(v, 1e-14);
}

TEST(Experiment, ZeroAmplitudePerturbationIsWellBalanceRun) {
  Experiment p = default_experiment(Scenario::perturb_1d);
  p.amplitude = 0.0;
  p.grids = {30};
  p.config.final_time = 0.1;
  Experiment w = default_experiment(Scenario::wellbalance_1d);
  w.lo = p.lo;
  w.hi = p.hi;
  w.config.equilibrium = p.config.equilibrium;
  w.config.final_time = 0.1;
  const CaseRun a = run_case(p, 30), b = run_case(w, 30);
  for (double v : l1_norm(a.final_state, b.final_state)) EXPECT_EQ(v, 0.0);
}

TEST(Experiment, RunIsReproducible) {
  Experiment e = default_experiment(Scenario::convergence_1d);
  const CaseRun a = run_case(e, 40), b = run_case(e, 40);
  for (std::size_t k = 0; k < a.final_state.raw().size(); ++k)
    if (!std::isnan(a.final_state.raw()[k])) ASSERT_EQ(a.final_state.raw()[k], b.final_state.raw()[k]);
}

TEST(Experiment, WritesCsvAndFieldDump) {
  const auto dir = std::filesystem::temp_directory_path() / "wbeuler_test_out";
  std::filesystem::remove_all(dir);
  Experiment e = default_experiment(Scenario::wellbalance_2d);
  e.grids = {8};
  e.config.final_time = 0.01;
  e.config.output_dir = dir.string();
  e.dump_fields = true;
  const ExperimentOutput out = run_experiment(e);
  ASSERT_EQ(out.files.size(), 2u);
  std::ifstream dump(dir / "wellbalance-2d_N8.dat");
  int nx = 0, ny = 0;
  dump >> nx >> ny;
  EXPECT_EQ(nx, 8);
  EXPECT_EQ(ny, 8);
  std::string line;
  int rows = 0;
  std::getline(dump, line);
  while (std::getline(dump, line))
    if (!line.empty()) ++rows;
  EXPECT_EQ(rows, 64);
  EXPECT_TRUE(std::filesystem::exists(dir / "wellbalance-2d.csv"));
  std::filesystem::remove_all(dir);
}

TEST(Experiment, RestrictAndRelativeDistance) {
  const Grid fine = Grid::line(0.0, 1.0, 6, 0), coarse = Grid::line(0.0, 1.0, 2, 0);
  const std::vector<double> v{1, 2, 3, 4, 5, 6};
  const auto r = restrict_to(fine, v, coarse);
  EXPECT_DOUBLE_EQ(r[0], 2.0);
  EXPECT_DOUBLE_EQ(r[1], 5.0);
  const std::vector<double> a{2.2, 5.0};
  EXPECT_NEAR(relative_l1(coarse, a, r, 0.0, 1.0), 0.2 / 7.0, 1e-15);
}

TEST(Scenarios, ManufacturedBalance) {
  const double k = 5.0, h = 1e-5;
  for (double x : {0.1, 0.77, 1.3}) {
    const double dp = (manufactured_1d(x + h, 0.2, k, 1.0).p - manufactured_1d(x - h, 0.2, k, 1.0).p) / (2 * h);
    EXPECT_NEAR(dp + manufactured_1d(x, 0.2, k, 1.0).rho, 0.0, 1e-9);
  }
  const PrimitiveState w = manufactured_1d(0.1, 0.1, k, 1.0);
  EXPECT_DOUBLE_EQ(w.rho, 1.0);
  EXPECT_NEAR(w.p, 4.5 + 1.0 / (5.0 * k * pi), 1e-15);
  const PrimitiveState w2 = manufactured_2d({0.3, 0.4}, 0.0, 1.0, 0.0, 0.0);
  EXPECT_NEAR(w2.rho, 1.0 + 0.2 * std::sin(0.7 * pi), 1e-15);
}

TEST(Scenarios, SoundCrossingTime) {
  EXPECT_NEAR(sound_crossing_time([](double) { return std::sqrt(1.4); }, 0.0, 1.0), 2.0 / std::sqrt(1.4), 1e-14);
  EXPECT_NEAR(sound_crossing_time([](double) { return 2.0; }, 0.0, 1.0), 1.0, 1e-14);
  auto c = [](double x) { return std::sqrt(1.4 * (1.0 + x)); };
  const double ref = 2.0 * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                               [&](double x) { return 1.0 / c(x); }, 0.0, 1.0);
  EXPECT_NEAR(sound_crossing_time(c, 0.0, 1.0), ref, 1e-13);
  EXPECT_NEAR(sound_crossing_time(c, 0.0, 0.5), sound_crossing_time([&](double x) { return c(0.5 * x); }, 0.0, 1.0) / 2.0, 1e-14);
  EXPECT_THROW(sound_crossing_time([](double) { return 0.0; }, 0.0, 1.0), NonPhysicalState);
}

TEST(Scenarios, RayleighTaylorInterfaces) {
  RayleighTaylor rt;
  rt.eta = 0.0;
  const double in = rt.r0 * (1.0 - 1e-12), out = rt.r0 * (1.0 + 1e-12);
  const PrimitiveState a = rt({in, 0.0}), b = rt({out, 0.0});
  EXPECT_NEAR(a.p, b.p, 1e-11);
  EXPECT_NEAR(b.rho - a.rho, rt.drho, 1e-11);

  RayleighTaylor flat;
  flat.eta = 0.0;
  flat.drho = 0.0;
  for (double r : {0.2, 0.5, 0.8}) {
    const PrimitiveState w = flat({r * std::cos(1.0), r * std::sin(1.0)});
    EXPECT_NEAR(w.rho, std::exp(-r), 1e-15);
    EXPECT_NEAR(w.p, std::exp(-r), 1e-15);
  }
}

TEST(Scenarios, PerturbationIsPressureOnly) {
  const PrimitiveState a = perturbed_isothermal_1d(0.5, 1e-3), b = perturbed_isothermal_1d(0.5, 0.0);
  EXPECT_EQ(a.rho, b.rho);
  EXPECT_NEAR(a.p - b.p, 1e-3, 1e-15);
  const PrimitiveState c = perturbed_isothermal_2d({0.3, 0.3}, 1e-5, 1.0 / 1.21);
  EXPECT_NEAR(c.p - std::exp(-0.6 * 1.21), 1e-5, 1e-15);
}
