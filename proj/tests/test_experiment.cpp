#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "rclab/errors.hpp"
#include "rclab/experiment.hpp"

using namespace rclab;

TEST_CASE("omega grid and p mapping") {
  const auto grid = omega_grid(-2, 2, 1);
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == -2);
  CHECK(grid.back() == 2);
  CHECK_THROWS_AS(omega_grid(0, 1, 0), PreconditionError);
  CHECK_THROWS_AS(omega_grid(1, 0, 1), PreconditionError);

  CHECK(p_from_omega(30, 2, -1000) == 0.0);
  CHECK(p_from_omega(30, 2, 1000) == 1.0);
  CHECK(p_from_omega(30, 2, 0) ==
        doctest::Approx(2 * std::log(30.0) / 30).epsilon(1e-12));
}

TEST_CASE("sweep rows at the extreme probabilities") {
  ExperimentConfig cfg;
  cfg.n = 7;
  cfg.k = 2;
  cfg.trials = 20;
  cfg.omegas = {-1000.0, 1000.0};
  cfg.master_seed = RngSeed{11};
  const auto rows = run_threshold_sweep(cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].p == 0.0);
  CHECK(rows[0].frac_h_vanishes == 0.0);
  CHECK(rows[0].frac_no_isolated == 0.0);
  CHECK(rows[0].mean_isolated == static_cast<double>(binomial(7, 2)));
  CHECK(rows[0].violations == 0);
  CHECK(rows[0].second_moment_ok);
  CHECK(rows[1].p == 1.0);
  CHECK(rows[1].frac_h_vanishes == 1.0);
  CHECK(rows[1].frac_no_isolated == 1.0);
  CHECK(rows[1].mean_isolated == 0.0);
  CHECK(rows[1].second_moment_ok);
}

TEST_CASE("csv output is stable and carries the fixed header") {
  ExperimentConfig cfg;
  cfg.n = 9;
  cfg.k = 2;
  cfg.trials = 30;
  cfg.omegas = omega_grid(-2, 2, 2);
  cfg.master_seed = RngSeed{21};
  const auto rows = run_threshold_sweep(cfg);
  std::ostringstream a, b;
  write_sweep_csv(rows, a);
  write_sweep_csv(run_threshold_sweep(cfg), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("omega,p,trials,frac_H_vanishes,frac_no_isolated,"
                      "mean_isolated,expected_isolated\n", 0) == 0);
  // Sorted by omega.
  CHECK(rows.front().omega < rows.back().omega);
}

TEST_CASE("coupled sampling makes the vanishing fraction monotone") {
  ExperimentConfig cfg;
  cfg.n = 15;
  cfg.k = 2;
  cfg.trials = 60;
  cfg.omegas = omega_grid(-4, 4, 1);
  cfg.master_seed = RngSeed{31};
  const auto rows = run_threshold_sweep(cfg);
  for (std::size_t j = 1; j < rows.size(); ++j) {
    CHECK(rows[j].frac_h_vanishes >= rows[j - 1].frac_h_vanishes);
    CHECK(rows[j].violations == 0);
  }
}

TEST_CASE("k=1 sweep fraction equals the connected-graph fraction") {
  ExperimentConfig cfg;
  cfg.n = 10;
  cfg.k = 1;
  cfg.trials = 80;
  cfg.omegas = {0.5};
  cfg.master_seed = RngSeed{41};
  const auto rows = run_threshold_sweep(cfg);
  REQUIRE(rows.size() == 1);
  int connected = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    const Complex y = sample_complex(cfg.n, cfg.k, rows[0].p,
                                     sweep_trial_seed(cfg.master_seed, t));
    connected += oracles::connected_complex_k1(y);
  }
  CHECK(rows[0].frac_h_vanishes ==
        static_cast<double>(connected) / cfg.trials);
}

TEST_CASE("plot emission") {
  CHECK_THROWS_AS(emit_plot({}, "unused.dat"), PreconditionError);
  SweepRow row;
  row.omega = 1.5;
  row.frac_h_vanishes = 0.25;
  row.frac_no_isolated = 0.5;
  const std::string path = "test_plot_tmp.dat";
  emit_plot({row}, path);
  std::ifstream in(path);
  std::string header, data;
  std::getline(in, header);
  std::getline(in, data);
  CHECK(header == "# omega frac_H_vanishes frac_no_isolated");
  CHECK(data == "1.5 0.25 0.5");
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("bound audit, exhaustive at n=5") {
  const FiniteAbelianGroup z2{{2}};
  const auto report = run_bound_audit(5, 2, z2, AuditMode::kExhaustive, 0,
                                      RngSeed{0}, 1 << 22);
  CHECK(report.cochains_checked == 1023);
  CHECK(report.weight_bound_violations == 0);
  CHECK(report.small_support_violations == 0);
  CHECK(report.min_slack_numerator >= 0);
  CHECK_FALSE(report.partition_included);  // 3 does not divide 5
  CHECK(report.minimal_class_count > 0);
}

TEST_CASE("bound audit, random mode includes the partition witness") {
  const FiniteAbelianGroup z3{{3}};
  const auto report = run_bound_audit(6, 2, z3, AuditMode::kRandom, 40,
                                      RngSeed{13}, 1 << 22);
  CHECK(report.cochains_checked == 41);  // 40 random plus the partition
  CHECK(report.weight_bound_violations == 0);
  CHECK(report.small_support_violations == 0);
  CHECK(report.partition_included);
  CHECK(report.partition_support == 4);
  CHECK(report.partition_b == 8);
  CHECK(report.partition_weight == 4);
  CHECK(report.equality_count >= 1);  // the partition cochain is tight
  CHECK(report.min_slack_numerator == 0);
}

TEST_CASE("binomial tail values") {
  CHECK(binomial_tail_cdf(10, 0.0, 3) == 1.0);
  CHECK(binomial_tail_cdf(10, 0.4, 10) == 1.0);
  CHECK(binomial_tail_cdf(10, 0.4, -1) == 0.0);
  // Symmetric case: Pr[Bin(10, 1/2) <= 5] = 638/1024.
  CHECK(binomial_tail_cdf(10, 0.5, 5) ==
        doctest::Approx(0.623046875).epsilon(1e-12));
}

TEST_CASE("domination experiment summary") {
  const auto report =
      run_domination_experiment(40, 2, 60, 0.125, 60, RngSeed{17});
  CHECK(report.attempts == 60);
  CHECK(report.outcomes_verified);
  CHECK(report.finder_successes + report.finder_failures == 60);
  CHECK(report.mean_theta > 0.0);
  CHECK(report.mean_theta < 1.0);
  CHECK(report.success_bound ==
        doctest::Approx(0.125 * 0.875 * report.mean_theta));
  CHECK(report.stat_ok);

  CHECK_THROWS_AS(run_domination_experiment(40, 2, 60, 0.9, 10, RngSeed{1}),
                  PreconditionError);
  CHECK_THROWS_AS(run_domination_experiment(5, 2, 4, 0.125, 10, RngSeed{1}),
                  PreconditionError);
}
