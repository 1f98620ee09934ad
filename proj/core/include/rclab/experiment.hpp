#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rclab/group.hpp"
#include "rclab/rng.hpp"

namespace rclab {

// Threshold sweep over omega, with p = (k log n + omega) / n clamped to
// [0, 1] (natural log). Trials share per-trial seeds across the whole grid,
// so the sampled complexes are nested in omega and the curves are monotone.
struct ExperimentConfig {
  int n = 30;
  int k = 2;
  std::string group = "Z2";
  std::vector<double> omegas;
  int trials = 200;
  RngSeed master_seed{42};
  std::string out_path;  // used by the CLI; empty means stdout only
};

// Seed used for trial t of a sweep. Shared across the omega grid on
// purpose: identical per-face uniforms make the sampled complexes nested
// in p.
RngSeed sweep_trial_seed(RngSeed master, int trial);

struct SweepRow {
  double omega = 0;
  double p = 0;
  int trials = 0;
  double frac_h_vanishes = 0;
  double frac_no_isolated = 0;
  double mean_isolated = 0;
  double expected_isolated = 0;
  // Trials with an isolated face but vanishing cohomology. Always 0; kept
  // as a recorded counter rather than an assumption.
  int violations = 0;
  double isolated_sample_std = 0;
  // |mean - expected| <= 3 std / sqrt(trials).
  bool second_moment_ok = true;
};

std::vector<double> omega_grid(double min, double max, double step);
double p_from_omega(int n, int k, double omega);

std::vector<SweepRow> run_threshold_sweep(const ExperimentConfig& cfg);

// Fixed columns: omega,p,trials,frac_H_vanishes,frac_no_isolated,
// mean_isolated,expected_isolated. Reruns with the same config are
// byte-identical.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

// gnuplot-compatible data file: omega, frac_H_vanishes, frac_no_isolated.
void emit_plot(const std::vector<SweepRow>& rows, const std::string& path);

enum class AuditMode { kExhaustive, kRandom };

// Checks, over a set of nonzero (k-1)-cochains, the weight bound
// (k+1) b >= n w and, for weight-minimal connected cochains with support
// size s, the small-support bound b >= s (n - s - k + 1).
struct BoundAuditReport {
  std::uint64_t cochains_checked = 0;
  std::uint64_t weight_bound_violations = 0;
  std::uint64_t small_support_violations = 0;
  std::uint64_t minimal_class_count = 0;
  std::uint64_t equality_count = 0;  // cochains with (k+1) b == n w
  // min over checked cochains of (k+1) b - n w; the bound slack times k+1.
  std::int64_t min_slack_numerator = 0;
  int slack_denominator = 1;
  bool partition_included = false;
  std::uint64_t partition_support = 0;
  std::uint64_t partition_b = 0;
  std::uint64_t partition_weight = 0;
};

BoundAuditReport run_bound_audit(int n, int k, const FiniteAbelianGroup& group,
                                 AuditMode mode, int random_count,
                                 RngSeed seed, std::uint64_t cap);

// Partial-domination experiment: per attempt, draw a fresh random family,
// take theta from its exclusive-cover total, score one single-draw attempt
// against the success bound epsilon (1-epsilon) theta, and run the Las
// Vegas finder for the retry distribution.
struct DominationReport {
  int attempts = 0;
  int rejected_inputs = 0;  // families with no admissible theta > 0
  int single_sample_successes = 0;
  double mean_theta = 0;
  double success_bound = 0;  // epsilon (1 - epsilon) mean_theta
  // Exact lower tail Pr[Bin(attempts, success_bound) <= successes].
  double binomial_tail = 1;
  bool stat_ok = true;  // not statistically below the bound at 99%
  int finder_successes = 0;
  int finder_failures = 0;
  double mean_retries = 0;
  int max_retries_seen = 0;
  bool outcomes_verified = true;  // every outcome re-checked independently
};

DominationReport run_domination_experiment(int n, int k, int m, double epsilon,
                                           int attempts, RngSeed seed);

// Shortest round-trip decimal form; CSV cells use this.
std::string format_double(double v);

// Exact lower tail of Binomial(n, p) at the given count.
double binomial_tail_cdf(int n, double p, int successes);

}  // namespace rclab
