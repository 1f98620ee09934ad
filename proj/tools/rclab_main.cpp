// Command line front end: threshold sweeps, bound audits, domination
// experiments, and cohomology reports for complexes read from files.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rclab/cohomology.hpp"
#include "rclab/complex.hpp"
#include "rclab/errors.hpp"
#include "rclab/experiment.hpp"
#include "rclab/group.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitStatFailure = 3;

struct SweepArgs {
  int n = 30, k = 2;
  std::string group = "Z2";
  double omega_min = -6, omega_max = 6, omega_step = 1;
  int trials = 200;
  std::uint64_t seed = 42;
  std::string out;
  std::string plot;
};

int run_sweep(const SweepArgs& args) {
  rclab::ExperimentConfig cfg;
  cfg.n = args.n;
  cfg.k = args.k;
  cfg.group = args.group;
  cfg.omegas = rclab::omega_grid(args.omega_min, args.omega_max, args.omega_step);
  cfg.trials = args.trials;
  cfg.master_seed = rclab::RngSeed{args.seed};
  const auto rows = rclab::run_threshold_sweep(cfg);

  std::ofstream out(args.out);
  if (!out) {
    std::cerr << "cannot open output file: " << args.out << "\n";
    return kExitUsage;
  }
  rclab::write_sweep_csv(rows, out);
  if (!args.plot.empty()) rclab::emit_plot(rows, args.plot);

  bool stat_ok = true;
  for (const auto& row : rows) {
    if (row.violations > 0) {
      std::cerr << "implication violated at omega=" << row.omega << "\n";
      stat_ok = false;
    }
    if (!row.second_moment_ok) {
      std::cerr << "isolated-count mean off by more than 3 standard errors "
                   "at omega=" << row.omega << "\n";
      stat_ok = false;
    }
  }
  std::cerr << "wrote " << rows.size() << " rows to " << args.out << "\n";
  return stat_ok ? kExitOk : kExitStatFailure;
}

struct AuditArgs {
  int n = 5, k = 2;
  std::string group = "Z2";
  std::string mode = "exhaustive";
  int count = 100;
  std::uint64_t cap = std::uint64_t{1} << 22;
  std::uint64_t seed = 0;
};

int run_audit(const AuditArgs& args) {
  const auto group = rclab::FiniteAbelianGroup::parse(args.group);
  const auto mode = args.mode == "exhaustive" ? rclab::AuditMode::kExhaustive
                                              : rclab::AuditMode::kRandom;
  const auto report = rclab::run_bound_audit(args.n, args.k, group, mode,
                                             args.count,
                                             rclab::RngSeed{args.seed},
                                             args.cap);
  std::cout << "cochains_checked=" << report.cochains_checked << "\n"
            << "weight_bound_violations=" << report.weight_bound_violations
            << "\n"
            << "small_support_violations=" << report.small_support_violations
            << "\n"
            << "minimal_class_count=" << report.minimal_class_count << "\n"
            << "equality_count=" << report.equality_count << "\n"
            << "min_slack=" << report.min_slack_numerator << "/"
            << report.slack_denominator << "\n";
  if (report.partition_included) {
    std::cout << "partition_support=" << report.partition_support << "\n"
              << "partition_b=" << report.partition_b << "\n"
              << "partition_weight=" << report.partition_weight << "\n";
  }
  const bool ok = report.weight_bound_violations == 0 &&
                  report.small_support_violations == 0;
  return ok ? kExitOk : kExitStatFailure;
}

struct DominateArgs {
  int n = 40, k = 2, m = 80;
  double epsilon = 0.125;
  int attempts = 1000;
  std::uint64_t seed = 7;
};

int run_dominate(const DominateArgs& args) {
  const auto report = rclab::run_domination_experiment(
      args.n, args.k, args.m, args.epsilon, args.attempts,
      rclab::RngSeed{args.seed});
  std::cout << "attempts=" << report.attempts << "\n"
            << "rejected_inputs=" << report.rejected_inputs << "\n"
            << "single_sample_successes=" << report.single_sample_successes
            << "\n"
            << "mean_theta=" << rclab::format_double(report.mean_theta) << "\n"
            << "success_bound=" << rclab::format_double(report.success_bound)
            << "\n"
            << "binomial_tail=" << rclab::format_double(report.binomial_tail)
            << "\n"
            << "finder_successes=" << report.finder_successes << "\n"
            << "finder_failures=" << report.finder_failures << "\n"
            << "mean_retries=" << rclab::format_double(report.mean_retries)
            << "\n"
            << "max_retries_seen=" << report.max_retries_seen << "\n"
            << "outcomes_verified=" << (report.outcomes_verified ? 1 : 0)
            << "\n"
            << "stat_ok=" << (report.stat_ok ? 1 : 0) << "\n";
  return (report.stat_ok && report.outcomes_verified) ? kExitOk
                                                      : kExitStatFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random k-complexes: cohomology vanishing experiments"};
  app.require_subcommand(1);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Monte Carlo sweep of the vanishing fraction over omega");
  sweep_cmd->add_option("--n", sweep.n, "vertex count")->required();
  sweep_cmd->add_option("--k", sweep.k, "complex dimension")->required();
  sweep_cmd->add_option("--group", sweep.group, "coefficient group, e.g. Z2");
  sweep_cmd->add_option("--omega-min", sweep.omega_min, "grid start");
  sweep_cmd->add_option("--omega-max", sweep.omega_max, "grid end");
  sweep_cmd->add_option("--omega-step", sweep.omega_step, "grid step");
  sweep_cmd->add_option("--trials", sweep.trials, "trials per grid point");
  sweep_cmd->add_option("--seed", sweep.seed, "master seed");
  sweep_cmd->add_option("--out", sweep.out, "CSV output path")->required();
  sweep_cmd->add_option("--plot", sweep.plot, "gnuplot data file path");

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand(
      "audit-bound", "check the coboundary-support lower bound on cochains");
  audit_cmd->add_option("--n", audit.n, "vertex count")->required();
  audit_cmd->add_option("--k", audit.k, "cochain degree plus one")->required();
  audit_cmd->add_option("--group", audit.group, "coefficient group");
  audit_cmd->add_option("--mode", audit.mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  audit_cmd->add_option("--count", audit.count, "cochains in random mode");
  audit_cmd->add_option("--cap", audit.cap, "brute-force weight cap");
  audit_cmd->add_option("--seed", audit.seed, "seed for random mode");

  DominateArgs dominate;
  auto* dominate_cmd = app.add_subcommand(
      "dominate", "randomized partial domination of random uniform families");
  dominate_cmd->add_option("--n", dominate.n, "vertex count")->required();
  dominate_cmd->add_option("--k", dominate.k, "uniformity")->required();
  dominate_cmd->add_option("--m", dominate.m, "family size")->required();
  dominate_cmd->add_option("--epsilon", dominate.epsilon, "slack parameter");
  dominate_cmd->add_option("--attempts", dominate.attempts, "attempts");
  dominate_cmd->add_option("--seed", dominate.seed, "master seed");

  std::string coh_in, coh_group = "Z2";
  auto* coh_cmd = app.add_subcommand(
      "cohomology", "exact cohomology report for a complex file");
  coh_cmd->add_option("--in", coh_in, "complex file path")->required();
  coh_cmd->add_option("--group", coh_group, "coefficient group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sweep_cmd->parsed()) return run_sweep(sweep);
    if (audit_cmd->parsed()) return run_audit(audit);
    if (dominate_cmd->parsed()) return run_dominate(dominate);
    if (coh_cmd->parsed()) {
      const auto group = rclab::FiniteAbelianGroup::parse(coh_group);
      const auto y = rclab::parse_complex_file(coh_in);
      rclab::write_report_csv(rclab::analyze_cohomology(y, group), std::cout);
      return kExitOk;
    }
  } catch (const rclab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rclab::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const rclab::RetriesExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStatFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
