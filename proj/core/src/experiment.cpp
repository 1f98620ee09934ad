#include "rclab/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <numeric>
#include <ostream>
#include <thread>

#include "rclab/cochain.hpp"
#include "rclab/cohomology.hpp"
#include "rclab/complex.hpp"
#include "rclab/errors.hpp"
#include "rclab/hypergraph.hpp"

namespace rclab {

namespace {

// Seed stream tags; trial streams are (master, tag, index).
enum StreamTag : std::uint64_t {
  kSweepTrial = 1,
  kAuditCochain = 2,
  kDomFamily = 3,
  kDomSample = 4,
  kDomFinder = 5,
};

// Union-find connectivity of the 1-skeleton sample; the in-run cross-check
// for k = 1 sweeps.
bool graph_connected(const Complex& y) {
  const int n = y.n();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<int> verts;
  for (SimplexRank r : y.k_faces()) {
    unrank_into(r, 2, n, verts);
    parent[find(verts[0])] = find(verts[1]);
  }
  const int root = find(1);
  for (int v = 2; v <= n; ++v)
    if (find(v) != root) return false;
  return true;
}

void run_trials_parallel(int trials,
                         const std::function<void(int)>& run_trial) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(trials));
  if (workers <= 1) {
    for (int t = 0; t < trials; ++t) run_trial(t);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int t = static_cast<int>(w); t < trials;
             t += static_cast<int>(workers))
          run_trial(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

RngSeed sweep_trial_seed(RngSeed master, int trial) {
  return RngSeed{
      derive_seed(master.value, {kSweepTrial, static_cast<std::uint64_t>(trial)})};
}

std::vector<double> omega_grid(double min, double max, double step) {
  if (!(step > 0)) throw PreconditionError("omega grid: step must be positive");
  if (max < min) throw PreconditionError("omega grid: max below min");
  std::vector<double> out;
  const double slack = step * 1e-9;
  for (int i = 0;; ++i) {
    const double omega = min + step * i;
    if (omega > max + slack) break;
    out.push_back(omega);
  }
  return out;
}

double p_from_omega(int n, int k, double omega) {
  const double p = (k * std::log(static_cast<double>(n)) + omega) / n;
  return std::clamp(p, 0.0, 1.0);
}

std::vector<SweepRow> run_threshold_sweep(const ExperimentConfig& cfg) {
  if (cfg.trials < 1)
    throw PreconditionError("sweep: trials must be at least 1");
  if (cfg.omegas.empty())
    throw PreconditionError("sweep: omega grid is empty");
  const FiniteAbelianGroup group = FiniteAbelianGroup::parse(cfg.group);
  const VanishingTester tester(cfg.n, cfg.k, group);

  std::vector<double> omegas = cfg.omegas;
  std::sort(omegas.begin(), omegas.end());
  const std::size_t grid = omegas.size();
  std::vector<double> ps(grid);
  for (std::size_t j = 0; j < grid; ++j)
    ps[j] = p_from_omega(cfg.n, cfg.k, omegas[j]);

  // One seed per trial, shared across the whole grid: the per-face uniforms
  // coincide, so the complexes are nested as p grows and both indicators
  // are monotone trial by trial.
  std::vector<char> vanish(grid * cfg.trials, 0);
  std::vector<std::int64_t> isolated(grid * cfg.trials, 0);

  run_trials_parallel(cfg.trials, [&](int t) {
    const RngSeed trial_seed = sweep_trial_seed(cfg.master_seed, t);
    for (std::size_t j = 0; j < grid; ++j) {
      const Complex y = sample_complex(cfg.n, cfg.k, ps[j], trial_seed);
      const bool v = tester.vanishes(y);
      if (cfg.k == 1 && v != graph_connected(y))
        throw std::logic_error(
            "sweep: vanishing test disagrees with graph connectivity");
      vanish[j * cfg.trials + t] = v ? 1 : 0;
      isolated[j * cfg.trials + t] = isolated_count(y);
    }
  });

  std::vector<SweepRow> rows(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    SweepRow& row = rows[j];
    row.omega = omegas[j];
    row.p = ps[j];
    row.trials = cfg.trials;
    std::int64_t vanish_count = 0, no_isolated = 0, violations = 0;
    double sum = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const bool v = vanish[j * cfg.trials + t];
      const std::int64_t g = isolated[j * cfg.trials + t];
      vanish_count += v;
      no_isolated += (g == 0);
      violations += (v && g > 0);
      sum += static_cast<double>(g);
    }
    row.frac_h_vanishes = static_cast<double>(vanish_count) / cfg.trials;
    row.frac_no_isolated = static_cast<double>(no_isolated) / cfg.trials;
    row.mean_isolated = sum / cfg.trials;
    row.expected_isolated = expected_isolated(cfg.n, cfg.k, ps[j]);
    row.violations = static_cast<int>(violations);
    double sq = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const double d =
          static_cast<double>(isolated[j * cfg.trials + t]) - row.mean_isolated;
      sq += d * d;
    }
    row.isolated_sample_std =
        cfg.trials > 1 ? std::sqrt(sq / (cfg.trials - 1)) : 0.0;
    const double tol =
        3.0 * row.isolated_sample_std / std::sqrt(static_cast<double>(cfg.trials));
    row.second_moment_ok =
        row.mean_isolated == row.expected_isolated ||
        std::abs(row.mean_isolated - row.expected_isolated) <= tol;
  }
  return rows;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "omega,p,trials,frac_H_vanishes,frac_no_isolated,mean_isolated,"
         "expected_isolated\n";
  for (const SweepRow& r : rows) {
    out << format_double(r.omega) << ',' << format_double(r.p) << ','
        << r.trials << ',' << format_double(r.frac_h_vanishes) << ','
        << format_double(r.frac_no_isolated) << ','
        << format_double(r.mean_isolated) << ','
        << format_double(r.expected_isolated) << '\n';
  }
}

void emit_plot(const std::vector<SweepRow>& rows, const std::string& path) {
  if (rows.empty()) throw PreconditionError("emit_plot: no rows");
  std::ofstream out(path);
  if (!out) throw ParseError("emit_plot: cannot open " + path);
  out << "# omega frac_H_vanishes frac_no_isolated\n";
  for (const SweepRow& r : rows)
    out << format_double(r.omega) << ' ' << format_double(r.frac_h_vanishes)
        << ' ' << format_double(r.frac_no_isolated) << '\n';
}

namespace {

void audit_one(const Cochain& phi, int n, int k, std::uint64_t cap,
               BoundAuditReport& report) {
  const std::int64_t b = coboundary_support_size(phi);
  const std::uint64_t w = weight_bruteforce(phi, cap);
  const std::int64_t slack =
      static_cast<std::int64_t>(k + 1) * b -
      static_cast<std::int64_t>(n) * static_cast<std::int64_t>(w);
  if (report.cochains_checked == 0 || slack < report.min_slack_numerator)
    report.min_slack_numerator = slack;
  ++report.cochains_checked;
  if (slack < 0) ++report.weight_bound_violations;
  if (slack == 0) ++report.equality_count;
  if (is_weight_minimal_connected(phi, cap)) {
    ++report.minimal_class_count;
    const std::int64_t s = static_cast<std::int64_t>(support_size(phi));
    if (b < s * (n - s - k + 1)) ++report.small_support_violations;
  }
}

}  // namespace

BoundAuditReport run_bound_audit(int n, int k, const FiniteAbelianGroup& group,
                                 AuditMode mode, int random_count, RngSeed seed,
                                 std::uint64_t cap) {
  if (k < 1 || k > n - 1)
    throw PreconditionError("bound audit: need 1 <= k <= n-1");
  BoundAuditReport report;
  report.slack_denominator = k + 1;

  if (mode == AuditMode::kExhaustive) {
    const std::uint64_t coords = binomial(n, k);
    const std::uint64_t r = group.order();
    std::uint64_t states = 1;
    for (std::uint64_t i = 0; i < coords; ++i) {
      if (states > (std::uint64_t{1} << 26) / r)
        throw CapExceededError("bound audit: exhaustive space too large");
      states *= r;
    }
    Cochain phi(group, n, k - 1);
    // Odometer over all nonzero cochains.
    while (true) {
      std::int64_t pos = static_cast<std::int64_t>(coords) - 1;
      while (pos >= 0) {
        const GroupCode v = phi.value(pos) + 1;
        if (v < r) {
          phi.set_value(pos, v);
          break;
        }
        phi.set_value(pos, 0);
        --pos;
      }
      if (pos < 0) break;
      audit_one(phi, n, k, cap, report);
    }
  } else {
    if (random_count < 1)
      throw PreconditionError("bound audit: random mode needs count >= 1");
    for (int i = 0; i < random_count; ++i) {
      UnitRng rng(derive_seed(seed.value,
                              {kAuditCochain, static_cast<std::uint64_t>(i)}));
      Cochain phi = random_cochain(group, n, k - 1, rng);
      while (phi.is_zero()) phi = random_cochain(group, n, k - 1, rng);
      audit_one(phi, n, k, cap, report);
    }
  }

  if (n % (k + 1) == 0) {
    const Cochain phi = balanced_partition_cochain(group, n, k);
    report.partition_included = true;
    report.partition_support = support_size(phi);
    report.partition_b =
        static_cast<std::uint64_t>(coboundary_support_size(phi));
    report.partition_weight = weight_bruteforce(phi, cap);
    audit_one(phi, n, k, cap, report);
  }
  return report;
}

double binomial_tail_cdf(int n, double p, int successes) {
  if (successes < 0) return 0.0;
  if (successes >= n || p <= 0.0) return 1.0;
  if (p >= 1.0) return 0.0;
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  double tail = 0.0;
  for (int i = 0; i <= successes; ++i) {
    const double lc = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                      std::lgamma(n - i + 1.0);
    tail += std::exp(lc + i * lp + (n - i) * lq);
  }
  return std::min(tail, 1.0);
}

DominationReport run_domination_experiment(int n, int k, int m, double epsilon,
                                           int attempts, RngSeed seed) {
  if (attempts < 1)
    throw PreconditionError("domination experiment: attempts must be >= 1");
  if (!(epsilon > 0.0 && epsilon <= 0.5))
    throw PreconditionError("domination: epsilon must lie in (0, 1/2]");
  if (!(n > 2.0 * std::log(1.0 / epsilon) + k))
    throw PreconditionError("domination: n must exceed 2 log(1/eps) + k");

  DominationReport report;
  report.attempts = attempts;
  double theta_sum = 0;
  std::int64_t retries_sum = 0;

  int valid = 0;
  const std::uint64_t draw_limit =
      20 * static_cast<std::uint64_t>(attempts) + 100;
  for (std::uint64_t draw = 0; valid < attempts; ++draw) {
    if (draw >= draw_limit)
      throw RetriesExhaustedError(
          "domination experiment: too many rejected families");
    const UniformFamily family =
        random_family(n, k, m, RngSeed{derive_seed(seed.value, {kDomFamily, draw})});
    const double cover = static_cast<double>(exclusive_cover_total(family));
    const double theta =
        1.0 - cover / (static_cast<double>(m) * static_cast<double>(n - k));
    if (!(theta > 0.0)) {
      ++report.rejected_inputs;
      continue;
    }
    const int i = valid++;
    theta_sum += theta;

    // One raw draw scored against the paper-style success event.
    const auto s = sample_partial_dominating_set(
        family, epsilon, RngSeed{derive_seed(seed.value, {kDomSample, static_cast<std::uint64_t>(i)})});
    const auto dominated = dominated_members(family, s);
    const double needed = (1.0 - epsilon) * theta * static_cast<double>(m);
    const double size_bound =
        partial_domination_size_bound(n, k, m, epsilon, theta);
    if (static_cast<double>(dominated.size()) >= needed &&
        static_cast<double>(s.size()) <= size_bound)
      ++report.single_sample_successes;

    // Las Vegas finder for the retry distribution.
    try {
      const DominationOutcome outcome = find_partial_dominating_set(
          family, epsilon, theta,
          RngSeed{derive_seed(seed.value, {kDomFinder, static_cast<std::uint64_t>(i)})});
      ++report.finder_successes;
      retries_sum += outcome.retries;
      report.max_retries_seen = std::max(report.max_retries_seen, outcome.retries);
      const auto check = dominated_members(family, outcome.members);
      if (static_cast<std::int64_t>(check.size()) != outcome.dominated_count ||
          static_cast<double>(check.size()) < needed ||
          static_cast<double>(outcome.members.size()) > size_bound)
        report.outcomes_verified = false;
    } catch (const RetriesExhaustedError&) {
      ++report.finder_failures;
    }
  }

  report.mean_theta = theta_sum / attempts;
  report.success_bound = epsilon * (1.0 - epsilon) * report.mean_theta;
  report.binomial_tail =
      binomial_tail_cdf(attempts, report.success_bound,
                        report.single_sample_successes);
  report.stat_ok = report.single_sample_successes >=
                       report.success_bound * attempts ||
                   report.binomial_tail >= 0.01;
  if (report.finder_successes > 0)
    report.mean_retries =
        static_cast<double>(retries_sum) / report.finder_successes;
  return report;
}

}  // namespace rclab
