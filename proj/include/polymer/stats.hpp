#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace polymer {
class Rng;

// Bernoulli trial summary; z is relative to `target` when one is set.
struct TrialReport {
  long long trials = 0;
  long long successes = 0;
  double estimate = 0.0;
  double stderr_ = 0.0;
  double target = 0.0;
  bool has_target = false;
  double z = 0.0;

  static TrialReport from_counts(long long trials, long long successes, double target,
                                 bool has_target = true);
};

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// Two-sample Kolmogorov-Smirnov with the asymptotic p-value.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

struct Chi2Result {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
};

// Two-sample chi-square over matched count bins.
Chi2Result chi2_two_sample(std::span<const long long> a, std::span<const long long> b);

// Least-squares slope of log(y) vs log(x).
double log_log_slope(std::span<const double> x, std::span<const double> y);

// POLYMER_THREADS caps worker threads (default: hardware concurrency).
int thread_count();

// Run Bernoulli trials over a fixed number of seeded streams so the result
// is independent of thread count.
TrialReport run_trials(long long trials, std::uint64_t seed, double target,
                       const std::function<bool(Rng&)>& trial);

}  // namespace polymer
