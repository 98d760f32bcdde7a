#include "polymer/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "polymer/rng.hpp"

namespace polymer {

TrialReport TrialReport::from_counts(long long trials, long long successes, double target,
                                     bool has_target) {
  TrialReport r;
  r.trials = trials;
  r.successes = successes;
  r.estimate = trials > 0 ? (double)successes / (double)trials : 0.0;
  double p = r.estimate;
  r.stderr_ = trials > 0 ? std::sqrt(std::max(p * (1.0 - p), 1e-300) / (double)trials) : 0.0;
  r.target = target;
  r.has_target = has_target;
  if (has_target && r.stderr_ > 0) r.z = (r.estimate - target) / r.stderr_;
  return r;
}

namespace {

// Kolmogorov tail Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2)
double kolmogorov_q(double lambda) {
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    sign = -sign;
    if (term < 1e-12) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double d = 0.0;
  size_t i = 0, j = 0;
  const double na = (double)sa.size(), nb = (double)sb.size();
  while (i < sa.size() && j < sb.size()) {
    double v = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] <= v) ++i;
    while (j < sb.size() && sb[j] <= v) ++j;
    d = std::max(d, std::abs((double)i / na - (double)j / nb));
  }
  double ne = na * nb / (na + nb);
  double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  return {d, kolmogorov_q(lambda)};
}

Chi2Result chi2_two_sample(std::span<const long long> a, std::span<const long long> b) {
  if (a.size() != b.size()) throw std::invalid_argument("chi2: bin count mismatch");
  long long na = 0, nb = 0;
  for (auto v : a) na += v;
  for (auto v : b) nb += v;
  if (na == 0 || nb == 0) throw std::invalid_argument("chi2: empty sample");
  double k1 = std::sqrt((double)nb / (double)na);
  double k2 = std::sqrt((double)na / (double)nb);
  double stat = 0.0;
  int df = -1;
  for (size_t i = 0; i < a.size(); ++i) {
    long long tot = a[i] + b[i];
    if (tot == 0) continue;  // empty bin contributes nothing
    double diff = k1 * (double)a[i] - k2 * (double)b[i];
    stat += diff * diff / (double)tot;
    ++df;
  }
  if (df < 1) return {stat, std::max(df, 0), 1.0};
  double p = boost::math::gamma_q(df / 2.0, stat / 2.0);
  return {stat, df, p};
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need matched points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = (double)x.size();
  for (size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int thread_count() {
  if (const char* env = std::getenv("POLYMER_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? (int)hw : 1;
}

TrialReport run_trials(long long trials, std::uint64_t seed, double target,
                       const std::function<bool(Rng&)>& trial) {
  constexpr int kStreams = 64;  // fixed so results do not depend on threads
  long long per_stream = trials / kStreams;
  long long extra = trials % kStreams;
  std::vector<long long> successes(kStreams, 0);
  int threads = std::min(thread_count(), kStreams);
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int s = next.fetch_add(1);
      if (s >= kStreams) return;
      Rng rng = Rng::stream(seed, (std::uint64_t)s);
      long long count = per_stream + (s < extra ? 1 : 0);
      long long ok = 0;
      for (long long i = 0; i < count; ++i)
        if (trial(rng)) ++ok;
      successes[s] = ok;
    }
  };
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  long long total = 0;
  for (auto s : successes) total += s;
  return TrialReport::from_counts(trials, total, target);
}

}  // namespace polymer
