#include "tailrisk/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "tailrisk/errors.hpp"

namespace tailrisk {

namespace {

double quantile_type7(const std::vector<double>& sorted, double p) {
  const std::size_t m = sorted.size();
  if (m == 1) return sorted[0];
  const double h = static_cast<double>(m - 1) * p;
  const std::size_t lo = std::min(static_cast<std::size_t>(h), m - 2);
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

Interval percentile_interval(std::vector<double> values, double level) {
  if (values.empty()) throw std::invalid_argument("percentile_interval: no values");
  if (!(level > 0.0) || level > 1.0)
    throw std::invalid_argument("percentile_interval: level must be in (0, 1]");
  std::sort(values.begin(), values.end());
  const double tail = 0.5 * (1.0 - level);
  return Interval{quantile_type7(values, tail), quantile_type7(values, 1.0 - tail)};
}

std::vector<double> resample(const std::vector<double>& values, SplitMix64& rng) {
  const std::size_t n = values.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t idx = static_cast<std::size_t>(rng.next_u01() * static_cast<double>(n));
    if (idx >= n) idx = n - 1;  // guards the u01 == 1-ulp edge
    out[i] = values[idx];
  }
  return out;
}

BootstrapMultiSummary bootstrap_estimate_multi(const std::vector<double>& values,
                                               const MultiEstimator& estimator,
                                               std::size_t n_replicates, double level,
                                               std::uint64_t seed, int jobs) {
  if (values.empty()) throw DataError("bootstrap: empty sample");
  if (n_replicates < 1) throw std::invalid_argument("bootstrap: need at least 1 replicate");
  if (!(level > 0.0) || level > 1.0)
    throw std::invalid_argument("bootstrap: level must be in (0, 1]");

  BootstrapMultiSummary summary;
  summary.level = level;
  summary.point = estimator(values);  // failures here propagate to the caller
  const std::size_t n_stats = summary.point.size();

  std::vector<std::optional<std::vector<double>>> results(n_replicates);
  std::vector<std::string> errors(n_replicates);

  const auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t b = begin; b < end; ++b) {
      SplitMix64 rng(derive_seed(seed, b));
      try {
        std::vector<double> est = estimator(resample(values, rng));
        if (est.size() != n_stats)
          throw NumericError("bootstrap: estimator returned " + std::to_string(est.size()) +
                             " statistics, expected " + std::to_string(n_stats));
        results[b] = std::move(est);
      } catch (const std::exception& e) {
        errors[b] = e.what();
      }
    }
  };

  const std::size_t n_jobs =
      std::min<std::size_t>(std::max(jobs, 1), n_replicates);
  if (n_jobs <= 1) {
    run_range(0, n_replicates);
  } else {
    // contiguous chunks; determinism comes from per-replicate seeds, not
    // from the work split
    std::vector<std::thread> threads;
    threads.reserve(n_jobs);
    const std::size_t chunk = (n_replicates + n_jobs - 1) / n_jobs;
    for (std::size_t t = 0; t < n_jobs; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(begin + chunk, n_replicates);
      if (begin >= end) break;
      threads.emplace_back(run_range, begin, end);
    }
    for (auto& th : threads) th.join();
  }

  std::vector<std::vector<double>> columns(n_stats);
  for (std::size_t b = 0; b < n_replicates; ++b) {
    if (!results[b]) {
      ++summary.n_failed;
      continue;
    }
    for (std::size_t k = 0; k < n_stats; ++k) columns[k].push_back((*results[b])[k]);
  }
  summary.replicates = n_replicates - summary.n_failed;

  if (summary.replicates == 0) {
    const auto first =
        std::find_if(errors.begin(), errors.end(), [](const std::string& s) { return !s.empty(); });
    throw NumericError("bootstrap: all " + std::to_string(n_replicates) +
                       " replicates failed; first error: " + *first);
  }

  summary.intervals.reserve(n_stats);
  for (std::size_t k = 0; k < n_stats; ++k)
    summary.intervals.push_back(percentile_interval(std::move(columns[k]), level));
  return summary;
}

BootstrapSummary bootstrap_estimate(const std::vector<double>& values,
                                    const Estimator& estimator, std::size_t n_replicates,
                                    double level, std::uint64_t seed, int jobs) {
  const BootstrapMultiSummary multi = bootstrap_estimate_multi(
      values,
      [&](const std::vector<double>& sample) {
        return std::vector<double>{estimator(sample)};
      },
      n_replicates, level, seed, jobs);

  BootstrapSummary summary;
  summary.point = multi.point[0];
  summary.replicates = multi.replicates;
  summary.level = multi.level;
  summary.interval = multi.intervals[0];
  summary.n_failed = multi.n_failed;
  return summary;
}

}  // namespace tailrisk
