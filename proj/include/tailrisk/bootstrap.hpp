#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "tailrisk/rng.hpp"

namespace tailrisk {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Percentile interval with linear interpolation at h = (m-1)p between
/// order statistics (the common spreadsheet/R default). `level` must lie
/// in (0, 1]; level 1 returns (min, max). `values` need not be sorted.
Interval percentile_interval(std::vector<double> values, double level);

/// One bootstrap resample: values.size() draws with replacement.
std::vector<double> resample(const std::vector<double>& values, SplitMix64& rng);

struct BootstrapSummary {
  double point = 0.0;        ///< estimator on the original data
  std::size_t replicates = 0;  ///< successful replicates
  double level = 0.0;
  Interval interval;
  std::size_t n_failed = 0;  ///< replicates dropped because the estimator threw
};

struct BootstrapMultiSummary {
  std::vector<double> point;
  std::size_t replicates = 0;
  double level = 0.0;
  std::vector<Interval> intervals;
  std::size_t n_failed = 0;
};

using Estimator = std::function<double(const std::vector<double>&)>;
using MultiEstimator = std::function<std::vector<double>(const std::vector<double>&)>;

/// Percentile bootstrap for a vector-valued estimator. All components of a
/// replicate come from the same resample, so their intervals are mutually
/// consistent; a throwing estimator fails the whole replicate (dropped and
/// counted in n_failed). Replicate b always uses derive_seed(seed, b) and
/// results are aggregated in replicate order, so the output is identical
/// for any `jobs` value. Throws NumericError if every replicate fails
/// (reporting the lowest-index error), and propagates any failure of the
/// point estimate on the original data.
BootstrapMultiSummary bootstrap_estimate_multi(const std::vector<double>& values,
                                               const MultiEstimator& estimator,
                                               std::size_t n_replicates, double level,
                                               std::uint64_t seed, int jobs = 1);

/// Scalar convenience wrapper around bootstrap_estimate_multi.
BootstrapSummary bootstrap_estimate(const std::vector<double>& values,
                                    const Estimator& estimator, std::size_t n_replicates,
                                    double level, std::uint64_t seed, int jobs = 1);

}  // namespace tailrisk
