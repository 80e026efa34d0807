#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tailrisk/bootstrap.hpp"
#include "tailrisk/gpd_fit.hpp"

namespace tailrisk {

struct FitConfig {
  double mu = 10.0;            ///< threshold
  double event_size = 2749.0;  ///< y in the exceedance-probability question
  std::size_t n_override = 0;  ///< future-event count n; 0 means catalog size
  std::size_t replicates = 2000;
  double level = 0.90;
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// Headline result: tail fit at one threshold plus the derived statistics
/// and their joint percentile bootstrap intervals. All six intervals come
/// from the same replicate set, and the replicate seed stream is
/// derive_seed(seed, 0) — the same stream a one-threshold sweep uses — so
/// `fit` and a single-point sweep agree exactly.
struct FitReport {
  double mu = 0.0;
  double event_size = 0.0;
  std::size_t n_events = 0;        ///< catalog size after exclusions
  std::size_t n_used_for_prob = 0; ///< n plugged into the exceedance probability
  std::size_t n_tail = 0;
  double tail_fraction = 0.0;
  GpdFit fit;
  double reduction = 0.0;          ///< sigma - mu * xi
  double ks = 0.0;
  double prob_event = 0.0;
  std::size_t replicates = 0;
  double level = 0.0;
  std::uint64_t seed = 0;
  Interval n_tail_ci;
  Interval tail_fraction_ci;
  Interval xi_ci;
  Interval sigma_ci;
  Interval reduction_ci;
  Interval prob_ci;
  std::size_t n_boot_failed = 0;
};

/// Fit the tail above config.mu and bootstrap {n_tail, tail_fraction, xi,
/// sigma, reduction, prob}. replicates == 0 skips the bootstrap and leaves
/// NaN intervals. Throws DataError for an unusable tail and NumericError
/// when the optimizer fails to converge on the original data.
FitReport run_fit(const std::vector<double>& severities, const FitConfig& config);

/// Thresholds 10, 15, ..., 100 (the usual sensitivity range for
/// fatality-scale catalogs).
std::vector<double> default_sweep_grid();

/// 101 equally spaced thresholds from 0 to the third-largest severity, so
/// every point keeps at least two exceedances for the error band.
std::vector<double> default_mrl_grid(const std::vector<double>& severities);

}  // namespace tailrisk
