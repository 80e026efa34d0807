#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tailrisk/bootstrap.hpp"
#include "tailrisk/discrete_powerlaw.hpp"
#include "tailrisk/gpd_fit.hpp"

namespace tailrisk {

/// Mean residual life curve: for each kept threshold u, the average of
/// y - u over observations y > u, with a 90% normal-approximation band.
/// Grid points with fewer than 2 exceedances are dropped (counted in
/// n_dropped) because the sample standard deviation needs two points.
struct MrlCurve {
  std::vector<double> thresholds;
  std::vector<double> mean_excess;
  std::vector<double> ci_half_width;  ///< 1.6448536... * sd / sqrt(n), sd with n-1
  std::vector<std::size_t> n_exceed;
  std::size_t n_dropped = 0;
};

MrlCurve mrl_curve(const std::vector<double>& severities, const std::vector<double>& grid);

/// One point of a quantile-quantile plot: fitted model quantile at the
/// plotting position (i - 0.5) / n against the i-th order statistic.
struct QqPoint {
  double model = 0.0;
  double empirical = 0.0;
};

/// Requires a converged fit (throws NumericError otherwise); `tail_sorted`
/// holds the severities above fit.params.mu, ascending, as used in the fit.
std::vector<QqPoint> qq_points(const std::vector<double>& tail_sorted, const GpdFit& fit);

/// One threshold row of a sensitivity sweep. When the tail fit fails or
/// does not converge the row is kept with fit.converged == false and NaN
/// derived statistics, so a single bad threshold cannot abort the sweep.
struct SweepRow {
  double mu = 0.0;
  GpdFit fit;
  double tail_fraction = 0.0;
  double reduction_stat = 0.0;  ///< sigma - mu * xi
  double ks = 0.0;
  double prob_event = 0.0;      ///< P(any of n future events >= event_size)
  Interval xi_ci;
  Interval sigma_ci;
  Interval reduction_ci;
  Interval prob_ci;
  std::size_t n_boot_failed = 0;
};

struct SweepConfig {
  double event_size = 0.0;      ///< y in the event probability; >= max grid threshold
  std::size_t replicates = 0;   ///< bootstrap replicates per threshold; 0 disables CIs
  std::uint64_t seed = 0;
  double level = 0.90;
  int jobs = 1;
  std::size_t n_override = 0;   ///< future-event count n; 0 means catalog size
};

/// Fit the tail above every grid threshold and bundle point estimates,
/// KS distance, the event probability, and percentile bootstrap intervals
/// for {xi, sigma, reduction, prob} drawn from one shared replicate set per
/// threshold. The row at grid index t uses derive_seed(config.seed, t), so
/// reruns and grid prefixes reproduce rows exactly (a one-point grid gets
/// the same stream as run_fit).
std::vector<SweepRow> threshold_sweep(const std::vector<double>& severities,
                                      const std::vector<double>& grid,
                                      const SweepConfig& config);

/// Convenience overload: event size y, B replicates, master seed, defaults
/// elsewhere.
std::vector<SweepRow> threshold_sweep(const std::vector<double>& severities,
                                      const std::vector<double>& grid, double event_size,
                                      std::size_t replicates, std::uint64_t seed);

/// Discrete power-law analogue of a sweep row; tails are inclusive
/// (x >= xmin) and severities must be integers.
struct DplSweepRow {
  std::int64_t xmin = 1;
  double alpha = 0.0;
  std::size_t n_tail = 0;
  double tail_fraction = 0.0;
  double ks = 0.0;
  double prob_event = 0.0;
};

std::vector<DplSweepRow> dpl_threshold_sweep(const std::vector<double>& severities,
                                             const std::vector<double>& grid,
                                             double event_size, std::size_t n_override = 0);

}  // namespace tailrisk
