#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tailrisk/discrete_powerlaw.hpp"

namespace tailrisk {

/// Result of fitting a discrete power law to an integer-severity tail.
/// ks_statistic is the exact sup-distance between the tail ECDF and the
/// fitted CDF: both are step functions on the integer lattice, so it is
/// evaluated lattice-point by lattice-point (not with the per-observation
/// continuous formula, whose lower steps are off by one atom on tied data).
struct PowerLawFit {
  DiscretePowerLawParams params;
  std::size_t n_tail = 0;       ///< tail points with x >= xmin (inclusive)
  double ks_statistic = 0.0;    ///< KS distance between tail ECDF and fitted CDF
};

/// Two-sided Kolmogorov-Smirnov distance between the empirical CDF of
/// `tail_sorted` (ascending) and a model CDF:
///   D = max_i max(|i/n - F(y_i)|, |(i-1)/n - F(y_i)|).
double ks_statistic(const std::vector<double>& tail_sorted,
                    const std::function<double(double)>& cdf);

/// Maximum-likelihood alpha for the discrete power law on {x : x >= xmin},
/// found by golden-section search on (1, 10]. The log-likelihood
///   -alpha * sum(log x_i) - n * log zeta(alpha, xmin)
/// is concave in alpha, so the bracketed search converges to the global
/// optimum. Throws DataError for a degenerate tail (all values equal xmin,
/// which pushes alpha to the search boundary).
double fit_dpl_alpha(const std::vector<double>& tail_sorted, double xmin);

/// Pick xmin from `candidates` (ascending integers >= 1) by minimizing the
/// KS distance of the fitted model on the inclusive tail {x >= xmin}.
/// Candidates with fewer than 10 tail points are skipped; ties in KS are
/// broken toward the smaller xmin. Throws DataError if no candidate is
/// feasible. Severities must be integers.
PowerLawFit select_xmin_ks(const std::vector<double>& severities,
                           const std::vector<double>& candidates);

/// Fit alpha for a fixed xmin and compute the tail KS statistic.
PowerLawFit fit_dpl(const std::vector<double>& severities, double xmin);

}  // namespace tailrisk
