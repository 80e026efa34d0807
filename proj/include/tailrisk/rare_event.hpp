#pragma once

#include <cstddef>

#include "tailrisk/gpd.hpp"

namespace tailrisk {

/// Inputs for the "at least one event >= y among the next n" probability.
/// The severity model is a mixture: mass p_hat sits at or below the
/// threshold mu, and the remaining (1 - p_hat) follows the fitted tail.
struct EventProbabilityInput {
  double y = 0.0;       ///< event size of interest (>= params.mu)
  std::size_t n = 0;    ///< number of future events considered
  double p_hat = 0.0;   ///< empirical P(severity <= mu)
  GpdParams params;     ///< fitted tail
};

/// P(single event <= y) = p_hat + (1 - p_hat) * F(y | params); y >= mu.
double per_event_cdf(double y, double p_hat, const GpdParams& params);

/// P(single event > y) = (1 - p_hat) * S(y | params); the survival form
/// keeps precision when the probability is tiny.
double per_event_sf(double y, double p_hat, const GpdParams& params);

/// P(at least one of n iid events exceeds) = 1 - (1 - s)^n, computed as
/// -expm1(n * log1p(-s)) so values near 0 and near 1 both stay accurate.
/// n == 0 gives 0.
double event_probability_from_survival(double s, std::size_t n);

/// Convenience composition of the two steps above.
double event_probability(const EventProbabilityInput& input);

}  // namespace tailrisk
