#include "tailrisk/rare_event.hpp"

#include <cmath>
#include <stdexcept>

namespace tailrisk {

namespace {

void check_p_hat(double p_hat) {
  if (!(p_hat >= 0.0) || !(p_hat <= 1.0))
    throw std::invalid_argument("rare event: p_hat must lie in [0, 1]");
}

}  // namespace

double per_event_cdf(double y, double p_hat, const GpdParams& params) {
  check_p_hat(p_hat);
  return p_hat + (1.0 - p_hat) * gpd_cdf(y, params);
}

double per_event_sf(double y, double p_hat, const GpdParams& params) {
  check_p_hat(p_hat);
  return (1.0 - p_hat) * gpd_sf(y, params);
}

double event_probability_from_survival(double s, std::size_t n) {
  if (!(s >= 0.0) || !(s <= 1.0))
    throw std::invalid_argument("rare event: survival probability must lie in [0, 1]");
  if (n == 0) return 0.0;
  if (s >= 1.0) return 1.0;  // log1p(-1) would be -inf; the answer is exact
  return -std::expm1(static_cast<double>(n) * std::log1p(-s));
}

double event_probability(const EventProbabilityInput& input) {
  return event_probability_from_survival(per_event_sf(input.y, input.p_hat, input.params),
                                         input.n);
}

}  // namespace tailrisk
