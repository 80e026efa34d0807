#pragma once

#include <cstddef>
#include <vector>

#include "tailrisk/rng.hpp"

namespace tailrisk {

/// Generalized Pareto parameters. The support is [mu, inf) when xi >= 0
/// and [mu, mu - sigma/xi] when xi < 0. xi < 0.5 gives finite variance,
/// xi < 1 finite mean.
struct GpdParams {
  double mu = 0.0;
  double sigma = 1.0;  // > 0
  double xi = 0.0;
};

/// Below this |xi| all GPD kernels use the exponential-limit branch; the
/// direct formulas lose precision as xi -> 0.
inline constexpr double kXiSwitch = 1e-6;

/// F(y) = 1 - (1 + xi*(y-mu)/sigma)^(-1/xi). Throws std::domain_error
/// for y < mu: values below the threshold belong to the empirical body,
/// and a silent zero would mask caller bugs. For xi < 0 and y at or
/// beyond the upper support bound, returns exactly 1.
double gpd_cdf(double y, const GpdParams& p);

/// Survival function 1 - F(y), computed without cancellation. Same
/// domain rules as gpd_cdf.
double gpd_sf(double y, const GpdParams& p);

/// Log density; -inf outside the support (this is the feasibility
/// barrier the likelihood optimizer relies on).
double gpd_logpdf(double y, const GpdParams& p);

/// Exact inverse of gpd_cdf on q in [0, 1).
double gpd_quantile(double q, const GpdParams& p);

/// mu - sigma/xi for xi < 0, +infinity otherwise.
double gpd_support_upper(const GpdParams& p);

/// Inverse-CDF sampling; deterministic given the generator state.
std::vector<double> gpd_sample(std::size_t count, const GpdParams& p, SplitMix64& rng);

/// Continuous power law 1 - (y/mu)^(-1/xi), the GPD special case with
/// sigma = mu*xi. Requires y >= mu > 0 and xi > 0.
double pareto_cdf(double y, double mu, double xi);

}  // namespace tailrisk
