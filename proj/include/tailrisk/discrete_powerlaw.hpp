#pragma once

#include <cstdint>
#include <vector>

namespace tailrisk {

/// Discrete power law: pmf(x) proportional to x^(-alpha) on integers
/// x >= xmin, normalized by the Hurwitz zeta value zeta(alpha, xmin).
struct DiscretePowerLawParams {
  double alpha = 2.0;     // > 1
  std::int64_t xmin = 1;  // >= 1
};

/// zeta(s, a) = sum_{k>=0} (k+a)^(-s) for s > 1, a > 0. Direct summation
/// of the first 1e4 terms plus a four-term Euler-Maclaurin tail
/// (integral, f/2, B2, B4); absolute error well below 1e-10 on s > 1.
double hurwitz_zeta(double s, double a);

/// x^(-alpha) / zeta(alpha, xmin); x >= xmin required.
double dpl_pmf(std::int64_t x, const DiscretePowerLawParams& p);

/// P(X <= x) = 1 - zeta(alpha, x+1) / zeta(alpha, xmin); x >= xmin required.
double dpl_cdf(std::int64_t x, const DiscretePowerLawParams& p);

/// P(X >= x); equals 1 at x <= xmin.
double dpl_sf_inclusive(std::int64_t x, const DiscretePowerLawParams& p);

/// CDF evaluated at every integer xmin..x_max (one zeta call plus a
/// cumulative sum); index i holds P(X <= xmin + i).
std::vector<double> dpl_cdf_table(const DiscretePowerLawParams& p, std::int64_t x_max);

}  // namespace tailrisk
