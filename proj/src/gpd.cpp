#include "tailrisk/gpd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tailrisk {

namespace {

void check_params(const GpdParams& p) {
  if (!std::isfinite(p.mu) || !std::isfinite(p.sigma) || !std::isfinite(p.xi) || !(p.sigma > 0.0))
    throw std::domain_error("gpd: parameters must be finite with sigma > 0");
}

double checked_z(double y, const GpdParams& p) {
  check_params(p);
  if (!std::isfinite(y)) throw std::domain_error("gpd: y must be finite");
  if (y < p.mu) throw std::domain_error("gpd: y below the lower bound mu");
  return (y - p.mu) / p.sigma;
}

}  // namespace

double gpd_sf(double y, const GpdParams& p) {
  const double z = checked_z(y, p);
  if (std::abs(p.xi) < kXiSwitch) return std::exp(-z);
  const double t = p.xi * z;
  if (t <= -1.0) return 0.0;  // xi < 0, at or beyond the upper bound
  return std::exp(-std::log1p(t) / p.xi);
}

double gpd_cdf(double y, const GpdParams& p) {
  const double z = checked_z(y, p);
  if (std::abs(p.xi) < kXiSwitch) return -std::expm1(-z);
  const double t = p.xi * z;
  if (t <= -1.0) return 1.0;
  return -std::expm1(-std::log1p(t) / p.xi);
}

double gpd_logpdf(double y, const GpdParams& p) {
  const double z = checked_z(y, p);
  if (std::abs(p.xi) < kXiSwitch) return -std::log(p.sigma) - z;
  const double t = p.xi * z;
  if (t <= -1.0) return -std::numeric_limits<double>::infinity();
  return -std::log(p.sigma) - (1.0 + 1.0 / p.xi) * std::log1p(t);
}

double gpd_quantile(double q, const GpdParams& p) {
  check_params(p);
  if (!(q >= 0.0 && q < 1.0)) throw std::domain_error("gpd_quantile: q must lie in [0, 1)");
  if (std::abs(p.xi) < kXiSwitch) return p.mu - p.sigma * std::log1p(-q);
  return p.mu + (p.sigma / p.xi) * std::expm1(-p.xi * std::log1p(-q));
}

double gpd_support_upper(const GpdParams& p) {
  check_params(p);
  if (p.xi < 0.0) return p.mu - p.sigma / p.xi;
  return std::numeric_limits<double>::infinity();
}

std::vector<double> gpd_sample(std::size_t count, const GpdParams& p, SplitMix64& rng) {
  check_params(p);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gpd_quantile(rng.next_u01(), p));
  return out;
}

double pareto_cdf(double y, double mu, double xi) {
  if (!(mu > 0.0) || !(xi > 0.0) || !std::isfinite(mu) || !std::isfinite(xi))
    throw std::domain_error("pareto_cdf: requires mu > 0 and xi > 0");
  if (!std::isfinite(y) || y < mu) throw std::domain_error("pareto_cdf: y below the lower bound mu");
  return -std::expm1(-std::log(y / mu) / xi);
}

}  // namespace tailrisk
