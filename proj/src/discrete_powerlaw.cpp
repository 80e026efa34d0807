#include "tailrisk/discrete_powerlaw.hpp"

#include <cmath>
#include <stdexcept>

namespace tailrisk {

namespace {

constexpr int kZetaTerms = 10000;

void check_dpl(const DiscretePowerLawParams& p) {
  if (!(p.alpha > 1.0) || !std::isfinite(p.alpha))
    throw std::domain_error("dpl: alpha must be finite and > 1");
  if (p.xmin < 1) throw std::domain_error("dpl: xmin must be >= 1");
}

}  // namespace

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !std::isfinite(s)) throw std::domain_error("hurwitz_zeta: s must be > 1");
  if (!(a > 0.0) || !std::isfinite(a)) throw std::domain_error("hurwitz_zeta: a must be > 0");
  // Smallest terms first keeps the plain double sum near full precision.
  double sum = 0.0;
  for (int k = kZetaTerms - 1; k >= 0; --k) sum += std::pow(k + a, -s);
  const double w = kZetaTerms + a;
  const double fw = std::pow(w, -s);
  double tail = w * fw / (s - 1.0);  // integral_N^inf (x+a)^(-s) dx
  tail += 0.5 * fw;
  tail += s * fw / (12.0 * w);
  tail -= s * (s + 1.0) * (s + 2.0) * fw / (720.0 * w * w * w);
  return sum + tail;
}

double dpl_pmf(std::int64_t x, const DiscretePowerLawParams& p) {
  check_dpl(p);
  if (x < p.xmin) throw std::domain_error("dpl_pmf: x below xmin");
  return std::pow(static_cast<double>(x), -p.alpha) /
         hurwitz_zeta(p.alpha, static_cast<double>(p.xmin));
}

double dpl_cdf(std::int64_t x, const DiscretePowerLawParams& p) {
  check_dpl(p);
  if (x < p.xmin) throw std::domain_error("dpl_cdf: x below xmin");
  return 1.0 - hurwitz_zeta(p.alpha, static_cast<double>(x + 1)) /
                   hurwitz_zeta(p.alpha, static_cast<double>(p.xmin));
}

double dpl_sf_inclusive(std::int64_t x, const DiscretePowerLawParams& p) {
  check_dpl(p);
  if (x <= p.xmin) return 1.0;
  return hurwitz_zeta(p.alpha, static_cast<double>(x)) /
         hurwitz_zeta(p.alpha, static_cast<double>(p.xmin));
}

std::vector<double> dpl_cdf_table(const DiscretePowerLawParams& p, std::int64_t x_max) {
  check_dpl(p);
  if (x_max < p.xmin) throw std::domain_error("dpl_cdf_table: x_max below xmin");
  const double norm = hurwitz_zeta(p.alpha, static_cast<double>(p.xmin));
  std::vector<double> cdf;
  cdf.reserve(static_cast<std::size_t>(x_max - p.xmin + 1));
  long double acc = 0.0L;
  for (std::int64_t x = p.xmin; x <= x_max; ++x) {
    acc += std::pow(static_cast<long double>(x), static_cast<long double>(-p.alpha));
    cdf.push_back(static_cast<double>(acc) / norm);
  }
  return cdf;
}

}  // namespace tailrisk
