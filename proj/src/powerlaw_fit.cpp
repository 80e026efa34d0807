#include "tailrisk/powerlaw_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tailrisk/errors.hpp"

namespace tailrisk {

namespace {

constexpr double kAlphaLo = 1.0 + 1e-9;
constexpr double kAlphaHi = 10.0;
constexpr double kAlphaTol = 1e-10;

// Dense CDF tables stay cheap up to this range; beyond it fall back to
// per-value zeta ratios so a single huge severity cannot blow up memory.
constexpr std::int64_t kMaxTableRange = 65536;

std::int64_t as_integer(double x) {
  if (!(x >= 1.0) || std::floor(x) != x)
    throw DataError("power-law fit requires integer severities >= 1, got " + std::to_string(x));
  return static_cast<std::int64_t>(x);
}

}  // namespace

double ks_statistic(const std::vector<double>& tail_sorted,
                    const std::function<double(double)>& cdf) {
  if (tail_sorted.empty()) throw DataError("ks: empty tail");
  const double n = static_cast<double>(tail_sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < tail_sorted.size(); ++i) {
    const double f = cdf(tail_sorted[i]);
    const double hi = static_cast<double>(i + 1) / n;
    const double lo = static_cast<double>(i) / n;
    d = std::max({d, std::abs(hi - f), std::abs(lo - f)});
  }
  return d;
}

double fit_dpl_alpha(const std::vector<double>& tail_sorted, double xmin) {
  if (tail_sorted.size() < 2) throw DataError("power-law fit: fewer than 2 tail points");
  if (tail_sorted.front() == tail_sorted.back() && tail_sorted.front() == xmin)
    throw DataError("power-law fit: every tail value equals xmin; alpha is unbounded");

  double sum_log = 0.0;
  for (double x : tail_sorted) sum_log += std::log(x);
  const double n = static_cast<double>(tail_sorted.size());

  // negative log-likelihood, convex in alpha
  const auto nll = [&](double alpha) {
    return alpha * sum_log + n * std::log(hurwitz_zeta(alpha, xmin));
  };

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = kAlphaLo;
  double hi = kAlphaHi;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = nll(x1);
  double f2 = nll(x2);
  while (hi - lo > kAlphaTol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = nll(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = nll(x2);
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

// KS distance for the discrete model. Both CDFs are right-continuous
// step functions jumping only on the integer lattice, so the sup over
// the reals is the max over lattice points of |ECDF(x) - F(x)|. The
// continuous-style per-observation formula is wrong here: at a tied
// value its lower step compares ECDF(v-) against F(v), which differs by
// pmf(v) even for a perfectly matching sample, and that floor decreases
// in xmin — it would drag every xmin selection to the largest candidate.
double dpl_ks(const std::vector<double>& tail_sorted, const DiscretePowerLawParams& p) {
  const double n = static_cast<double>(tail_sorted.size());
  const std::int64_t x_max = static_cast<std::int64_t>(tail_sorted.back());
  double d = 0.0;

  if (x_max - p.xmin <= kMaxTableRange) {
    const std::vector<double> table = dpl_cdf_table(p, x_max);
    std::size_t seen = 0;
    for (std::int64_t x = p.xmin; x <= x_max; ++x) {
      while (seen < tail_sorted.size() && static_cast<std::int64_t>(tail_sorted[seen]) <= x)
        ++seen;
      const double ecdf = static_cast<double>(seen) / n;
      d = std::max(d, std::abs(ecdf - table[static_cast<std::size_t>(x - p.xmin)]));
    }
    return d;
  }

  // huge range: visit the corners around each distinct observed value;
  // between observations the model CDF is monotone, so the gap extremes
  // are at a distinct value and just below the next one
  std::size_t i = 0;
  while (i < tail_sorted.size()) {
    const std::int64_t v = static_cast<std::int64_t>(tail_sorted[i]);
    const double ecdf_below = static_cast<double>(i) / n;
    if (v > p.xmin) d = std::max(d, std::abs(ecdf_below - dpl_cdf(v - 1, p)));
    while (i < tail_sorted.size() && static_cast<std::int64_t>(tail_sorted[i]) == v) ++i;
    const double ecdf_at = static_cast<double>(i) / n;
    d = std::max(d, std::abs(ecdf_at - dpl_cdf(v, p)));
  }
  return d;
}

}  // namespace

PowerLawFit fit_dpl(const std::vector<double>& severities, double xmin) {
  const std::int64_t ixmin = as_integer(xmin);

  std::vector<double> tail;
  tail.reserve(severities.size());
  for (double x : severities) {
    as_integer(x);
    if (x >= xmin) tail.push_back(x);
  }
  if (tail.size() < 2) throw DataError("power-law fit: fewer than 2 tail points at xmin");
  std::sort(tail.begin(), tail.end());

  PowerLawFit fit;
  fit.params = DiscretePowerLawParams{fit_dpl_alpha(tail, xmin), ixmin};
  fit.n_tail = tail.size();
  fit.ks_statistic = dpl_ks(tail, fit.params);
  return fit;
}

PowerLawFit select_xmin_ks(const std::vector<double>& severities,
                           const std::vector<double>& candidates) {
  if (candidates.empty()) throw DataError("power-law fit: empty xmin candidate list");

  PowerLawFit best;
  best.ks_statistic = std::numeric_limits<double>::infinity();
  bool found = false;
  for (double c : candidates) {
    as_integer(c);
    std::size_t n_tail = 0;
    for (double x : severities)
      if (x >= c) ++n_tail;
    if (n_tail < 10) continue;  // too few points for a meaningful KS
    const PowerLawFit fit = fit_dpl(severities, c);
    if (fit.ks_statistic < best.ks_statistic) {  // strict: ties keep smaller xmin
      best = fit;
      found = true;
    }
  }
  if (!found)
    throw DataError("power-law fit: no xmin candidate leaves >= 10 tail points");
  return best;
}

}  // namespace tailrisk
