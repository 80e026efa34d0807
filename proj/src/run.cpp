#include "tailrisk/run.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tailrisk/errors.hpp"
#include "tailrisk/powerlaw_fit.hpp"
#include "tailrisk/rare_event.hpp"

namespace tailrisk {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::vector<double> tail_above(const std::vector<double>& severities, double mu) {
  std::vector<double> tail;
  for (double y : severities)
    if (y > mu) tail.push_back(y);
  std::sort(tail.begin(), tail.end());
  return tail;
}

}  // namespace

FitReport run_fit(const std::vector<double>& severities, const FitConfig& config) {
  if (severities.empty()) throw DataError("fit: empty catalog");

  FitReport report;
  report.mu = config.mu;
  report.event_size = config.event_size;
  report.n_events = severities.size();
  report.n_used_for_prob =
      config.n_override != 0 ? config.n_override : severities.size();
  report.replicates = config.replicates;
  report.level = config.level;
  report.seed = config.seed;
  report.n_tail_ci = report.tail_fraction_ci = report.xi_ci = report.sigma_ci =
      report.reduction_ci = report.prob_ci = Interval{kNan, kNan};

  const std::vector<double> tail = tail_above(severities, config.mu);
  report.n_tail = tail.size();
  const double n_all = static_cast<double>(severities.size());
  report.tail_fraction = static_cast<double>(tail.size()) / n_all;

  report.fit = fit_gpd(tail, config.mu);
  if (!report.fit.converged)
    throw NumericError("fit: optimizer did not converge at mu=" +
                       std::to_string(config.mu));
  if (!(config.event_size >= config.mu))
    throw DataError("fit: event size " + std::to_string(config.event_size) +
                    " is below the threshold " + std::to_string(config.mu));

  report.reduction = powerlaw_reduction_stat(report.fit);
  report.ks =
      ks_statistic(tail, [&](double y) { return gpd_cdf(y, report.fit.params); });
  const double p_hat = (n_all - static_cast<double>(tail.size())) / n_all;
  report.prob_event = event_probability(EventProbabilityInput{
      config.event_size, report.n_used_for_prob, p_hat, report.fit.params});

  if (config.replicates == 0) return report;

  const auto estimator = [&](const std::vector<double>& sample) {
    const std::vector<double> sample_tail = tail_above(sample, config.mu);
    const GpdFit fit = fit_gpd(sample_tail, config.mu);
    if (!fit.converged) throw NumericError("tail fit did not converge");
    const double n_sample = static_cast<double>(sample.size());
    const double frac = static_cast<double>(sample_tail.size()) / n_sample;
    // same expression as the sweep estimator, so a one-point sweep agrees
    // with this report bitwise, intervals included
    const double ph =
        (n_sample - static_cast<double>(sample_tail.size())) / n_sample;
    const std::size_t ne = config.n_override != 0 ? config.n_override : sample.size();
    const double prob = event_probability(
        EventProbabilityInput{config.event_size, ne, ph, fit.params});
    return std::vector<double>{static_cast<double>(sample_tail.size()), frac,
                               fit.params.xi, fit.params.sigma,
                               powerlaw_reduction_stat(fit), prob};
  };

  const BootstrapMultiSummary boot =
      bootstrap_estimate_multi(severities, estimator, config.replicates, config.level,
                               derive_seed(config.seed, 0), config.jobs);
  report.n_tail_ci = boot.intervals[0];
  report.tail_fraction_ci = boot.intervals[1];
  report.xi_ci = boot.intervals[2];
  report.sigma_ci = boot.intervals[3];
  report.reduction_ci = boot.intervals[4];
  report.prob_ci = boot.intervals[5];
  report.n_boot_failed = boot.n_failed;
  return report;
}

std::vector<double> default_sweep_grid() {
  std::vector<double> grid;
  for (int u = 10; u <= 100; u += 5) grid.push_back(static_cast<double>(u));
  return grid;
}

std::vector<double> default_mrl_grid(const std::vector<double>& severities) {
  if (severities.size() < 3)
    throw DataError("mrl: need at least 3 events for the default grid");
  std::vector<double> top(severities);
  std::partial_sort(top.begin(), top.begin() + 3, top.end(), std::greater<double>());
  const double hi = top[2];
  std::vector<double> grid;
  grid.reserve(101);
  for (int i = 0; i <= 100; ++i)
    grid.push_back(hi * static_cast<double>(i) / 100.0);
  return grid;
}

}  // namespace tailrisk
