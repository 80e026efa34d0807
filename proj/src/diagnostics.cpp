#include "tailrisk/diagnostics.hpp"

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
constexpr double kZ90 = 1.6448536269514722;  // two-sided 90% normal quantile

std::vector<double> tail_above(const std::vector<double>& severities, double mu) {
  std::vector<double> tail;
  for (double y : severities)
    if (y > mu) tail.push_back(y);
  std::sort(tail.begin(), tail.end());
  return tail;
}

void check_event_size(const std::vector<double>& grid, double event_size) {
  if (grid.empty()) throw DataError("sweep: empty threshold grid");
  if (event_size < *std::max_element(grid.begin(), grid.end()))
    throw DataError("sweep: event size " + std::to_string(event_size) +
                    " is below the largest grid threshold");
}

}  // namespace

MrlCurve mrl_curve(const std::vector<double>& severities, const std::vector<double>& grid) {
  if (severities.empty()) throw DataError("mrl: empty catalog");

  MrlCurve curve;
  for (double u : grid) {
    double sum = 0.0;
    std::size_t n = 0;
    for (double y : severities) {
      if (y > u) {
        sum += y - u;
        ++n;
      }
    }
    if (n < 2) {  // no sample sd from fewer than two excesses
      ++curve.n_dropped;
      continue;
    }
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double y : severities) {
      if (y > u) {
        const double d = (y - u) - mean;
        ss += d * d;
      }
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    curve.thresholds.push_back(u);
    curve.mean_excess.push_back(mean);
    curve.ci_half_width.push_back(kZ90 * sd / std::sqrt(static_cast<double>(n)));
    curve.n_exceed.push_back(n);
  }
  return curve;
}

std::vector<QqPoint> qq_points(const std::vector<double>& tail_sorted, const GpdFit& fit) {
  if (!fit.converged) throw NumericError("qq: tail fit did not converge");
  if (tail_sorted.empty()) throw DataError("qq: empty tail");

  const double n = static_cast<double>(tail_sorted.size());
  std::vector<QqPoint> points;
  points.reserve(tail_sorted.size());
  for (std::size_t i = 0; i < tail_sorted.size(); ++i) {
    const double p = (static_cast<double>(i) + 0.5) / n;
    points.push_back(QqPoint{gpd_quantile(p, fit.params), tail_sorted[i]});
  }
  return points;
}

std::vector<SweepRow> threshold_sweep(const std::vector<double>& severities,
                                      const std::vector<double>& grid,
                                      const SweepConfig& config) {
  if (severities.empty()) throw DataError("sweep: empty catalog");
  check_event_size(grid, config.event_size);

  const double n_all = static_cast<double>(severities.size());
  const std::size_t n_events =
      config.n_override != 0 ? config.n_override : severities.size();

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t t = 0; t < grid.size(); ++t) {
    const double u = grid[t];
    SweepRow row;
    row.mu = u;
    row.reduction_stat = kNan;
    row.ks = kNan;
    row.prob_event = kNan;
    row.xi_ci = row.sigma_ci = row.reduction_ci = row.prob_ci = Interval{kNan, kNan};

    const std::vector<double> tail = tail_above(severities, u);
    row.tail_fraction = static_cast<double>(tail.size()) / n_all;
    row.fit.params = GpdParams{u, kNan, kNan};
    row.fit.n_tail = tail.size();

    if (tail.size() >= 2) {
      try {
        row.fit = fit_gpd(tail, u);
      } catch (const DataError&) {
        // degenerate tail: keep the unconverged placeholder row
      }
    }
    if (!row.fit.converged) {
      rows.push_back(row);
      continue;
    }

    row.reduction_stat = powerlaw_reduction_stat(row.fit);
    row.ks = ks_statistic(tail, [&](double y) { return gpd_cdf(y, row.fit.params); });
    const double p_hat = (n_all - static_cast<double>(tail.size())) / n_all;
    row.prob_event = event_probability(
        EventProbabilityInput{config.event_size, n_events, p_hat, row.fit.params});

    if (config.replicates >= 1) {
      const auto estimator = [&, u](const std::vector<double>& sample) {
        const std::vector<double> sample_tail = tail_above(sample, u);
        const GpdFit fit = fit_gpd(sample_tail, u);  // DataError fails the replicate
        if (!fit.converged) throw NumericError("tail fit did not converge");
        const double ph = (static_cast<double>(sample.size()) -
                           static_cast<double>(sample_tail.size())) /
                          static_cast<double>(sample.size());
        const std::size_t ne = config.n_override != 0 ? config.n_override : sample.size();
        const double prob = event_probability(
            EventProbabilityInput{config.event_size, ne, ph, fit.params});
        return std::vector<double>{fit.params.xi, fit.params.sigma,
                                   powerlaw_reduction_stat(fit), prob};
      };
      try {
        const BootstrapMultiSummary boot =
            bootstrap_estimate_multi(severities, estimator, config.replicates, config.level,
                                     derive_seed(config.seed, t), config.jobs);
        row.xi_ci = boot.intervals[0];
        row.sigma_ci = boot.intervals[1];
        row.reduction_ci = boot.intervals[2];
        row.prob_ci = boot.intervals[3];
        row.n_boot_failed = boot.n_failed;
      } catch (const NumericError&) {
        row.n_boot_failed = config.replicates;  // every replicate failed; keep NaN CIs
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> threshold_sweep(const std::vector<double>& severities,
                                      const std::vector<double>& grid, double event_size,
                                      std::size_t replicates, std::uint64_t seed) {
  SweepConfig config;
  config.event_size = event_size;
  config.replicates = replicates;
  config.seed = seed;
  return threshold_sweep(severities, grid, config);
}

std::vector<DplSweepRow> dpl_threshold_sweep(const std::vector<double>& severities,
                                             const std::vector<double>& grid,
                                             double event_size, std::size_t n_override) {
  if (severities.empty()) throw DataError("sweep: empty catalog");
  check_event_size(grid, event_size);
  // a non-integer severity poisons every row, so reject the catalog up
  // front instead of emitting an all-NaN table
  for (double x : severities)
    if (!(x >= 1.0) || std::floor(x) != x)
      throw DataError("sweep: power-law fits need integer severities >= 1, got " +
                      std::to_string(x));

  const double n_all = static_cast<double>(severities.size());
  const std::size_t n_events = n_override != 0 ? n_override : severities.size();
  const std::int64_t y_int = static_cast<std::int64_t>(std::ceil(event_size));

  std::vector<DplSweepRow> rows;
  rows.reserve(grid.size());
  for (double u : grid) {
    if (!(u >= 1.0) || std::floor(u) != u)
      throw DataError("sweep: power-law thresholds must be integers >= 1");
    DplSweepRow row;
    row.xmin = static_cast<std::int64_t>(u);
    row.alpha = kNan;
    row.ks = kNan;
    row.prob_event = kNan;
    for (double x : severities)
      if (x >= u) ++row.n_tail;
    row.tail_fraction = static_cast<double>(row.n_tail) / n_all;

    try {
      const PowerLawFit fit = fit_dpl(severities, u);
      row.alpha = fit.params.alpha;
      row.ks = fit.ks_statistic;
      const double p_hat = (n_all - static_cast<double>(row.n_tail)) / n_all;
      const double s =
          (1.0 - p_hat) * dpl_sf_inclusive(std::max(y_int, row.xmin), fit.params);
      row.prob_event = event_probability_from_survival(s, n_events);
    } catch (const DataError&) {
      // unfittable threshold: keep the NaN row so the sweep stays aligned
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tailrisk
