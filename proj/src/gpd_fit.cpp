#include "tailrisk/gpd_fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "tailrisk/errors.hpp"

namespace tailrisk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDiameterTol = 1e-8;
constexpr int kMaxIterations = 500;

using Point = std::array<double, 2>;  // (log sigma, xi)

struct SimplexOutcome {
  Point x{};
  double f = kInf;
  int iterations = 0;
  bool converged = false;
};

double simplex_diameter(const std::array<Point, 3>& v) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      d = std::max({d, std::abs(v[i][0] - v[j][0]), std::abs(v[i][1] - v[j][1])});
  return d;
}

/// Nelder-Mead with the standard reflection / expansion / contraction /
/// shrink coefficients (1, 2, 0.5, 0.5).
SimplexOutcome nelder_mead(const std::function<double(const Point&)>& f, const Point& start,
                           const Point& step) {
  std::array<Point, 3> v{start, Point{start[0] + step[0], start[1]},
                         Point{start[0], start[1] + step[1]}};
  std::array<double, 3> fv{f(v[0]), f(v[1]), f(v[2])};

  SimplexOutcome out;
  for (out.iterations = 0; out.iterations < kMaxIterations; ++out.iterations) {
    // order: v[0] best, v[2] worst
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    std::array<Point, 3> sv{v[idx[0]], v[idx[1]], v[idx[2]]};
    std::array<double, 3> sf{fv[idx[0]], fv[idx[1]], fv[idx[2]]};
    v = sv;
    fv = sf;

    if (simplex_diameter(v) < kDiameterTol) {
      out.converged = true;
      break;
    }

    const Point centroid{0.5 * (v[0][0] + v[1][0]), 0.5 * (v[0][1] + v[1][1])};
    auto along = [&](double t) {
      return Point{centroid[0] + t * (centroid[0] - v[2][0]),
                   centroid[1] + t * (centroid[1] - v[2][1])};
    };

    const Point reflected = along(1.0);
    const double fr = f(reflected);
    if (fr < fv[0]) {
      const Point expanded = along(2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        v[2] = expanded;
        fv[2] = fe;
      } else {
        v[2] = reflected;
        fv[2] = fr;
      }
      continue;
    }
    if (fr < fv[1]) {
      v[2] = reflected;
      fv[2] = fr;
      continue;
    }
    const Point contracted = fr < fv[2] ? along(0.5) : along(-0.5);
    const double fc = f(contracted);
    if (fc < std::min(fr, fv[2])) {
      v[2] = contracted;
      fv[2] = fc;
      continue;
    }
    // shrink toward the best vertex
    for (int i = 1; i < 3; ++i) {
      v[i] = Point{v[0][0] + 0.5 * (v[i][0] - v[0][0]), v[0][1] + 0.5 * (v[i][1] - v[0][1])};
      fv[i] = f(v[i]);
    }
  }

  const int best = static_cast<int>(std::min_element(fv.begin(), fv.end()) - fv.begin());
  out.x = v[best];
  out.f = fv[best];
  return out;
}

}  // namespace

double gpd_negloglik(double log_sigma, double xi, const std::vector<double>& exceedances,
                     double mu) {
  if (!std::isfinite(log_sigma) || !std::isfinite(xi)) return kInf;
  if (std::abs(xi) > kXiBox) return kInf;
  const double sigma = std::exp(log_sigma);
  if (!(sigma > 0.0) || !std::isfinite(sigma)) return kInf;
  const double n = static_cast<double>(exceedances.size());

  if (std::abs(xi) < kXiSwitch) {
    double sum_z = 0.0;
    for (double y : exceedances) sum_z += (y - mu) / sigma;
    return n * log_sigma + sum_z;
  }

  double sum_log1p = 0.0;
  for (double y : exceedances) {
    const double t = xi * (y - mu) / sigma;
    if (t <= -1.0) return kInf;  // outside the support
    sum_log1p += std::log1p(t);
  }
  return n * log_sigma + (1.0 + 1.0 / xi) * sum_log1p;
}

GpdFit fit_gpd(const std::vector<double>& exceedances_sorted, double mu) {
  const auto& exc = exceedances_sorted;
  if (exc.size() < 2) throw DataError("fit: fewer than 2 exceedances");
  if (!std::is_sorted(exc.begin(), exc.end()))
    throw std::domain_error("fit: exceedances must be sorted ascending");
  if (!(exc.front() > mu)) throw std::domain_error("fit: exceedances must all be > mu");
  if (exc.front() == exc.back())
    throw DataError("fit: all exceedances equal (" + std::to_string(exc.front()) +
                    "); degenerate tail");

  double mean_excess = 0.0;
  for (double y : exc) mean_excess += y - mu;
  mean_excess /= static_cast<double>(exc.size());
  const double max_excess = exc.back() - mu;

  const auto objective = [&](const Point& p) { return gpd_negloglik(p[0], p[1], exc, mu); };

  constexpr std::array<double, 3> kXiStarts{-0.2, 0.1, 0.5};
  SimplexOutcome best;
  bool have_converged = false;
  for (double xi0 : kXiStarts) {
    double sigma0 = mean_excess;
    if (xi0 < 0.0) sigma0 = std::max(sigma0, 1.05 * (-xi0) * max_excess);
    const SimplexOutcome outcome = nelder_mead(objective, Point{std::log(sigma0), xi0},
                                               Point{0.5, 0.25});
    const bool better = have_converged == outcome.converged ? outcome.f < best.f
                                                            : outcome.converged;
    if (better) {
      best = outcome;
      have_converged = have_converged || outcome.converged;
    }
  }

  GpdFit fit;
  fit.params = GpdParams{mu, std::exp(best.x[0]), best.x[1]};
  fit.n_tail = exc.size();
  fit.log_likelihood = -best.f;
  fit.optimizer_iterations = best.iterations;
  fit.converged = best.converged && std::isfinite(best.f) &&
                  std::abs(best.x[1]) < kXiBox - 1e-6;
  return fit;
}

double powerlaw_reduction_stat(const GpdFit& fit) {
  return fit.params.sigma - fit.params.mu * fit.params.xi;
}

}  // namespace tailrisk
