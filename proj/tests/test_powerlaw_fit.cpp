#include "tailrisk/powerlaw_fit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "tailrisk/errors.hpp"
#include "tailrisk/gpd.hpp"
#include "tailrisk/rng.hpp"

using namespace tailrisk;

namespace {

// Test-local sampler: inverse-CDF on the discrete power law via sorted
// uniforms and a single forward walk over the CDF table. Independent of
// the fitting code under test except for the pmf normalization.
std::vector<double> sample_dpl(std::size_t n, const DiscretePowerLawParams& p,
                               std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> u(n);
  for (auto& x : u) x = rng.next_u01();
  std::sort(u.begin(), u.end());

  std::vector<double> out;
  out.reserve(n);
  const double norm = hurwitz_zeta(p.alpha, static_cast<double>(p.xmin));
  std::int64_t x = p.xmin;
  double cdf = std::pow(static_cast<double>(x), -p.alpha) / norm;
  for (double ui : u) {
    while (cdf < ui && x < p.xmin + 2000000) {
      ++x;
      cdf += std::pow(static_cast<double>(x), -p.alpha) / norm;
    }
    out.push_back(static_cast<double>(x));
  }
  // restore exchangeable order so tests do not depend on sortedness
  SplitMix64 shuffler(seed + 1);
  for (std::size_t i = out.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(shuffler.next_u01() * static_cast<double>(i));
    std::swap(out[i - 1], out[std::min(j, i - 1)]);
  }
  return out;
}

}  // namespace

TEST_CASE("ks statistic agrees with an explicit corner scan") {
  const GpdParams p{0.0, 2.0, 0.3};
  SplitMix64 rng(8);
  auto tail = gpd_sample(257, p, rng);
  std::sort(tail.begin(), tail.end());
  const auto cdf = [&](double y) { return gpd_cdf(y, p); };
  const double d = ks_statistic(tail, cdf);

  // brute force: the ECDF is a step function, so the supremum of
  // |ECDF - F| is attained at a data point, approaching from either side
  double brute = 0.0;
  const double n = static_cast<double>(tail.size());
  for (std::size_t i = 0; i < tail.size(); ++i) {
    const double f = cdf(tail[i]);
    brute = std::max(brute, std::abs(static_cast<double>(i + 1) / n - f));
    brute = std::max(brute, std::abs(static_cast<double>(i) / n - f));
  }
  CHECK(d == doctest::Approx(brute).epsilon(1e-15));
  CHECK(d > 0.0);
  CHECK(d < 0.1);  // a correct model on n=257 rarely strays further
}

TEST_CASE("ks statistic hand cases") {
  // two points at the quartiles of the model: every corner gap is 0.25
  const GpdParams p{0.0, 1.0, 0.0};
  const std::vector<double> two{gpd_quantile(0.25, p), gpd_quantile(0.75, p)};
  CHECK(ks_statistic(two, [&](double y) { return gpd_cdf(y, p); }) ==
        doctest::Approx(0.25).epsilon(1e-12));
  // a perfectly spaced grid at (i - 0.5)/n leaves exactly 0.5/n
  std::vector<double> grid;
  for (int i = 0; i < 10; ++i)
    grid.push_back(gpd_quantile((static_cast<double>(i) + 0.5) / 10.0, p));
  CHECK(ks_statistic(grid, [&](double y) { return gpd_cdf(y, p); }) ==
        doctest::Approx(0.05).epsilon(1e-12));
  CHECK_THROWS_AS(ks_statistic({}, [](double) { return 0.5; }), DataError);
}

TEST_CASE("alpha recovery on synthetic discrete power-law data") {
  const DiscretePowerLawParams truth{2.5, 3};
  const auto data = sample_dpl(200000, truth, 17);
  std::vector<double> tail;
  for (double x : data)
    if (x >= 3.0) tail.push_back(x);
  std::sort(tail.begin(), tail.end());
  const double alpha = fit_dpl_alpha(tail, 3.0);
  CHECK(alpha == doctest::Approx(2.5).epsilon(0.02));
}

TEST_CASE("golden-section alpha is the global optimum on a fine grid") {
  const auto data = sample_dpl(5000, DiscretePowerLawParams{1.9, 2}, 18);
  std::vector<double> tail;
  for (double x : data)
    if (x >= 2.0) tail.push_back(x);
  std::sort(tail.begin(), tail.end());
  const double alpha = fit_dpl_alpha(tail, 2.0);

  double log_sum = 0.0;
  for (double x : tail) log_sum += std::log(x);
  const auto nll = [&](double a) {
    return a * log_sum +
           static_cast<double>(tail.size()) * std::log(hurwitz_zeta(a, 2.0));
  };
  const double at_fit = nll(alpha);
  for (double a = 1.01; a < 6.0; a += 0.005) CHECK(at_fit <= nll(a) + 1e-8);
}

TEST_CASE("fit_dpl bundles tail size and ks") {
  const auto data = sample_dpl(20000, DiscretePowerLawParams{2.2, 4}, 19);
  const auto fit = fit_dpl(data, 4.0);
  CHECK(fit.params.xmin == 4);
  std::size_t expect_tail = 0;
  for (double x : data)
    if (x >= 4.0) ++expect_tail;
  CHECK(fit.n_tail == expect_tail);
  CHECK(fit.params.alpha == doctest::Approx(2.2).epsilon(0.05));
  CHECK(fit.ks_statistic < 0.02);
  CHECK(fit.ks_statistic > 0.0);
}

TEST_CASE("xmin selection finds the contamination break") {
  // clean power law above 5, flat junk below: KS should favor xmin near 5
  auto data = sample_dpl(30000, DiscretePowerLawParams{2.3, 5}, 20);
  SplitMix64 rng(21);
  for (int i = 0; i < 12000; ++i)
    data.push_back(std::floor(rng.next_u01() * 4.0) + 1.0);  // 1..4 uniform
  std::vector<double> candidates;
  for (int c = 1; c <= 30; ++c) candidates.push_back(static_cast<double>(c));
  const auto pick = select_xmin_ks(data, candidates);
  CHECK(pick.params.xmin >= 4);
  CHECK(pick.params.xmin <= 6);
  CHECK(pick.params.alpha == doctest::Approx(2.3).epsilon(0.05));

  // the winner's KS is minimal over every feasible candidate
  for (double c : candidates) {
    const auto fit = fit_dpl(data, c);
    CHECK(pick.ks_statistic <= fit.ks_statistic);
  }
}

TEST_CASE("xmin selection rules") {
  // candidates starving the tail below 10 points are skipped entirely
  std::vector<double> data;
  for (int i = 0; i < 12; ++i) data.push_back(2.0 + static_cast<double>(i % 3));
  const auto pick = select_xmin_ks(data, {2.0, 4.0});  // only 2.0 keeps >= 10
  CHECK(pick.params.xmin == 2);
  CHECK_THROWS_AS(select_xmin_ks(data, {4.0}), DataError);
  CHECK_THROWS_AS(select_xmin_ks(data, {}), DataError);
  // a duplicated candidate exercises the strict-< tie rule: the first
  // (equal) KS wins, so the duplicate changes nothing
  const auto dup = select_xmin_ks(data, {2.0, 2.0});
  CHECK(dup.params.xmin == pick.params.xmin);
  CHECK(dup.params.alpha == pick.params.alpha);
  CHECK(dup.ks_statistic == pick.ks_statistic);
}

TEST_CASE("degenerate and non-integer tails are rejected") {
  CHECK_THROWS_WITH_AS(fit_dpl({5.0, 5.0, 5.0, 5.0}, 5.0),
                       doctest::Contains("alpha is unbounded"), DataError);
  CHECK_THROWS_AS(fit_dpl({1.5, 2.0}, 1.0), DataError);   // non-integer severity
  CHECK_THROWS_AS(fit_dpl({0.0, 2.0}, 1.0), DataError);   // below 1
  CHECK_THROWS_AS(fit_dpl({2.0, 3.0}, 5.0), DataError);   // empty tail
  CHECK_THROWS_AS(fit_dpl_alpha({}, 2.0), DataError);
}
