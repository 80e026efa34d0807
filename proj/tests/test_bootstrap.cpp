#include "tailrisk/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "tailrisk/errors.hpp"

using namespace tailrisk;

namespace {

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::vector<double> iota_values(int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1.0);
  return v;
}

}  // namespace

TEST_CASE("percentile interval reproduces hand-computed order statistics") {
  // 2000 points, 90%: h = 1999 * 0.05 = 99.95 -> 100 + 0.95, mirrored above
  const Interval i = percentile_interval(iota_values(2000), 0.90);
  CHECK(i.lo == doctest::Approx(100.95).epsilon(1e-12));
  CHECK(i.hi == doctest::Approx(1900.05).epsilon(1e-12));

  // 4 points, 50%: h = 3 * 0.25 = 0.75 and h = 3 * 0.75 = 2.25
  const Interval j = percentile_interval({4.0, 2.0, 1.0, 3.0}, 0.50);  // unsorted on purpose
  CHECK(j.lo == doctest::Approx(1.75).epsilon(1e-12));
  CHECK(j.hi == doctest::Approx(3.25).epsilon(1e-12));

  const Interval full = percentile_interval(iota_values(2000), 1.0);
  CHECK(full.lo == 1.0);
  CHECK(full.hi == 2000.0);

  const Interval one = percentile_interval({7.5}, 0.90);
  CHECK(one.lo == 7.5);
  CHECK(one.hi == 7.5);

  CHECK_THROWS_AS(percentile_interval({}, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(percentile_interval({1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(percentile_interval({1.0}, 1.5), std::invalid_argument);
}

TEST_CASE("resample draws only original values and keeps the length") {
  const std::vector<double> v{3.0, 1.0, 4.0, 1.0, 5.0};
  SplitMix64 rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    const auto r = resample(v, rng);
    REQUIRE(r.size() == v.size());
    for (double x : r) CHECK(std::count(v.begin(), v.end(), x) > 0);
  }
}

TEST_CASE("bootstrap mean interval has the textbook width") {
  // sd of 1..100 is 29.01; the bootstrap sd of the mean ~ sd/sqrt(100),
  // so a 90% percentile interval spans about +/- 1.645 * 2.887 = 4.75
  const auto s = bootstrap_estimate(iota_values(100), mean_of, 4000, 0.90, 42);
  CHECK(s.point == doctest::Approx(50.5));
  CHECK(s.replicates == 4000);
  CHECK(s.n_failed == 0);
  CHECK(s.level == 0.90);
  const double half = 0.5 * (s.interval.hi - s.interval.lo);
  CHECK(half == doctest::Approx(4.749).epsilon(0.15));
  CHECK(s.interval.lo < 50.5);
  CHECK(s.interval.hi > 50.5);
}

TEST_CASE("results are identical for any thread count") {
  const auto v = iota_values(500);
  const MultiEstimator est = [](const std::vector<double>& x) {
    return std::vector<double>{mean_of(x), *std::max_element(x.begin(), x.end())};
  };
  const auto a = bootstrap_estimate_multi(v, est, 501, 0.90, 7, 1);
  for (int jobs : {2, 3, 8}) {
    const auto b = bootstrap_estimate_multi(v, est, 501, 0.90, 7, jobs);
    CHECK(a.replicates == b.replicates);
    CHECK(a.n_failed == b.n_failed);
    REQUIRE(b.intervals.size() == 2);
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(a.intervals[k].lo == b.intervals[k].lo);  // bitwise
      CHECK(a.intervals[k].hi == b.intervals[k].hi);
    }
  }
}

TEST_CASE("scalar wrapper shares the replicate stream with multi") {
  const auto v = iota_values(200);
  const auto scalar = bootstrap_estimate(v, mean_of, 300, 0.80, 5);
  const MultiEstimator est = [](const std::vector<double>& x) {
    return std::vector<double>{mean_of(x)};
  };
  const auto multi = bootstrap_estimate_multi(v, est, 300, 0.80, 5);
  CHECK(scalar.interval.lo == multi.intervals[0].lo);
  CHECK(scalar.interval.hi == multi.intervals[0].hi);
  CHECK(scalar.point == multi.point[0]);
}

TEST_CASE("failed replicates are dropped and counted") {
  // fails whenever the resample missed the single large value
  const std::vector<double> v{1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 100.0};
  const Estimator est = [](const std::vector<double>& x) {
    if (*std::max_element(x.begin(), x.end()) < 100.0)
      throw NumericError("resample lost the outlier");
    return mean_of(x);
  };
  const auto s = bootstrap_estimate(v, est, 400, 0.90, 123);
  CHECK(s.n_failed > 50);       // P(miss) = (7/8)^8 ~ 0.34
  CHECK(s.n_failed < 250);
  CHECK(s.replicates == 400 - s.n_failed);
  CHECK(s.point == doctest::Approx((7.0 + 100.0) / 8.0));

  // a failing point estimate is not a resampling problem: it propagates
  // unwrapped so the caller sees the original exception
  const Estimator broken = [](const std::vector<double>&) -> double {
    throw std::runtime_error("cannot estimate this");
  };
  CHECK_THROWS_WITH_AS(bootstrap_estimate(v, broken, 10, 0.90, 1),
                       "cannot estimate this", std::runtime_error);
}

TEST_CASE("all-failed bootstrap reports the first error") {
  const std::vector<double> v{1.0, 2.0};
  // point estimate succeeds, every replicate fails
  bool first_call = true;
  const Estimator est = [&first_call](const std::vector<double>& x) -> double {
    if (first_call) {
      first_call = false;
      return mean_of(x);
    }
    throw std::runtime_error("replicate failure");
  };
  CHECK_THROWS_WITH_AS(bootstrap_estimate(v, est, 8, 0.90, 2),
                       doctest::Contains("replicate failure"), NumericError);
}

TEST_CASE("bootstrap argument validation") {
  const auto v = iota_values(10);
  CHECK_THROWS_AS(bootstrap_estimate({}, mean_of, 10, 0.9, 1), DataError);
  CHECK_THROWS_AS(bootstrap_estimate(v, mean_of, 0, 0.9, 1), std::invalid_argument);
  CHECK_THROWS_AS(bootstrap_estimate(v, mean_of, 10, 0.0, 1), std::invalid_argument);
  // nonsensical job counts are clamped, not fatal
  const auto clamped = bootstrap_estimate(v, mean_of, 10, 0.9, 1, 0);
  const auto serial = bootstrap_estimate(v, mean_of, 10, 0.9, 1, 1);
  CHECK(clamped.interval.lo == serial.interval.lo);
  CHECK(clamped.interval.hi == serial.interval.hi);

  // an estimator whose output size drifts between replicates fails those
  // replicates; when they all drift, the mismatch surfaces
  int calls = 0;
  const MultiEstimator ragged = [&calls](const std::vector<double>&) {
    ++calls;
    return std::vector<double>(calls == 1 ? 1 : 2, 0.0);
  };
  CHECK_THROWS_WITH_AS(bootstrap_estimate_multi(v, ragged, 20, 0.9, 3, 1),
                       doctest::Contains("expected 1"), NumericError);
}
