#include "tailrisk/discrete_powerlaw.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracle_values.hpp"

using namespace tailrisk;

TEST_CASE("hurwitz_zeta matches the 50-digit oracle") {
  for (const auto& c : oracle::kZetaCases)
    CHECK(hurwitz_zeta(c.s, c.a) == doctest::Approx(c.value).epsilon(1e-12));
  // the classic special value, to the tolerance the rest of the toolkit
  // leans on
  const double pi = 3.14159265358979323846;
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - pi * pi / 6.0) < 1e-10);
}

TEST_CASE("hurwitz_zeta lies inside a brute-force partial-sum bracket") {
  // sum the first N terms in long double, then bracket the remainder by
  // integral bounds: int_N^inf f <= tail <= int_N^inf f + f(N)
  struct Case {
    double s, a;
  } cases[] = {{1.5, 1.0}, {2.31, 4.0}, {3.0, 10.0}, {1.05, 2.0}};
  for (const auto& c : cases) {
    const long long n = 2'000'000;
    long double partial = 0.0L;
    for (long long k = n - 1; k >= 0; --k)
      partial += std::pow(static_cast<long double>(k) + c.a, -static_cast<long double>(c.s));
    const long double edge = static_cast<long double>(n) + c.a;
    const long double integral = std::pow(edge, 1.0L - c.s) / (c.s - 1.0L);
    const long double lo = partial + integral;
    const long double hi = lo + std::pow(edge, -static_cast<long double>(c.s));
    const double z = hurwitz_zeta(c.s, c.a);
    CHECK(z >= static_cast<double>(lo) - 1e-9);
    CHECK(z <= static_cast<double>(hi) + 1e-9);
  }
}

TEST_CASE("hurwitz_zeta rejects out-of-domain arguments") {
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, -3.0), std::domain_error);
}

TEST_CASE("pmf, cdf, and inclusive sf are mutually consistent") {
  const DiscretePowerLawParams p{2.4, 3};
  CHECK(dpl_cdf(3, p) == doctest::Approx(dpl_pmf(3, p)).epsilon(1e-14));
  for (std::int64_t x = 4; x < 400; x += 7) {
    CHECK(dpl_pmf(x, p) ==
          doctest::Approx(dpl_cdf(x, p) - dpl_cdf(x - 1, p)).epsilon(1e-10));
    CHECK(dpl_sf_inclusive(x, p) ==
          doctest::Approx(1.0 - dpl_cdf(x - 1, p)).epsilon(1e-12));
  }
  CHECK(dpl_sf_inclusive(3, p) == 1.0);
  CHECK(dpl_sf_inclusive(1, p) == 1.0);  // below xmin: the event is certain
  CHECK(dpl_sf_inclusive(-5, p) == 1.0);
}

TEST_CASE("cdf table agrees with per-value evaluation") {
  // the table path is a cumulative pow sum over one normalization, the
  // scalar path a ratio of two independent zeta evaluations; their
  // agreement cross-checks both
  const DiscretePowerLawParams p{1.8, 7};
  const auto table = dpl_cdf_table(p, 7 + 5000);
  REQUIRE(table.size() == 5001);
  for (std::int64_t i : {0, 1, 2, 10, 100, 999, 5000}) {
    CHECK(table[static_cast<std::size_t>(i)] ==
          doctest::Approx(dpl_cdf(7 + i, p)).epsilon(1e-11));
  }
  // monotone, bounded
  for (std::size_t i = 1; i < table.size(); ++i) {
    CHECK(table[i] >= table[i - 1]);
    CHECK(table[i] < 1.0);
  }
}

TEST_CASE("pmf telescopes into the cdf") {
  const DiscretePowerLawParams p{2.05, 5};
  double acc = 0.0;
  for (std::int64_t x = 5; x <= 2000; ++x) acc += dpl_pmf(x, p);
  CHECK(acc == doctest::Approx(dpl_cdf(2000, p)).epsilon(1e-11));
  CHECK(acc < 1.0);
}

TEST_CASE("dpl kernels reject invalid inputs") {
  const DiscretePowerLawParams p{2.4, 3};
  CHECK_THROWS_AS(dpl_pmf(2, p), std::domain_error);
  CHECK_THROWS_AS(dpl_cdf(2, p), std::domain_error);
  CHECK_THROWS_AS(dpl_pmf(3, DiscretePowerLawParams{1.0, 3}), std::domain_error);
  CHECK_THROWS_AS(dpl_pmf(3, DiscretePowerLawParams{2.0, 0}), std::domain_error);
  CHECK_THROWS_AS(dpl_cdf_table(DiscretePowerLawParams{2.0, 4}, 3), std::domain_error);
}
