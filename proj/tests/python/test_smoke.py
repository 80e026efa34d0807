"""End-to-end smoke checks for the python module.

The heavy numerical validation lives in the C++ suite; these only prove
the bindings expose working objects and that determinism survives the
language boundary.
"""

import math

import pytest

import tailrisk as tr


def test_gpd_round_trip():
    p = tr.GpdParams(mu=10.0, sigma=9.47, xi=0.56)
    for q in (0.0, 0.1, 0.5, 0.9, 0.999):
        y = tr.gpd_quantile(q, p)
        assert tr.gpd_cdf(y, p) == pytest.approx(q, abs=1e-12)
    assert tr.gpd_cdf(25.0, p) + tr.gpd_sf(25.0, p) == pytest.approx(1.0, abs=1e-15)


def test_domain_errors_map_to_python():
    p = tr.GpdParams(mu=10.0, sigma=1.0, xi=0.1)
    with pytest.raises(ValueError):
        tr.gpd_cdf(5.0, p)  # below the threshold
    with pytest.raises(tr.DataError):
        tr.parse_catalog("", tr.CatalogFormat.SingleColumn)


def test_synthetic_fit_recovers_parameters():
    rng = tr.SplitMix64(2024)
    tail = sorted(tr.gpd_sample(20000, tr.GpdParams(10.0, 9.47, 0.56), rng))
    fit = tr.fit_gpd(tail, 10.0)
    assert fit.converged
    assert fit.params.xi == pytest.approx(0.56, abs=0.05)
    assert fit.params.sigma == pytest.approx(9.47, rel=0.05)
    assert fit.n_tail == 20000


def test_bootstrap_deterministic_and_matches_seeded_rerun():
    rng = tr.SplitMix64(7)
    values = [rng.next_u01() * 50.0 for _ in range(500)]
    est = lambda xs: sum(xs) / len(xs)
    a = tr.bootstrap_estimate(values, est, 200, 0.90, seed=42)
    b = tr.bootstrap_estimate(values, est, 200, 0.90, seed=42)
    assert (a.interval.lo, a.interval.hi) == (b.interval.lo, b.interval.hi)
    assert a.point == pytest.approx(sum(values) / len(values))
    assert a.interval.lo < a.point < a.interval.hi
    c = tr.bootstrap_estimate(values, est, 200, 0.90, seed=43)
    assert (a.interval.lo, a.interval.hi) != (c.interval.lo, c.interval.hi)


def test_catalog_parse_exclude_tail_count():
    text = "12\n2749\tspike\n30\n7\n"
    cat = tr.parse_catalog(text, tr.CatalogFormat.TwoColumn, "inline")
    assert len(cat) == 4
    res = tr.exclude(cat, tr.ExclusionRule.by_tag("spike"))
    assert res.matched and res.removed == 1
    tc = tr.tail_count(res.catalog, 10.0)
    assert tc.count == 2
    assert tc.fraction == pytest.approx(2.0 / 3.0)
    assert tr.exceedances(res.catalog, 10.0) == [12.0, 30.0]


def test_run_fit_report_shape():
    rng = tr.SplitMix64(99)
    values = tr.gpd_sample(3000, tr.GpdParams(0.0, 5.0, 0.4), rng)
    cfg = tr.FitConfig()
    cfg.mu = 10.0
    cfg.event_size = 400.0
    cfg.replicates = 50
    cfg.seed = 11
    report = tr.run_fit(values, cfg)
    assert report.fit.converged
    assert report.n_events == 3000
    assert 0.0 < report.prob_event < 1.0
    assert report.xi_ci.lo <= report.fit.params.xi <= report.xi_ci.hi
    assert not math.isnan(report.reduction_ci.lo)


def test_event_probability_and_zeta():
    p = tr.GpdParams(10.0, 9.47, 0.56)
    prob = tr.event_probability(2749.0, 13274, 0.9357390387223143, p)
    assert prob == pytest.approx(0.0912342499880512, rel=1e-10)
    assert tr.hurwitz_zeta(2.0, 1.0) == pytest.approx(math.pi**2 / 6.0, abs=1e-10)
