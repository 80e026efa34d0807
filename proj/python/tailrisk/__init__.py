"""Peaks-over-threshold tail fitting for event-severity catalogs.

Thin wrapper over the compiled core; everything numeric lives in C++ and
is shared with the ``tailrisk`` command-line tool, so equal seeds give
bit-identical results across both interfaces.
"""

from ._core import (
    BootstrapMultiSummary,
    BootstrapSummary,
    CatalogFormat,
    DataError,
    DiscretePowerLawParams,
    DplSweepRow,
    EventRecord,
    ExcludeResult,
    ExclusionRule,
    FitConfig,
    FitReport,
    GpdFit,
    GpdParams,
    Interval,
    MrlCurve,
    NumericError,
    PowerLawFit,
    QqPoint,
    SeverityCatalog,
    SplitMix64,
    SweepConfig,
    SweepRow,
    TailCount,
    bootstrap_estimate,
    bootstrap_estimate_multi,
    default_mrl_grid,
    default_sweep_grid,
    derive_seed,
    dpl_cdf,
    dpl_cdf_table,
    dpl_pmf,
    dpl_sf_inclusive,
    dpl_threshold_sweep,
    event_probability,
    event_probability_from_survival,
    exceedances,
    exclude,
    fit_dpl,
    fit_dpl_alpha,
    fit_gpd,
    gpd_cdf,
    gpd_logpdf,
    gpd_negloglik,
    gpd_quantile,
    gpd_sample,
    gpd_sf,
    gpd_support_upper,
    hurwitz_zeta,
    ks_statistic,
    load_catalog,
    mrl_curve,
    parse_catalog,
    pareto_cdf,
    per_event_cdf,
    per_event_sf,
    percentile_interval,
    powerlaw_reduction_stat,
    qq_points,
    resample,
    run_fit,
    select_xmin_ks,
    serialize_catalog,
    tail_count,
    threshold_sweep,
    with_jitter,
)

__all__ = [name for name in dir() if not name.startswith("_")]
