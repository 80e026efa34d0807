// pybind11 bindings. The python layer is a thin veneer: every numeric
// result is produced by the same C++ code the CLI uses, so seeds give
// identical output across both interfaces.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "tailrisk/bootstrap.hpp"
#include "tailrisk/catalog.hpp"
#include "tailrisk/diagnostics.hpp"
#include "tailrisk/discrete_powerlaw.hpp"
#include "tailrisk/errors.hpp"
#include "tailrisk/gpd.hpp"
#include "tailrisk/gpd_fit.hpp"
#include "tailrisk/powerlaw_fit.hpp"
#include "tailrisk/rare_event.hpp"
#include "tailrisk/rng.hpp"
#include "tailrisk/run.hpp"

namespace py = pybind11;
using namespace tailrisk;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Peaks-over-threshold tail fitting for event-severity catalogs";

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  // ---- rng ---------------------------------------------------------
  py::class_<SplitMix64>(m, "SplitMix64")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next_u64", &SplitMix64::next_u64)
      .def("next_u01", &SplitMix64::next_u01);
  m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("index"),
        "Seed of the index-th child stream of a master seed.");

  // ---- gpd kernels ---------------------------------------------------
  py::class_<GpdParams>(m, "GpdParams")
      .def(py::init<double, double, double>(), py::arg("mu") = 0.0,
           py::arg("sigma") = 1.0, py::arg("xi") = 0.0)
      .def_readwrite("mu", &GpdParams::mu)
      .def_readwrite("sigma", &GpdParams::sigma)
      .def_readwrite("xi", &GpdParams::xi)
      .def("__repr__", [](const GpdParams& p) {
        return "GpdParams(mu=" + std::to_string(p.mu) +
               ", sigma=" + std::to_string(p.sigma) + ", xi=" + std::to_string(p.xi) + ")";
      });
  m.def("gpd_cdf", &gpd_cdf, py::arg("y"), py::arg("params"));
  m.def("gpd_sf", &gpd_sf, py::arg("y"), py::arg("params"));
  m.def("gpd_logpdf", &gpd_logpdf, py::arg("y"), py::arg("params"));
  m.def("gpd_quantile", &gpd_quantile, py::arg("q"), py::arg("params"));
  m.def("gpd_support_upper", &gpd_support_upper, py::arg("params"));
  m.def("gpd_sample", &gpd_sample, py::arg("count"), py::arg("params"), py::arg("rng"),
        "Inverse-CDF draws; advances the generator.");
  m.def("pareto_cdf", &pareto_cdf, py::arg("y"), py::arg("mu"), py::arg("xi"));

  // ---- gpd fitting ---------------------------------------------------
  py::class_<GpdFit>(m, "GpdFit")
      .def(py::init<>())
      .def_readwrite("params", &GpdFit::params)
      .def_readwrite("n_tail", &GpdFit::n_tail)
      .def_readwrite("log_likelihood", &GpdFit::log_likelihood)
      .def_readwrite("converged", &GpdFit::converged)
      .def_readwrite("optimizer_iterations", &GpdFit::optimizer_iterations);
  m.def(
      "fit_gpd",
      [](const std::vector<double>& tail, double mu) {
        py::gil_scoped_release release;
        return fit_gpd(tail, mu);
      },
      py::arg("exceedances_sorted"), py::arg("mu"),
      "Maximum-likelihood (sigma, xi) for the tail above a fixed mu.");
  m.def("powerlaw_reduction_stat", &powerlaw_reduction_stat, py::arg("fit"));
  m.def("gpd_negloglik", &gpd_negloglik, py::arg("log_sigma"), py::arg("xi"),
        py::arg("exceedances"), py::arg("mu"));

  // ---- discrete power law ---------------------------------------------
  py::class_<DiscretePowerLawParams>(m, "DiscretePowerLawParams")
      .def(py::init<double, std::int64_t>(), py::arg("alpha") = 2.0, py::arg("xmin") = 1)
      .def_readwrite("alpha", &DiscretePowerLawParams::alpha)
      .def_readwrite("xmin", &DiscretePowerLawParams::xmin);
  m.def("hurwitz_zeta", &hurwitz_zeta, py::arg("s"), py::arg("a"));
  m.def("dpl_pmf", &dpl_pmf, py::arg("x"), py::arg("params"));
  m.def("dpl_cdf", &dpl_cdf, py::arg("x"), py::arg("params"));
  m.def("dpl_sf_inclusive", &dpl_sf_inclusive, py::arg("x"), py::arg("params"));
  m.def("dpl_cdf_table", &dpl_cdf_table, py::arg("params"), py::arg("x_max"));

  py::class_<PowerLawFit>(m, "PowerLawFit")
      .def(py::init<>())
      .def_readwrite("params", &PowerLawFit::params)
      .def_readwrite("n_tail", &PowerLawFit::n_tail)
      .def_readwrite("ks_statistic", &PowerLawFit::ks_statistic);
  m.def(
      "fit_dpl",
      [](const std::vector<double>& severities, double xmin) {
        py::gil_scoped_release release;
        return fit_dpl(severities, xmin);
      },
      py::arg("severities"), py::arg("xmin"));
  m.def("fit_dpl_alpha", &fit_dpl_alpha, py::arg("tail_sorted"), py::arg("xmin"));
  m.def(
      "select_xmin_ks",
      [](const std::vector<double>& severities, const std::vector<double>& candidates) {
        py::gil_scoped_release release;
        return select_xmin_ks(severities, candidates);
      },
      py::arg("severities"), py::arg("candidates"));
  m.def("ks_statistic", &ks_statistic, py::arg("tail_sorted"), py::arg("cdf"),
        "KS distance against an arbitrary CDF callable.");

  // ---- rare events ----------------------------------------------------
  m.def("per_event_cdf", &per_event_cdf, py::arg("y"), py::arg("p_hat"), py::arg("params"));
  m.def("per_event_sf", &per_event_sf, py::arg("y"), py::arg("p_hat"), py::arg("params"));
  m.def("event_probability_from_survival", &event_probability_from_survival,
        py::arg("s"), py::arg("n"));
  m.def(
      "event_probability",
      [](double y, std::size_t n, double p_hat, const GpdParams& params) {
        return event_probability(EventProbabilityInput{y, n, p_hat, params});
      },
      py::arg("y"), py::arg("n"), py::arg("p_hat"), py::arg("params"),
      "P(at least one of n future events exceeds y).");

  // ---- bootstrap --------------------------------------------------------
  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("lo") = 0.0, py::arg("hi") = 0.0)
      .def_readwrite("lo", &Interval::lo)
      .def_readwrite("hi", &Interval::hi)
      .def("__repr__", [](const Interval& i) {
        return "Interval(lo=" + std::to_string(i.lo) + ", hi=" + std::to_string(i.hi) + ")";
      });
  py::class_<BootstrapSummary>(m, "BootstrapSummary")
      .def_readonly("point", &BootstrapSummary::point)
      .def_readonly("replicates", &BootstrapSummary::replicates)
      .def_readonly("level", &BootstrapSummary::level)
      .def_readonly("interval", &BootstrapSummary::interval)
      .def_readonly("n_failed", &BootstrapSummary::n_failed);
  py::class_<BootstrapMultiSummary>(m, "BootstrapMultiSummary")
      .def_readonly("point", &BootstrapMultiSummary::point)
      .def_readonly("replicates", &BootstrapMultiSummary::replicates)
      .def_readonly("level", &BootstrapMultiSummary::level)
      .def_readonly("intervals", &BootstrapMultiSummary::intervals)
      .def_readonly("n_failed", &BootstrapMultiSummary::n_failed);
  m.def("percentile_interval", &percentile_interval, py::arg("values"), py::arg("level"));
  // python estimators run under the GIL, so parallel jobs would serialize
  // anyway; pin jobs=1 and keep the replicate stream identical to C++.
  m.def(
      "bootstrap_estimate",
      [](const std::vector<double>& values, const Estimator& estimator,
         std::size_t n_replicates, double level, std::uint64_t seed) {
        return bootstrap_estimate(values, estimator, n_replicates, level, seed, 1);
      },
      py::arg("values"), py::arg("estimator"), py::arg("n_replicates"),
      py::arg("level"), py::arg("seed"));
  m.def(
      "bootstrap_estimate_multi",
      [](const std::vector<double>& values, const MultiEstimator& estimator,
         std::size_t n_replicates, double level, std::uint64_t seed) {
        return bootstrap_estimate_multi(values, estimator, n_replicates, level, seed, 1);
      },
      py::arg("values"), py::arg("estimator"), py::arg("n_replicates"),
      py::arg("level"), py::arg("seed"));
  m.def("resample", &resample, py::arg("values"), py::arg("rng"));

  // ---- diagnostics -----------------------------------------------------
  py::class_<MrlCurve>(m, "MrlCurve")
      .def_readonly("thresholds", &MrlCurve::thresholds)
      .def_readonly("mean_excess", &MrlCurve::mean_excess)
      .def_readonly("ci_half_width", &MrlCurve::ci_half_width)
      .def_readonly("n_exceed", &MrlCurve::n_exceed)
      .def_readonly("n_dropped", &MrlCurve::n_dropped);
  m.def("mrl_curve", &mrl_curve, py::arg("severities"), py::arg("grid"));

  py::class_<QqPoint>(m, "QqPoint")
      .def_readonly("model", &QqPoint::model)
      .def_readonly("empirical", &QqPoint::empirical);
  m.def("qq_points", &qq_points, py::arg("tail_sorted"), py::arg("fit"));

  py::class_<SweepConfig>(m, "SweepConfig")
      .def(py::init<>())
      .def_readwrite("event_size", &SweepConfig::event_size)
      .def_readwrite("replicates", &SweepConfig::replicates)
      .def_readwrite("seed", &SweepConfig::seed)
      .def_readwrite("level", &SweepConfig::level)
      .def_readwrite("jobs", &SweepConfig::jobs)
      .def_readwrite("n_override", &SweepConfig::n_override);
  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("mu", &SweepRow::mu)
      .def_readonly("fit", &SweepRow::fit)
      .def_readonly("tail_fraction", &SweepRow::tail_fraction)
      .def_readonly("reduction_stat", &SweepRow::reduction_stat)
      .def_readonly("ks", &SweepRow::ks)
      .def_readonly("prob_event", &SweepRow::prob_event)
      .def_readonly("xi_ci", &SweepRow::xi_ci)
      .def_readonly("sigma_ci", &SweepRow::sigma_ci)
      .def_readonly("reduction_ci", &SweepRow::reduction_ci)
      .def_readonly("prob_ci", &SweepRow::prob_ci)
      .def_readonly("n_boot_failed", &SweepRow::n_boot_failed);
  m.def(
      "threshold_sweep",
      [](const std::vector<double>& severities, const std::vector<double>& grid,
         const SweepConfig& config) {
        py::gil_scoped_release release;
        return threshold_sweep(severities, grid, config);
      },
      py::arg("severities"), py::arg("grid"), py::arg("config"));

  py::class_<DplSweepRow>(m, "DplSweepRow")
      .def_readonly("xmin", &DplSweepRow::xmin)
      .def_readonly("alpha", &DplSweepRow::alpha)
      .def_readonly("n_tail", &DplSweepRow::n_tail)
      .def_readonly("tail_fraction", &DplSweepRow::tail_fraction)
      .def_readonly("ks", &DplSweepRow::ks)
      .def_readonly("prob_event", &DplSweepRow::prob_event);
  m.def(
      "dpl_threshold_sweep",
      [](const std::vector<double>& severities, const std::vector<double>& grid,
         double event_size, std::size_t n_override) {
        py::gil_scoped_release release;
        return dpl_threshold_sweep(severities, grid, event_size, n_override);
      },
      py::arg("severities"), py::arg("grid"), py::arg("event_size"),
      py::arg("n_override") = 0);

  // ---- headline report ---------------------------------------------------
  py::class_<FitConfig>(m, "FitConfig")
      .def(py::init<>())
      .def_readwrite("mu", &FitConfig::mu)
      .def_readwrite("event_size", &FitConfig::event_size)
      .def_readwrite("n_override", &FitConfig::n_override)
      .def_readwrite("replicates", &FitConfig::replicates)
      .def_readwrite("level", &FitConfig::level)
      .def_readwrite("seed", &FitConfig::seed)
      .def_readwrite("jobs", &FitConfig::jobs);
  py::class_<FitReport>(m, "FitReport")
      .def_readonly("mu", &FitReport::mu)
      .def_readonly("event_size", &FitReport::event_size)
      .def_readonly("n_events", &FitReport::n_events)
      .def_readonly("n_used_for_prob", &FitReport::n_used_for_prob)
      .def_readonly("n_tail", &FitReport::n_tail)
      .def_readonly("tail_fraction", &FitReport::tail_fraction)
      .def_readonly("fit", &FitReport::fit)
      .def_readonly("reduction", &FitReport::reduction)
      .def_readonly("ks", &FitReport::ks)
      .def_readonly("prob_event", &FitReport::prob_event)
      .def_readonly("replicates", &FitReport::replicates)
      .def_readonly("level", &FitReport::level)
      .def_readonly("seed", &FitReport::seed)
      .def_readonly("n_tail_ci", &FitReport::n_tail_ci)
      .def_readonly("tail_fraction_ci", &FitReport::tail_fraction_ci)
      .def_readonly("xi_ci", &FitReport::xi_ci)
      .def_readonly("sigma_ci", &FitReport::sigma_ci)
      .def_readonly("reduction_ci", &FitReport::reduction_ci)
      .def_readonly("prob_ci", &FitReport::prob_ci)
      .def_readonly("n_boot_failed", &FitReport::n_boot_failed);
  m.def(
      "run_fit",
      [](const std::vector<double>& severities, const FitConfig& config) {
        py::gil_scoped_release release;
        return run_fit(severities, config);
      },
      py::arg("severities"), py::arg("config"),
      "Tail fit plus event probability and joint bootstrap intervals.");
  m.def("default_sweep_grid", &default_sweep_grid);
  m.def("default_mrl_grid", &default_mrl_grid, py::arg("severities"));

  // ---- catalogs -----------------------------------------------------------
  py::enum_<CatalogFormat>(m, "CatalogFormat")
      .value("SingleColumn", CatalogFormat::SingleColumn)
      .value("TwoColumn", CatalogFormat::TwoColumn);
  py::class_<EventRecord>(m, "EventRecord")
      .def(py::init([](double severity, std::optional<std::string> tag) {
             return EventRecord{severity, std::move(tag)};
           }),
           py::arg("severity"), py::arg("tag") = std::nullopt)
      .def_readwrite("severity", &EventRecord::severity)
      .def_readwrite("tag", &EventRecord::tag);
  py::class_<SeverityCatalog>(m, "SeverityCatalog")
      .def(py::init<>())
      .def_readwrite("events", &SeverityCatalog::events)
      .def_readwrite("source", &SeverityCatalog::source)
      .def("n", &SeverityCatalog::n)
      .def("__len__", &SeverityCatalog::n);
  m.def("parse_catalog", &parse_catalog, py::arg("text"), py::arg("format"),
        py::arg("source_name") = std::string{});
  m.def("load_catalog", &load_catalog, py::arg("path"), py::arg("format"));
  m.def("serialize_catalog", &serialize_catalog, py::arg("catalog"), py::arg("format"));

  py::class_<ExclusionRule>(m, "ExclusionRule")
      .def_static("by_tag", &ExclusionRule::by_tag, py::arg("tag"))
      .def_static("by_severity", &ExclusionRule::by_severity, py::arg("severity"),
                  py::arg("multiplicity") = std::nullopt);
  py::class_<ExcludeResult>(m, "ExcludeResult")
      .def_readonly("catalog", &ExcludeResult::catalog)
      .def_readonly("removed", &ExcludeResult::removed)
      .def_readonly("matched", &ExcludeResult::matched);
  m.def("exclude", &exclude, py::arg("catalog"), py::arg("rule"));

  py::class_<TailCount>(m, "TailCount")
      .def_readonly("count", &TailCount::count)
      .def_readonly("fraction", &TailCount::fraction);
  m.def("tail_count", &tail_count, py::arg("catalog"), py::arg("threshold"));
  m.def("exceedances", &exceedances, py::arg("catalog"), py::arg("threshold"));
  m.def("with_jitter", &with_jitter, py::arg("catalog"), py::arg("seed"));
}
