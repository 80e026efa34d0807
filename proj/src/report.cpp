#include "tailrisk/report.hpp"

#include <charconv>
#include <fstream>
#include <limits>

#include "tailrisk/errors.hpp"

namespace tailrisk {

namespace {

// a {value, lo, hi} triple; lo/hi become null when the bootstrap was off
ordered_json bracketed(double value, const Interval& ci) {
  ordered_json j;
  j["value"] = value;
  j["lo"] = ci.lo;
  j["hi"] = ci.hi;
  return j;
}

void append_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += '\t';
    out += cells[i];
  }
  out += '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string sweep_tsv(const std::vector<SweepRow>& rows) {
  std::string out =
      "mu\tn_tail\ttail_fraction\tconverged\txi\tsigma\tlog_lik\tks\treduction\t"
      "prob_event\txi_lo\txi_hi\tsigma_lo\tsigma_hi\treduction_lo\treduction_hi\t"
      "prob_lo\tprob_hi\tn_boot_failed\n";
  for (const SweepRow& r : rows) {
    append_row(out, {format_double(r.mu), std::to_string(r.fit.n_tail),
                     format_double(r.tail_fraction), r.fit.converged ? "1" : "0",
                     format_double(r.fit.params.xi), format_double(r.fit.params.sigma),
                     format_double(r.fit.converged
                                       ? r.fit.log_likelihood
                                       : std::numeric_limits<double>::quiet_NaN()),
                     format_double(r.ks), format_double(r.reduction_stat),
                     format_double(r.prob_event), format_double(r.xi_ci.lo),
                     format_double(r.xi_ci.hi), format_double(r.sigma_ci.lo),
                     format_double(r.sigma_ci.hi), format_double(r.reduction_ci.lo),
                     format_double(r.reduction_ci.hi), format_double(r.prob_ci.lo),
                     format_double(r.prob_ci.hi), std::to_string(r.n_boot_failed)});
  }
  return out;
}

std::string dpl_sweep_tsv(const std::vector<DplSweepRow>& rows) {
  std::string out = "xmin\tn_tail\ttail_fraction\talpha\tks\tprob_event\n";
  for (const DplSweepRow& r : rows) {
    append_row(out, {std::to_string(r.xmin), std::to_string(r.n_tail),
                     format_double(r.tail_fraction), format_double(r.alpha),
                     format_double(r.ks), format_double(r.prob_event)});
  }
  return out;
}

std::string mrl_tsv(const MrlCurve& curve) {
  std::string out = "threshold\tmean_excess\tlo\thi\tn_exceed\n";
  for (std::size_t i = 0; i < curve.thresholds.size(); ++i) {
    append_row(out, {format_double(curve.thresholds[i]),
                     format_double(curve.mean_excess[i]),
                     format_double(curve.mean_excess[i] - curve.ci_half_width[i]),
                     format_double(curve.mean_excess[i] + curve.ci_half_width[i]),
                     std::to_string(curve.n_exceed[i])});
  }
  return out;
}

std::string qq_tsv(const std::vector<QqPoint>& points) {
  std::string out = "model_q\tempirical_q\n";
  for (const QqPoint& p : points)
    append_row(out, {format_double(p.model), format_double(p.empirical)});
  return out;
}

ordered_json fit_report_to_json(const FitReport& report) {
  ordered_json j;
  j["mu"] = report.mu;
  j["event_size"] = report.event_size;
  j["n_events"] = report.n_events;
  j["n_used_for_prob"] = report.n_used_for_prob;
  j["converged"] = report.fit.converged;
  j["log_likelihood"] = report.fit.log_likelihood;
  j["optimizer_iterations"] = report.fit.optimizer_iterations;
  j["ks"] = report.ks;
  j["n_tail"] = bracketed(static_cast<double>(report.n_tail), report.n_tail_ci);
  j["tail_fraction"] = bracketed(report.tail_fraction, report.tail_fraction_ci);
  j["xi"] = bracketed(report.fit.params.xi, report.xi_ci);
  j["sigma"] = bracketed(report.fit.params.sigma, report.sigma_ci);
  j["reduction"] = bracketed(report.reduction, report.reduction_ci);
  j["prob_event"] = bracketed(report.prob_event, report.prob_ci);
  ordered_json boot;
  boot["replicates"] = report.replicates;
  boot["level"] = report.level;
  boot["seed"] = report.seed;
  boot["n_failed"] = report.n_boot_failed;
  j["bootstrap"] = report.replicates > 0 ? boot : ordered_json(nullptr);
  return j;
}

ordered_json sweep_rows_to_json(const std::vector<SweepRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const SweepRow& r : rows) {
    ordered_json j;
    j["mu"] = r.mu;
    j["n_tail"] = r.fit.n_tail;
    j["tail_fraction"] = r.tail_fraction;
    j["converged"] = r.fit.converged;
    j["log_likelihood"] =
        r.fit.converged ? ordered_json(r.fit.log_likelihood) : ordered_json(nullptr);
    j["ks"] = r.ks;
    j["xi"] = bracketed(r.fit.params.xi, r.xi_ci);
    j["sigma"] = bracketed(r.fit.params.sigma, r.sigma_ci);
    j["reduction"] = bracketed(r.reduction_stat, r.reduction_ci);
    j["prob_event"] = bracketed(r.prob_event, r.prob_ci);
    j["n_boot_failed"] = r.n_boot_failed;
    out.push_back(std::move(j));
  }
  return out;
}

ordered_json dpl_rows_to_json(const std::vector<DplSweepRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const DplSweepRow& r : rows) {
    ordered_json j;
    j["xmin"] = r.xmin;
    j["n_tail"] = r.n_tail;
    j["tail_fraction"] = r.tail_fraction;
    j["alpha"] = r.alpha;
    j["ks"] = r.ks;
    j["prob_event"] = r.prob_event;
    out.push_back(std::move(j));
  }
  return out;
}

ordered_json mrl_to_json(const MrlCurve& curve) {
  ordered_json j;
  j["n_dropped"] = curve.n_dropped;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < curve.thresholds.size(); ++i) {
    ordered_json row;
    row["threshold"] = curve.thresholds[i];
    row["mean_excess"] = curve.mean_excess[i];
    row["lo"] = curve.mean_excess[i] - curve.ci_half_width[i];
    row["hi"] = curve.mean_excess[i] + curve.ci_half_width[i];
    row["n_exceed"] = curve.n_exceed[i];
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

ordered_json qq_to_json(const std::vector<QqPoint>& points, const GpdFit& fit) {
  ordered_json j;
  j["mu"] = fit.params.mu;
  j["xi"] = fit.params.xi;
  j["sigma"] = fit.params.sigma;
  j["n_tail"] = fit.n_tail;
  ordered_json rows = ordered_json::array();
  for (const QqPoint& p : points) {
    ordered_json row;
    row["model_q"] = p.model;
    row["empirical_q"] = p.empirical;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("output: cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw DataError("output: failed writing " + path);
}

}  // namespace tailrisk
