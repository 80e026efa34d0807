// Command-line front end: fit / mrl / sweep / qq over severity catalogs.
//
// Exit codes: 0 success, 2 data error, 3 numeric failure, 64 usage error.
// All randomness flows from one seed (--seed flag, else POT_TAILRISK_SEED,
// else a warned time-based fallback unless --strict).

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tailrisk/catalog.hpp"
#include "tailrisk/diagnostics.hpp"
#include "tailrisk/errors.hpp"
#include "tailrisk/report.hpp"
#include "tailrisk/rng.hpp"
#include "tailrisk/run.hpp"
#include "tailrisk/svg.hpp"

namespace {

using tailrisk::ordered_json;

// problems with flag values that CLI11 cannot catch on its own
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// purpose tag separating the jitter stream from bootstrap replicate seeds
constexpr std::uint64_t kJitterPurpose = 0x4A495454;  // "JITT"

struct Options {
  std::string input;
  std::string format = "col2";
  std::string exclude_tag = "9/11";
  std::vector<double> exclude_severities;
  std::uint64_t exclude_multiplicity = 0;
  double mu = 10.0;
  std::string grid;
  double event_size = 2749.0;
  std::uint64_t n_override = 0;
  std::uint64_t replicates = 2000;
  double level = 0.90;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out = "out";
  std::string emit = "json,tsv";
  std::string model = "gpd";
  bool jitter = false;
  bool strict = false;

  // the parsed subcommand, to tell defaults from user-set values; every
  // subcommand binds its options to the same fields, so only the active
  // one's counts are meaningful
  CLI::App* active = nullptr;

  bool given(const std::string& flag) const { return active->count(flag) > 0; }
};

struct Emit {
  bool json = false;
  bool tsv = false;
  bool svg = false;
};

Emit parse_emit(const std::string& spec) {
  Emit emit;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    const std::string item = spec.substr(pos, comma - pos);
    if (item == "json")
      emit.json = true;
    else if (item == "tsv")
      emit.tsv = true;
    else if (item == "svg")
      emit.svg = true;
    else
      throw UsageError("unknown --emit item '" + item + "' (expected json, tsv, svg)");
    pos = comma + 1;
  }
  return emit;
}

std::vector<double> parse_grid(const std::string& spec) {
  const std::size_t c1 = spec.find(':');
  const std::size_t c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
  if (c2 == std::string::npos || spec.find(':', c2 + 1) != std::string::npos)
    throw UsageError("--grid expects LO:HI:STEP, got '" + spec + "'");
  double lo = 0.0, hi = 0.0, step = 0.0;
  try {
    lo = std::stod(spec.substr(0, c1));
    hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    step = std::stod(spec.substr(c2 + 1));
  } catch (const std::exception&) {
    throw UsageError("--grid expects numeric LO:HI:STEP, got '" + spec + "'");
  }
  if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi))
    throw UsageError("--grid needs HI >= LO and STEP > 0");
  if ((hi - lo) / step > 1e6) throw UsageError("--grid has more than 1e6 points");
  std::vector<double> grid;
  for (double u = lo; u <= hi + 1e-9 * step; u += step) grid.push_back(u);
  return grid;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end)
    throw UsageError(what + " is not a valid unsigned integer: '" + text + "'");
  return value;
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.given("--seed")) return o.seed;
  if (const char* env = std::getenv("POT_TAILRISK_SEED"))
    return parse_u64(env, "POT_TAILRISK_SEED");
  if (o.strict) throw UsageError("--seed (or POT_TAILRISK_SEED) is required with --strict");
  const auto ticks = std::chrono::system_clock::now().time_since_epoch().count();
  const std::uint64_t seed = tailrisk::mix64(static_cast<std::uint64_t>(ticks));
  std::cerr << "tailrisk: warning: no --seed given; using time-based seed " << seed
            << " (outputs are not reproducible)\n";
  return seed;
}

std::vector<tailrisk::ExclusionRule> resolve_exclusions(const Options& o) {
  using tailrisk::ExclusionRule;
  const bool tag_set = o.given("--exclude-tag");
  const bool severity_set = o.given("--exclude-severity");
  if (o.given("--exclude-multiplicity") && !severity_set)
    throw UsageError("--exclude-multiplicity needs --exclude-severity");

  std::vector<ExclusionRule> rules;
  if (!tag_set && !severity_set) {
    rules.push_back(ExclusionRule::by_tag(o.exclude_tag));  // default "9/11"
    return rules;
  }
  if (tag_set && !o.exclude_tag.empty()) rules.push_back(ExclusionRule::by_tag(o.exclude_tag));
  std::optional<std::size_t> multiplicity;
  if (o.given("--exclude-multiplicity"))
    multiplicity = static_cast<std::size_t>(o.exclude_multiplicity);
  for (double v : o.exclude_severities)
    rules.push_back(ExclusionRule::by_severity(v, multiplicity));
  return rules;
}

ordered_json exclusions_to_json(const std::vector<tailrisk::ExclusionRule>& rules) {
  ordered_json arr = ordered_json::array();
  for (const auto& rule : rules) {
    ordered_json j;
    if (rule.kind == tailrisk::ExclusionRule::Kind::Tag) {
      j["kind"] = "tag";
      j["tag"] = rule.tag;
    } else {
      j["kind"] = "severity";
      j["severity"] = rule.severity;
      if (rule.multiplicity) j["multiplicity"] = *rule.multiplicity;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

// the resolved configuration echoed into config.json and report.json
ordered_json config_to_json(const std::string& command, const Options& o,
                            const std::vector<tailrisk::ExclusionRule>& rules,
                            const std::vector<double>* grid, std::uint64_t seed) {
  ordered_json j;
  j["command"] = command;
  j["input"] = o.input;
  j["format"] = o.format;
  j["exclusions"] = exclusions_to_json(rules);
  if (command == "fit" || command == "qq") j["mu"] = o.mu;
  if (grid) j["grid"] = *grid;
  if (command == "fit" || command == "sweep") {
    j["event_size"] = o.event_size;
    j["n_override"] = o.n_override;
    j["replicates"] = o.replicates;
    j["level"] = o.level;
    j["jobs"] = o.jobs;
  }
  if (command == "sweep") j["model"] = o.model;
  j["seed"] = seed;
  j["out"] = o.out;
  j["emit"] = o.emit;
  j["jitter"] = o.jitter;
  j["strict"] = o.strict;
  return j;
}

std::vector<double> severity_values(const tailrisk::SeverityCatalog& catalog) {
  std::vector<double> values;
  values.reserve(catalog.n());
  for (const auto& e : catalog.events) values.push_back(e.severity);
  return values;
}

// parse -> exclude -> jitter, with warnings for rules that match nothing
tailrisk::SeverityCatalog prepare_catalog(const Options& o,
                                          const std::vector<tailrisk::ExclusionRule>& rules,
                                          std::uint64_t seed) {
  const auto format = o.format == "col1" ? tailrisk::CatalogFormat::SingleColumn
                                         : tailrisk::CatalogFormat::TwoColumn;
  tailrisk::SeverityCatalog catalog = tailrisk::load_catalog(o.input, format);
  for (const auto& rule : rules) {
    tailrisk::ExcludeResult result = tailrisk::exclude(catalog, rule);
    if (!result.matched) {
      if (rule.kind == tailrisk::ExclusionRule::Kind::Tag)
        std::cerr << "tailrisk: warning: exclusion tag '" << rule.tag
                  << "' matched no events\n";
      else
        std::cerr << "tailrisk: warning: exclusion severity "
                  << tailrisk::format_double(rule.severity) << " matched no events\n";
    }
    catalog = std::move(result.catalog);
  }
  if (o.jitter)
    catalog = tailrisk::with_jitter(catalog, tailrisk::derive_seed(seed, kJitterPurpose));
  return catalog;
}

void write_outputs(const std::filesystem::path& out_dir, const ordered_json& config,
                   const ordered_json& report, bool emit_json) {
  std::filesystem::create_directories(out_dir);
  tailrisk::write_text_file((out_dir / "config.json").string(), config.dump(2) + "\n");
  if (emit_json)
    tailrisk::write_text_file((out_dir / "report.json").string(), report.dump(2) + "\n");
}

int cmd_fit(const Options& o) {
  const std::uint64_t seed = resolve_seed(o);
  const auto rules = resolve_exclusions(o);
  const Emit emit = parse_emit(o.emit);
  const auto catalog = prepare_catalog(o, rules, seed);

  tailrisk::FitConfig config;
  config.mu = o.mu;
  config.event_size = o.event_size;
  config.n_override = o.n_override;
  config.replicates = o.replicates;
  config.level = o.level;
  config.seed = seed;
  config.jobs = o.jobs;
  const tailrisk::FitReport report = tailrisk::run_fit(severity_values(catalog), config);

  const ordered_json cfg = config_to_json("fit", o, rules, nullptr, seed);
  ordered_json doc;
  doc["command"] = "fit";
  doc["config"] = cfg;
  doc["result"] = tailrisk::fit_report_to_json(report);
  write_outputs(o.out, cfg, doc, emit.json);
  return 0;
}

int cmd_mrl(const Options& o) {
  const std::uint64_t seed = resolve_seed(o);
  const auto rules = resolve_exclusions(o);
  const Emit emit = parse_emit(o.emit);
  const auto catalog = prepare_catalog(o, rules, seed);
  const std::vector<double> values = severity_values(catalog);

  const std::vector<double> grid =
      o.given("--grid") ? parse_grid(o.grid) : tailrisk::default_mrl_grid(values);
  const tailrisk::MrlCurve curve = tailrisk::mrl_curve(values, grid);

  const ordered_json cfg = config_to_json("mrl", o, rules, &grid, seed);
  ordered_json doc;
  doc["command"] = "mrl";
  doc["config"] = cfg;
  doc["result"] = tailrisk::mrl_to_json(curve);
  write_outputs(o.out, cfg, doc, emit.json);

  const std::filesystem::path out_dir(o.out);
  if (emit.tsv)
    tailrisk::write_text_file((out_dir / "mrl.tsv").string(), tailrisk::mrl_tsv(curve));
  if (emit.svg) {
    tailrisk::svg::Figure fig;
    fig.title = "Mean residual life";
    fig.x_label = "threshold u";
    fig.y_label = "mean excess";
    tailrisk::svg::Band band;
    band.x = curve.thresholds;
    for (std::size_t i = 0; i < curve.thresholds.size(); ++i) {
      band.lo.push_back(curve.mean_excess[i] - curve.ci_half_width[i]);
      band.hi.push_back(curve.mean_excess[i] + curve.ci_half_width[i]);
    }
    fig.bands.push_back(std::move(band));
    tailrisk::svg::Series line;
    line.x = curve.thresholds;
    line.y = curve.mean_excess;
    fig.series.push_back(std::move(line));
    tailrisk::svg::write_svg((out_dir / "mrl.svg").string(), fig);
  }
  return 0;
}

int cmd_qq(const Options& o) {
  const std::uint64_t seed = resolve_seed(o);
  const auto rules = resolve_exclusions(o);
  const Emit emit = parse_emit(o.emit);
  const auto catalog = prepare_catalog(o, rules, seed);

  const std::vector<double> tail = tailrisk::exceedances(catalog, o.mu);
  const tailrisk::GpdFit fit = tailrisk::fit_gpd(tail, o.mu);
  const std::vector<tailrisk::QqPoint> points = tailrisk::qq_points(tail, fit);

  const ordered_json cfg = config_to_json("qq", o, rules, nullptr, seed);
  ordered_json doc;
  doc["command"] = "qq";
  doc["config"] = cfg;
  doc["result"] = tailrisk::qq_to_json(points, fit);
  write_outputs(o.out, cfg, doc, emit.json);

  const std::filesystem::path out_dir(o.out);
  if (emit.tsv)
    tailrisk::write_text_file((out_dir / "qq.tsv").string(), tailrisk::qq_tsv(points));
  if (emit.svg) {
    tailrisk::svg::Figure fig;
    fig.title = "GPD quantile-quantile";
    fig.x_label = "model quantile";
    fig.y_label = "empirical quantile";
    const double lo = std::min(points.front().model, points.front().empirical);
    const double hi = std::max(points.back().model, points.back().empirical);
    tailrisk::svg::Series diagonal;
    diagonal.x = {lo, hi};
    diagonal.y = {lo, hi};
    diagonal.color = "#888888";
    diagonal.dashed = true;
    fig.series.push_back(std::move(diagonal));
    tailrisk::svg::Series pts;
    for (const auto& p : points) {
      pts.x.push_back(p.model);
      pts.y.push_back(p.empirical);
    }
    pts.kind = tailrisk::svg::Series::Kind::Points;
    pts.size = 2.0;
    fig.series.push_back(std::move(pts));
    tailrisk::svg::write_svg((out_dir / "qq.svg").string(), fig);
  }
  return 0;
}

void write_sweep_figures(const std::filesystem::path& out_dir,
                         const std::vector<tailrisk::SweepRow>& rows) {
  std::vector<double> mu, xi, xi_lo, xi_hi, prob, prob_lo, prob_hi;
  for (const auto& r : rows) {
    mu.push_back(r.mu);
    xi.push_back(r.fit.converged ? r.fit.params.xi
                                 : std::numeric_limits<double>::quiet_NaN());
    xi_lo.push_back(r.xi_ci.lo);
    xi_hi.push_back(r.xi_ci.hi);
    prob.push_back(r.prob_event);
    prob_lo.push_back(r.prob_ci.lo);
    prob_hi.push_back(r.prob_ci.hi);
  }

  tailrisk::svg::Figure fig_xi;
  fig_xi.title = "GPD shape across thresholds";
  fig_xi.x_label = "threshold mu";
  fig_xi.y_label = "xi";
  fig_xi.bands.push_back(tailrisk::svg::Band{mu, xi_lo, xi_hi, "#1f77b4", 0.25});
  fig_xi.series.push_back(tailrisk::svg::Series{mu, xi});
  tailrisk::svg::write_svg((out_dir / "sweep_xi.svg").string(), fig_xi);

  tailrisk::svg::Figure fig_prob;
  fig_prob.title = "Exceedance probability across thresholds";
  fig_prob.x_label = "threshold mu";
  fig_prob.y_label = "probability";
  fig_prob.bands.push_back(tailrisk::svg::Band{mu, prob_lo, prob_hi, "#d62728", 0.25});
  tailrisk::svg::Series prob_line{mu, prob};
  prob_line.color = "#d62728";
  fig_prob.series.push_back(std::move(prob_line));
  tailrisk::svg::write_svg((out_dir / "sweep_prob.svg").string(), fig_prob);
}

void write_dpl_sweep_figures(const std::filesystem::path& out_dir,
                             const std::vector<tailrisk::DplSweepRow>& rows) {
  std::vector<double> xmin, alpha, prob;
  for (const auto& r : rows) {
    xmin.push_back(static_cast<double>(r.xmin));
    alpha.push_back(r.alpha);
    prob.push_back(r.prob_event);
  }

  tailrisk::svg::Figure fig_alpha;
  fig_alpha.title = "Power-law exponent across xmin";
  fig_alpha.x_label = "xmin";
  fig_alpha.y_label = "alpha";
  fig_alpha.series.push_back(tailrisk::svg::Series{xmin, alpha});
  tailrisk::svg::write_svg((out_dir / "sweep_alpha.svg").string(), fig_alpha);

  tailrisk::svg::Figure fig_prob;
  fig_prob.title = "Exceedance probability across xmin";
  fig_prob.x_label = "xmin";
  fig_prob.y_label = "probability";
  tailrisk::svg::Series prob_line{xmin, prob};
  prob_line.color = "#d62728";
  fig_prob.series.push_back(std::move(prob_line));
  tailrisk::svg::write_svg((out_dir / "sweep_prob.svg").string(), fig_prob);
}

int cmd_sweep(const Options& o) {
  if (o.model == "dpl" && o.jitter)
    throw UsageError("--jitter breaks the integer severities the dpl model needs");
  const std::uint64_t seed = resolve_seed(o);
  const auto rules = resolve_exclusions(o);
  const Emit emit = parse_emit(o.emit);
  const auto catalog = prepare_catalog(o, rules, seed);
  const std::vector<double> values = severity_values(catalog);

  const std::vector<double> grid =
      o.given("--grid") ? parse_grid(o.grid) : tailrisk::default_sweep_grid();
  const ordered_json cfg = config_to_json("sweep", o, rules, &grid, seed);
  const std::size_t n_used = o.n_override != 0 ? o.n_override : values.size();
  const std::filesystem::path out_dir(o.out);

  ordered_json doc;
  doc["command"] = "sweep";
  doc["config"] = cfg;
  ordered_json result;
  result["model"] = o.model;
  result["event_size"] = o.event_size;
  result["n_used_for_prob"] = n_used;

  if (o.model == "dpl") {
    const auto rows = tailrisk::dpl_threshold_sweep(values, grid, o.event_size, o.n_override);
    result["rows"] = tailrisk::dpl_rows_to_json(rows);
    doc["result"] = std::move(result);
    write_outputs(o.out, cfg, doc, emit.json);
    if (emit.tsv)
      tailrisk::write_text_file((out_dir / "sweep.tsv").string(),
                                tailrisk::dpl_sweep_tsv(rows));
    if (emit.svg) write_dpl_sweep_figures(out_dir, rows);
    return 0;
  }

  tailrisk::SweepConfig config;
  config.event_size = o.event_size;
  config.replicates = o.replicates;
  config.seed = seed;
  config.level = o.level;
  config.jobs = o.jobs;
  config.n_override = o.n_override;
  const auto rows = tailrisk::threshold_sweep(values, grid, config);
  result["replicates"] = o.replicates;
  result["level"] = o.level;
  result["rows"] = tailrisk::sweep_rows_to_json(rows);
  doc["result"] = std::move(result);
  write_outputs(o.out, cfg, doc, emit.json);
  if (emit.tsv)
    tailrisk::write_text_file((out_dir / "sweep.tsv").string(), tailrisk::sweep_tsv(rows));
  if (emit.svg) write_sweep_figures(out_dir, rows);
  return 0;
}

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "catalog file path")->required();
  cmd->add_option("--format", o.format, "input layout: col1 (severity) or col2 (severity<TAB>tag)")
      ->check(CLI::IsMember({"col1", "col2"}))
      ->capture_default_str();
  cmd->add_option("--exclude-tag", o.exclude_tag,
                  "drop events carrying this tag ('' disables; default 9/11)")
      ->capture_default_str();
  cmd->add_option("--exclude-severity", o.exclude_severities,
                  "drop one event with this exact severity (repeatable)");
  cmd->add_option("--exclude-multiplicity", o.exclude_multiplicity,
                  "how many duplicates --exclude-severity should drop");
  cmd->add_option("--seed", o.seed, "master seed for every random stream");
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
  cmd->add_option("--emit", o.emit, "comma list from {json,tsv,svg}")->capture_default_str();
  cmd->add_flag("--jitter", o.jitter, "add uniform [0,1) noise to tied integer severities");
  cmd->add_flag("--strict", o.strict, "fail instead of improvising (e.g. missing seed)");
}

void add_model_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--y", o.event_size, "event size whose exceedance probability is reported")
      ->capture_default_str();
  cmd->add_option("--n", o.n_override,
                  "future-event count n (0: use the post-exclusion catalog size)")
      ->capture_default_str();
  cmd->add_option("--B", o.replicates, "bootstrap replicates (0 disables intervals)")
      ->capture_default_str();
  cmd->add_option("--level", o.level, "bootstrap interval level in (0, 1]")
      ->check(CLI::Range(1e-12, 1.0))
      ->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "worker threads for the bootstrap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"peaks-over-threshold tail fitting, diagnostics, and rare-event probabilities"};
  app.require_subcommand(1);
  Options o;

  CLI::App* fit = app.add_subcommand("fit", "fit the tail above one threshold");
  add_common_options(fit, o);
  add_model_options(fit, o);
  fit->add_option("--mu", o.mu, "threshold")->check(CLI::NonNegativeNumber)->capture_default_str();

  CLI::App* mrl = app.add_subcommand("mrl", "mean residual life curve");
  add_common_options(mrl, o);
  mrl->add_option("--grid", o.grid, "thresholds LO:HI:STEP (default: data-driven)");

  CLI::App* sweep = app.add_subcommand("sweep", "refit across a threshold grid");
  add_common_options(sweep, o);
  add_model_options(sweep, o);
  sweep->add_option("--grid", o.grid, "thresholds LO:HI:STEP (default: 10:100:5)");
  sweep->add_option("--model", o.model, "tail model: gpd or dpl (discrete power law)")
      ->check(CLI::IsMember({"gpd", "dpl"}))
      ->capture_default_str();

  CLI::App* qq = app.add_subcommand("qq", "model-vs-data quantile table");
  add_common_options(qq, o);
  qq->add_option("--mu", o.mu, "threshold")->check(CLI::NonNegativeNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  o.active = app.get_subcommands().front();
  const std::string command = o.active->get_name();
  try {
    if (command == "fit") return cmd_fit(o);
    if (command == "mrl") return cmd_mrl(o);
    if (command == "sweep") return cmd_sweep(o);
    return cmd_qq(o);
  } catch (const UsageError& e) {
    std::cerr << "tailrisk " << command << ": " << e.what() << "\n";
    return 64;
  } catch (const tailrisk::DataError& e) {
    std::cerr << "tailrisk " << command << ": data error: " << e.what() << "\n";
    return 2;
  } catch (const tailrisk::NumericError& e) {
    std::cerr << "tailrisk " << command << ": numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "tailrisk " << command << ": error: " << e.what() << "\n";
    return 3;
  }
}
