#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tailrisk/diagnostics.hpp"
#include "tailrisk/run.hpp"

namespace tailrisk {

using ordered_json = nlohmann::ordered_json;

/// Shortest round-trip decimal representation (via std::to_chars), so
/// re-running a command rewrites byte-identical files. NaN prints as
/// "nan", infinities as "inf"/"-inf".
std::string format_double(double v);

// TSV builders. Column orders are fixed; they are part of the interface
// and documented in the README. NaN cells print as "nan".
std::string sweep_tsv(const std::vector<SweepRow>& rows);
std::string dpl_sweep_tsv(const std::vector<DplSweepRow>& rows);
std::string mrl_tsv(const MrlCurve& curve);
std::string qq_tsv(const std::vector<QqPoint>& points);

// JSON result fragments; the CLI wraps them as
// {"command": ..., "config": ..., "result": ...}. Non-finite doubles
// serialize as null, which keeps the documents standard JSON.
ordered_json fit_report_to_json(const FitReport& report);
ordered_json sweep_rows_to_json(const std::vector<SweepRow>& rows);
ordered_json dpl_rows_to_json(const std::vector<DplSweepRow>& rows);
ordered_json mrl_to_json(const MrlCurve& curve);
ordered_json qq_to_json(const std::vector<QqPoint>& points, const GpdFit& fit);

/// Write text to a file, throwing DataError on I/O failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace tailrisk
