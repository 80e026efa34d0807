#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tailrisk {

/// One event. Severity is a positive integer at parse time (deadly
/// events only; zero-death rows are rejected); the jitter transform is
/// the one thing that can make it non-integral.
struct EventRecord {
  double severity = 0.0;
  std::optional<std::string> tag;
};

/// Ordered multiset of event severities with provenance. Immutable after
/// construction; every operation below is pure, so catalogs are safe to
/// share across threads. Summary statistics depend only on the multiset
/// of severities, never on event order.
struct SeverityCatalog {
  std::vector<EventRecord> events;
  std::string source;

  std::size_t n() const { return events.size(); }
};

/// Catalog file format: UTF-8, one record per line, `#` starts a comment
/// line, no header. SingleColumn: `<severity>`. TwoColumn:
/// `<severity>\t<tag>` with the tag optional per line.
enum class CatalogFormat { SingleColumn, TwoColumn };

/// Throws DataError naming the line number for malformed rows
/// (non-integer severity, severity < 1, stray columns) and for input
/// with no data rows. Leading comment lines are captured into `source`
/// together with the caller-supplied source name.
SeverityCatalog parse_catalog(std::string_view text, CatalogFormat format,
                              std::string source_name = {});

SeverityCatalog load_catalog(const std::filesystem::path& path, CatalogFormat format);

/// Inverse of parse_catalog for round-tripping; integral severities are
/// written without a decimal point.
std::string serialize_catalog(const SeverityCatalog& catalog, CatalogFormat format);

/// Removal rule: by tag (removes every record carrying the tag) or by
/// exact severity value (requires a multiplicity when the value is
/// duplicated).
struct ExclusionRule {
  enum class Kind { Tag, Severity };
  Kind kind = Kind::Tag;
  std::string tag;
  double severity = 0.0;
  std::optional<std::size_t> multiplicity;

  static ExclusionRule by_tag(std::string t);
  static ExclusionRule by_severity(double severity, std::optional<std::size_t> multiplicity = {});
};

struct ExcludeResult {
  SeverityCatalog catalog;
  std::size_t removed = 0;
  bool matched = false;  // false: rule matched nothing, catalog unchanged (warning case)
};

/// Pure: returns a new catalog, the input is untouched. A severity rule
/// matching several records without a multiplicity is an ambiguity error;
/// a rule matching nothing returns matched=false and the catalog as-is.
ExcludeResult exclude(const SeverityCatalog& catalog, const ExclusionRule& rule);

struct TailCount {
  std::size_t count = 0;
  double fraction = 0.0;
};

/// Events strictly above the threshold ("more than" governs: an event
/// with severity exactly mu is not in the tail). Requires mu >= 0.
TailCount tail_count(const SeverityCatalog& catalog, double threshold);

/// Ascending severities strictly greater than mu, values unmodified (no
/// mu-subtraction; fits take mu explicitly). Fewer than 2 exceedances is
/// a DataError since nothing downstream can use such a tail.
std::vector<double> exceedances(const SeverityCatalog& catalog, double threshold);

/// Adds uniform [0,1) noise to every severity, one draw per event in
/// event order from the stream seeded with `seed`. Off by default
/// everywhere; integer counts are fit directly.
SeverityCatalog with_jitter(const SeverityCatalog& catalog, std::uint64_t seed);

}  // namespace tailrisk
