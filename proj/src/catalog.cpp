#include "tailrisk/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tailrisk/errors.hpp"
#include "tailrisk/rng.hpp"

namespace tailrisk {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::int64_t parse_severity(std::string_view token, std::size_t line_no) {
  token = strip(token);
  std::int64_t value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || token.empty())
    throw DataError("parse: line " + std::to_string(line_no) + ": severity is not an integer: '" +
                    std::string(token) + "'");
  if (value < 1)
    throw DataError("parse: line " + std::to_string(line_no) + ": severity must be >= 1, got " +
                    std::to_string(value));
  return value;
}

}  // namespace

SeverityCatalog parse_catalog(std::string_view text, CatalogFormat format, std::string source_name) {
  SeverityCatalog catalog;
  std::string header_comments;
  std::size_t line_no = 0;
  bool in_header = true;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    if (!line.empty() && line.front() == '#') {
      if (in_header) {
        header_comments.append(line.begin(), line.end());
        header_comments.push_back('\n');
      }
      continue;
    }
    if (strip(line).empty()) continue;
    in_header = false;

    EventRecord record;
    if (format == CatalogFormat::SingleColumn) {
      if (line.find('\t') != std::string_view::npos)
        throw DataError("parse: line " + std::to_string(line_no) +
                        ": unexpected second column in single-column catalog");
      record.severity = static_cast<double>(parse_severity(line, line_no));
    } else {
      const std::size_t tab = line.find('\t');
      if (tab == std::string_view::npos) {
        record.severity = static_cast<double>(parse_severity(line, line_no));
      } else {
        record.severity = static_cast<double>(parse_severity(line.substr(0, tab), line_no));
        std::string_view tag = line.substr(tab + 1);
        while (!tag.empty() && tag.back() == '\r') tag.remove_suffix(1);
        if (!tag.empty()) record.tag = std::string(tag);
      }
    }
    catalog.events.push_back(std::move(record));
  }

  if (catalog.events.empty()) throw DataError("parse: catalog has no data rows");
  catalog.source = std::move(source_name);
  if (!header_comments.empty()) {
    if (!catalog.source.empty()) catalog.source.push_back('\n');
    catalog.source += header_comments;
  }
  return catalog;
}

SeverityCatalog load_catalog(const std::filesystem::path& path, CatalogFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("parse: cannot open catalog file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str(), format, path.string());
}

std::string serialize_catalog(const SeverityCatalog& catalog, CatalogFormat format) {
  std::string out;
  for (const auto& event : catalog.events) {
    const double s = event.severity;
    if (s == std::floor(s) && std::abs(s) < 9.0e18) {
      out += std::to_string(static_cast<std::int64_t>(s));
    } else {
      char buf[32];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), s);
      out.append(buf, ptr);
    }
    if (format == CatalogFormat::TwoColumn && event.tag) {
      out.push_back('\t');
      out += *event.tag;
    }
    out.push_back('\n');
  }
  return out;
}

ExclusionRule ExclusionRule::by_tag(std::string t) {
  ExclusionRule rule;
  rule.kind = Kind::Tag;
  rule.tag = std::move(t);
  return rule;
}

ExclusionRule ExclusionRule::by_severity(double severity, std::optional<std::size_t> multiplicity) {
  ExclusionRule rule;
  rule.kind = Kind::Severity;
  rule.severity = severity;
  rule.multiplicity = multiplicity;
  return rule;
}

ExcludeResult exclude(const SeverityCatalog& catalog, const ExclusionRule& rule) {
  std::vector<std::size_t> matches;
  for (std::size_t i = 0; i < catalog.events.size(); ++i) {
    const auto& event = catalog.events[i];
    const bool hit = rule.kind == ExclusionRule::Kind::Tag
                         ? (event.tag && *event.tag == rule.tag)
                         : (event.severity == rule.severity);
    if (hit) matches.push_back(i);
  }

  ExcludeResult result;
  if (matches.empty()) {
    result.catalog = catalog;
    result.matched = false;
    return result;
  }

  std::size_t to_remove = matches.size();
  if (rule.kind == ExclusionRule::Kind::Severity) {
    if (rule.multiplicity) {
      if (*rule.multiplicity > matches.size())
        throw DataError("exclude: multiplicity " + std::to_string(*rule.multiplicity) +
                        " exceeds the " + std::to_string(matches.size()) +
                        " records with that severity");
      to_remove = *rule.multiplicity;
    } else if (matches.size() > 1) {
      throw DataError("exclude: severity rule matches " + std::to_string(matches.size()) +
                      " records; pass a multiplicity to disambiguate");
    }
  }

  if (to_remove >= catalog.events.size())
    throw DataError("exclude: rule would remove every event in the catalog");

  result.catalog.source = catalog.source;
  result.catalog.events.reserve(catalog.events.size() - to_remove);
  std::size_t next_match = 0;
  std::size_t removed = 0;
  for (std::size_t i = 0; i < catalog.events.size(); ++i) {
    if (next_match < matches.size() && matches[next_match] == i && removed < to_remove) {
      ++next_match;
      ++removed;
      continue;
    }
    if (next_match < matches.size() && matches[next_match] == i) ++next_match;
    result.catalog.events.push_back(catalog.events[i]);
  }
  result.removed = removed;
  result.matched = true;
  return result;
}

TailCount tail_count(const SeverityCatalog& catalog, double threshold) {
  if (!(threshold >= 0.0)) throw std::domain_error("tail_count: threshold must be >= 0");
  if (catalog.events.empty()) throw DataError("tail_count: empty catalog");
  TailCount tc;
  for (const auto& event : catalog.events)
    if (event.severity > threshold) ++tc.count;
  tc.fraction = static_cast<double>(tc.count) / static_cast<double>(catalog.n());
  return tc;
}

std::vector<double> exceedances(const SeverityCatalog& catalog, double threshold) {
  if (!(threshold >= 0.0)) throw std::domain_error("exceedances: threshold must be >= 0");
  std::vector<double> tail;
  for (const auto& event : catalog.events)
    if (event.severity > threshold) tail.push_back(event.severity);
  if (tail.size() < 2)
    throw DataError("tail: fewer than 2 exceedances above threshold " + std::to_string(threshold));
  std::sort(tail.begin(), tail.end());
  return tail;
}

SeverityCatalog with_jitter(const SeverityCatalog& catalog, std::uint64_t seed) {
  SeverityCatalog jittered;
  jittered.source = catalog.source;
  jittered.events.reserve(catalog.events.size());
  SplitMix64 rng(seed);
  for (const auto& event : catalog.events) {
    EventRecord record = event;
    record.severity += rng.next_u01();
    jittered.events.push_back(std::move(record));
  }
  return jittered;
}

}  // namespace tailrisk
