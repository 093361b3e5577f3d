#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sciomap/records.hpp"

namespace sciomap::ingest {

inline constexpr std::string_view kMentionsHeader =
    "mention_id,doi,article_title,journal_title,issns,wiki_page_title,wiki_language,mention_date,"
    "article_year";
inline constexpr std::string_view kSourcesHeader =
    "title,print_issn,e_issn,asjc_codes,specialty_names,open_access,top_percentile,scholarly_output,"
    "citation_count";

struct RowIssue {
  std::size_t line = 0;
  std::string reason;
};

/// Row-level accounting. Damaged rows are skipped and listed, never fatal.
struct ParseReport {
  std::size_t rows = 0;
  std::size_t skipped = 0;
  std::vector<RowIssue> issues;
};

struct MentionParse {
  std::vector<RawMention> mentions;
  ParseReport report;
};

struct SourceParse {
  std::vector<JournalRecord> journals;
  ParseReport report;
};

/// Throws IoError for a missing file and FormatError for a wrong header.
MentionParse parse_altmetric_export(const std::filesystem::path& path);
MentionParse parse_altmetric_text(std::string_view content);
std::string format_altmetric_export(std::span<const RawMention> mentions);

SourceParse parse_scopus_source_list(const std::filesystem::path& path);
SourceParse parse_scopus_text(std::string_view content);
std::string format_scopus_source_list(std::span<const JournalRecord> journals);

// ---------------------------------------------------------------------------
// ISSN enrichment

struct LookupResult {
  enum class Status { Found, NotFound, Failed };
  Status status = Status::NotFound;
  std::vector<std::string> issns;
  std::string detail;
};

class IssnLookupClient {
 public:
  virtual ~IssnLookupClient() = default;
  virtual LookupResult lookup(std::string_view journal_title) = 0;
};

/// Always misses. Used offline when no fixture directory is configured.
class NullLookupClient final : public IssnLookupClient {
 public:
  LookupResult lookup(std::string_view) override { return {}; }
};

/// Directory of JSON documents. Each is either `{"title": ..., "issns": [...]}`
/// or a saved MediaWiki action=query response.
class FixtureLookupClient final : public IssnLookupClient {
 public:
  explicit FixtureLookupClient(const std::filesystem::path& directory);
  LookupResult lookup(std::string_view journal_title) override;
  std::size_t size() const { return by_key_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> by_key_;
};

/// Queries a MediaWiki api.php endpoint for the page named after the journal
/// and extracts ISSNs from its wikitext infobox.
class MediaWikiLookupClient final : public IssnLookupClient {
 public:
  explicit MediaWikiLookupClient(std::string api_url, int timeout_seconds = 10);
  LookupResult lookup(std::string_view journal_title) override;

 private:
  std::string scheme_host_;
  std::string path_;
  int timeout_seconds_;
};

/// Case-insensitive, whitespace-collapsed title key.
std::string title_key(std::string_view title);

/// Hyphenated ISSNs from `issn =` / `eissn =` infobox parameters, in order of
/// appearance, deduplicated, invalid check digits dropped.
std::vector<std::string> extract_issns_from_wikitext(std::string_view wikitext);

/// Title key -> ISSN list, persisted as a JSON object.
class IssnCache {
 public:
  IssnCache() = default;
  /// Missing file -> empty cache. Unparseable file -> FormatError.
  static IssnCache load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  const std::vector<std::string>* find(std::string_view journal_title) const;
  void put(std::string_view journal_title, std::vector<std::string> issns);
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

struct EnrichReport {
  std::size_t passthrough = 0;  // already had an ISSN
  std::size_t lookups = 0;      // mentions needing a lookup
  std::size_t cache_hits = 0;
  std::size_t resolved = 0;
  std::size_t misses = 0;    // lookups that left the mention without ISSN
  std::size_t failures = 0;  // subset of misses caused by transport errors
};

struct EnrichResult {
  std::vector<RawMention> mentions;
  EnrichReport report;
};

/// Looks up ISSNs for mentions lacking any. The cache file is read first and
/// rewritten when new entries were learned.
EnrichResult enrich_issn(std::vector<RawMention> mentions, IssnLookupClient& client,
                         const std::filesystem::path& cache_path);

}  // namespace sciomap::ingest
