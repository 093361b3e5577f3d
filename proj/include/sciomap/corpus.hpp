#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sciomap/catalog.hpp"
#include "sciomap/date.hpp"
#include "sciomap/records.hpp"

namespace sciomap::corpus {

/// A Wikipedia page in one language edition.
struct EntryId {
  std::string language;
  std::string page_title;

  auto operator<=>(const EntryId&) const = default;
};

/// Linked, dated (entry, article, journal) citation fact.
struct CitationRecord {
  EntryId entry;
  std::string article_id;  // DOI if present, else mention id
  catalog::CanonicalIssn journal;
  catalog::SpecialtySet specialties;
  Date date;
  int year = 0;
  std::string mention_id;  // audit trail; not persisted in corpus.tsv

  bool operator==(const CitationRecord&) const = default;
};

/// Which date a record is stamped with.
enum class DateSource {
  Mention,      // when the page cited the article
  ArticleYear,  // January 1st of the article's publication year
};

struct LinkReport {
  std::size_t input = 0;
  std::size_t linked = 0;
  std::size_t no_issn = 0;
  std::size_t unknown_issn = 0;
  std::size_t undated = 0;
  std::size_t unclassifiable = 0;
  std::set<std::string> unknown_codes;
};

struct LinkResult {
  std::vector<CitationRecord> records;
  LinkReport report;
};

/// A mention links iff one of its ISSNs resolves in the index; the first
/// resolving ISSN wins. Undated mentions are dropped here.
LinkResult link_mentions(std::span<const RawMention> mentions, const catalog::JournalIndex& index,
                         const catalog::LabelVocabulary& vocabulary, DateSource date_source = DateSource::Mention);

struct DedupReport {
  std::size_t input = 0;
  std::size_t removed = 0;
};

struct DedupResult {
  std::vector<CitationRecord> records;
  DedupReport report;
};

/// Keeps the latest-dated record of every (entry, article) pair. Output is in
/// canonical corpus order.
DedupResult dedupe_citations(std::span<const CitationRecord> records);

struct YearWindow {
  int lo = 0;
  int hi = 0;
};

struct DisciplineRule {
  std::string name;
  std::set<std::string> labels;
};

struct FilterRules {
  bool require_date = false;
  std::optional<DisciplineRule> discipline;
  std::optional<YearWindow> window;
};

struct FilterReport {
  std::size_t input = 0;
  std::size_t undated_at_link = 0;  // audit only, removed before this stage
  std::size_t removed_discipline = 0;
  std::size_t removed_before_window = 0;
  std::size_t removed_after_window = 0;
  std::size_t output = 0;
};

struct FilterResult {
  std::vector<CitationRecord> records;
  FilterReport report;
};

FilterResult filter_corpus(std::span<const CitationRecord> records, const FilterRules& rules,
                           std::size_t undated_at_link = 0);

struct CorpusSummary {
  std::size_t entries = 0;
  std::size_t citations = 0;
  std::size_t articles = 0;
  std::size_t journals = 0;
  std::map<std::string, double> language_shares;  // over distinct entries
};

CorpusSummary summarize_corpus(std::span<const CitationRecord> records);

/// Canonical order: entry, article, then date and journal.
void sort_canonical(std::vector<CitationRecord>& records);

/// `wiki_language  wiki_page_title  article_id  issn  specialties  date  year`,
/// tab-separated, canonical order.
std::string format_corpus_tsv(std::span<const CitationRecord> records);
/// Throws FormatError on malformed lines.
std::vector<CitationRecord> parse_corpus_tsv(std::string_view content);

}  // namespace sciomap::corpus
