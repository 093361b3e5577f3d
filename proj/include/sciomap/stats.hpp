#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sciomap/catalog.hpp"
#include "sciomap/corpus.hpp"

namespace sciomap::stats {

struct StatsSummary {
  double mean = 0.0;
  double median = 0.0;
  double mode = 0.0;
  double std_dev = 0.0;  // sample (n - 1); 0 when n == 1
  double range = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t n = 0;
};

/// Throws PreconditionError on an empty list. Even-n median is the midpoint;
/// among equally frequent values the smallest is the mode.
StatsSummary descriptive_stats(std::span<const double> values);

struct DistributionTables {
  StatsSummary per_entry;    // references per citing entry
  StatsSummary per_article;  // citations per cited article
  std::size_t entries = 0;
  std::size_t citations = 0;
  std::size_t articles = 0;
};

DistributionTables distribution_tables(std::span<const corpus::CitationRecord> records);

struct AnnualPoint {
  int year = 0;
  std::size_t citations = 0;
  double mean_citations_per_article = 0.0;

  bool operator==(const AnnualPoint&) const = default;
};

std::vector<AnnualPoint> annual_series(std::span<const corpus::CitationRecord> records);

struct SpecialtyRow {
  std::string specialty;
  std::size_t journals_cited = 0;
  double share_journals = 0.0;      // over label-expanded journal total, sums to 1
  double share_journals_raw = 0.0;  // over distinct journals, may sum above 1
  std::size_t articles_cited = 0;
  std::size_t citations = 0;
  double share_citations = 0.0;
  double share_citations_raw = 0.0;
  double mean_citations_per_article = 0.0;
  double std_citations_per_article = 0.0;
};

/// One row per label, label order. A record counts toward every label of its
/// journal.
std::vector<SpecialtyRow> specialty_table(std::span<const corpus::CitationRecord> records);

struct JournalRow {
  std::size_t rank = 0;
  std::string title;
  std::string issn;
  std::size_t citations = 0;
  std::size_t articles_cited = 0;
  double mean_citations = 0.0;
  bool open_access = false;
  bool top_journal = false;  // top_percentile <= 10
};

/// Top k journals by citations, ties by title then ISSN.
std::vector<JournalRow> journal_ranking(std::span<const corpus::CitationRecord> records,
                                        const catalog::JournalIndex& index, std::size_t k);

struct ScopusAggregate {
  std::uint64_t scholarly_output = 0;
  std::uint64_t citation_count = 0;
};

/// Per-label sums over every journal of the source list whose unified labels
/// intersect `discipline_labels` (all labels when empty).
std::map<std::string, ScopusAggregate> scopus_aggregates(std::span<const JournalRecord> journals,
                                                         const catalog::LabelVocabulary& vocabulary,
                                                         const std::set<std::string>& discipline_labels = {});

struct CoverageRow {
  std::string specialty;
  double wiki_article_share = 0.0;
  double wiki_citation_share = 0.0;
  double scopus_article_share = 0.0;
  double scopus_citation_share = 0.0;
};

/// Rows ordered by Wikipedia article share descending, then label. Throws
/// PreconditionError naming the first label without an aggregate.
std::vector<CoverageRow> coverage_table(std::span<const corpus::CitationRecord> records,
                                        const std::map<std::string, ScopusAggregate>& aggregates);

}  // namespace sciomap::stats
