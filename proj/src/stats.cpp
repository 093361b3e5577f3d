#include "sciomap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sciomap/error.hpp"

namespace sciomap::stats {

StatsSummary descriptive_stats(std::span<const double> values) {
  if (values.empty()) throw PreconditionError("descriptive_stats needs at least one value");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  StatsSummary s;
  s.n = n;
  s.min = sorted.front();
  s.max = sorted.back();
  s.range = s.max - s.min;
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n);
  s.median = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;

  std::size_t best_run = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && sorted[j] == sorted[i]) ++j;
    if (j - i > best_run) {
      best_run = j - i;
      s.mode = sorted[i];
    }
    i = j;
  }

  if (n > 1) {
    double ss = 0.0;
    for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
    s.std_dev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return s;
}

namespace {

template <class Map>
std::vector<double> counts_of(const Map& m) {
  std::vector<double> out;
  out.reserve(m.size());
  for (const auto& [key, count] : m) out.push_back(static_cast<double>(count));
  return out;
}

double ratio(std::size_t a, std::size_t b) { return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b); }

}  // namespace

DistributionTables distribution_tables(std::span<const corpus::CitationRecord> records) {
  if (records.empty()) throw PreconditionError("distribution_tables needs a non-empty corpus");
  std::map<corpus::EntryId, std::size_t> per_entry;
  std::map<std::string, std::size_t> per_article;
  for (const auto& r : records) {
    ++per_entry[r.entry];
    ++per_article[r.article_id];
  }
  DistributionTables t;
  const auto entry_counts = counts_of(per_entry);
  const auto article_counts = counts_of(per_article);
  t.per_entry = descriptive_stats(entry_counts);
  t.per_article = descriptive_stats(article_counts);
  t.entries = per_entry.size();
  t.articles = per_article.size();
  t.citations = records.size();
  return t;
}

std::vector<AnnualPoint> annual_series(std::span<const corpus::CitationRecord> records) {
  std::map<int, std::pair<std::size_t, std::set<std::string>>> by_year;
  for (const auto& r : records) {
    auto& [citations, articles] = by_year[r.year];
    ++citations;
    articles.insert(r.article_id);
  }
  std::vector<AnnualPoint> out;
  for (const auto& [year, data] : by_year)
    out.push_back({year, data.first, ratio(data.first, data.second.size())});
  return out;
}

std::vector<SpecialtyRow> specialty_table(std::span<const corpus::CitationRecord> records) {
  struct Accumulator {
    std::set<catalog::CanonicalIssn> journals;
    std::map<std::string, std::size_t> per_article;
    std::size_t citations = 0;
  };
  std::map<std::string, Accumulator> by_label;
  std::set<catalog::CanonicalIssn> all_journals;
  for (const auto& r : records) {
    all_journals.insert(r.journal);
    for (const auto& label : r.specialties) {
      auto& acc = by_label[label];
      acc.journals.insert(r.journal);
      ++acc.per_article[r.article_id];
      ++acc.citations;
    }
  }
  std::size_t expanded_journals = 0;
  std::size_t expanded_citations = 0;
  for (const auto& [label, acc] : by_label) {
    expanded_journals += acc.journals.size();
    expanded_citations += acc.citations;
  }

  std::vector<SpecialtyRow> rows;
  for (const auto& [label, acc] : by_label) {
    SpecialtyRow row;
    row.specialty = label;
    row.journals_cited = acc.journals.size();
    row.share_journals = ratio(row.journals_cited, expanded_journals);
    row.share_journals_raw = ratio(row.journals_cited, all_journals.size());
    row.articles_cited = acc.per_article.size();
    row.citations = acc.citations;
    row.share_citations = ratio(row.citations, expanded_citations);
    row.share_citations_raw = ratio(row.citations, records.size());
    const auto per_article = counts_of(acc.per_article);
    const auto summary = descriptive_stats(per_article);
    row.mean_citations_per_article = ratio(row.citations, row.articles_cited);
    row.std_citations_per_article = summary.std_dev;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<JournalRow> journal_ranking(std::span<const corpus::CitationRecord> records,
                                        const catalog::JournalIndex& index, std::size_t k) {
  if (k == 0) throw PreconditionError("journal_ranking needs k >= 1");
  std::map<catalog::CanonicalIssn, std::pair<std::size_t, std::set<std::string>>> by_journal;
  for (const auto& r : records) {
    auto& [citations, articles] = by_journal[r.journal];
    ++citations;
    articles.insert(r.article_id);
  }
  std::vector<JournalRow> rows;
  for (const auto& [issn, data] : by_journal) {
    JournalRow row;
    row.issn = issn.hyphenated();
    row.title = issn.hyphenated();
    row.citations = data.first;
    row.articles_cited = data.second.size();
    row.mean_citations = ratio(row.citations, row.articles_cited);
    if (const auto* j = index.find(issn)) {
      row.title = j->title;
      row.open_access = j->open_access;
      row.top_journal = j->top_percentile <= 10.0;
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const JournalRow& a, const JournalRow& b) {
    if (a.citations != b.citations) return a.citations > b.citations;
    return std::tie(a.title, a.issn) < std::tie(b.title, b.issn);
  });
  if (rows.size() > k) rows.resize(k);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].rank = i + 1;
  return rows;
}

std::map<std::string, ScopusAggregate> scopus_aggregates(std::span<const JournalRecord> journals,
                                                         const catalog::LabelVocabulary& vocabulary,
                                                         const std::set<std::string>& discipline_labels) {
  std::map<std::string, ScopusAggregate> out;
  for (const auto& j : journals) {
    catalog::SpecialtySet labels;
    try {
      labels = catalog::resolve_specialties(j, vocabulary).labels;
    } catch (const catalog::UnclassifiableJournal&) {
      continue;
    }
    for (const auto& label : labels) {
      if (!discipline_labels.empty() && !discipline_labels.contains(label)) continue;
      auto& agg = out[label];
      agg.scholarly_output += j.scholarly_output;
      agg.citation_count += j.citation_count;
    }
  }
  return out;
}

std::vector<CoverageRow> coverage_table(std::span<const corpus::CitationRecord> records,
                                        const std::map<std::string, ScopusAggregate>& aggregates) {
  std::map<std::string, std::pair<std::size_t, std::set<std::string>>> by_label;
  for (const auto& r : records) {
    for (const auto& label : r.specialties) {
      auto& [citations, articles] = by_label[label];
      ++citations;
      articles.insert(r.article_id);
    }
  }
  std::size_t wiki_articles = 0;
  std::size_t wiki_citations = 0;
  std::uint64_t scopus_articles = 0;
  std::uint64_t scopus_citations = 0;
  for (const auto& [label, data] : by_label) {
    auto it = aggregates.find(label);
    if (it == aggregates.end()) throw PreconditionError("no source-list aggregate for specialty '" + label + "'");
    wiki_articles += data.second.size();
    wiki_citations += data.first;
    scopus_articles += it->second.scholarly_output;
    scopus_citations += it->second.citation_count;
  }
  auto share = [](std::uint64_t a, std::uint64_t b) {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
  };

  std::vector<CoverageRow> rows;
  for (const auto& [label, data] : by_label) {
    const auto& agg = aggregates.at(label);
    rows.push_back({label, share(data.second.size(), wiki_articles), share(data.first, wiki_citations),
                    share(agg.scholarly_output, scopus_articles), share(agg.citation_count, scopus_citations)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const CoverageRow& a, const CoverageRow& b) {
    return a.wiki_article_share > b.wiki_article_share;
  });
  return rows;
}

}  // namespace sciomap::stats
