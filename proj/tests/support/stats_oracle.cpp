#include "stats_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace oracle {

using sciomap::corpus::CitationRecord;
namespace stats = sciomap::stats;

stats::StatsSummary summary(std::vector<double> values) {
  stats::StatsSummary s;
  const std::size_t n = values.size();
  s.n = n;
  double sum = 0;
  double sum_sq = 0;
  s.min = values[0];
  s.max = values[0];
  for (double v : values) {
    sum += v;
    sum_sq += v * v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / static_cast<double>(n);
  s.range = s.max - s.min;
  s.std_dev = n > 1 ? std::sqrt(std::max(0.0, (sum_sq - static_cast<double>(n) * s.mean * s.mean) / static_cast<double>(n - 1))) : 0.0;
  std::size_t best = 0;
  for (double v : values) {
    const auto c = static_cast<std::size_t>(std::count(values.begin(), values.end(), v));
    if (c > best || (c == best && v < s.mode)) {
      best = c;
      s.mode = v;
    }
  }
  std::sort(values.begin(), values.end());
  s.median = n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  return s;
}

namespace {

template <class Key, class Fn>
std::vector<Key> distinct(const std::vector<CitationRecord>& records, Fn key) {
  std::vector<Key> out;
  for (const auto& r : records)
    if (std::find(out.begin(), out.end(), key(r)) == out.end()) out.push_back(key(r));
  return out;
}

bool has_label(const CitationRecord& r, const std::string& label) { return r.specialties.count(label) > 0; }

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

stats::DistributionTables distribution(const std::vector<CitationRecord>& records) {
  const auto entries = distinct<sciomap::corpus::EntryId>(records, [](const auto& r) { return r.entry; });
  const auto articles = distinct<std::string>(records, [](const auto& r) { return r.article_id; });
  std::vector<double> per_entry;
  for (const auto& e : entries)
    per_entry.push_back(static_cast<double>(std::count_if(records.begin(), records.end(), [&](const auto& r) { return r.entry == e; })));
  std::vector<double> per_article;
  for (const auto& a : articles)
    per_article.push_back(static_cast<double>(std::count_if(records.begin(), records.end(), [&](const auto& r) { return r.article_id == a; })));
  stats::DistributionTables t;
  t.per_entry = summary(per_entry);
  t.per_article = summary(per_article);
  t.entries = entries.size();
  t.articles = articles.size();
  t.citations = records.size();
  return t;
}

std::vector<stats::AnnualPoint> annual(const std::vector<CitationRecord>& records) {
  auto years = distinct<int>(records, [](const auto& r) { return r.year; });
  std::sort(years.begin(), years.end());
  std::vector<stats::AnnualPoint> out;
  for (int y : years) {
    std::vector<CitationRecord> in_year;
    for (const auto& r : records)
      if (r.year == y) in_year.push_back(r);
    const auto articles = distinct<std::string>(in_year, [](const auto& r) { return r.article_id; });
    out.push_back({y, in_year.size(), static_cast<double>(in_year.size()) / static_cast<double>(articles.size())});
  }
  return out;
}

std::vector<stats::SpecialtyRow> specialties(const std::vector<CitationRecord>& records) {
  std::set<std::string> labels;
  for (const auto& r : records) labels.insert(r.specialties.begin(), r.specialties.end());
  const auto all_journals = distinct<sciomap::catalog::CanonicalIssn>(records, [](const auto& r) { return r.journal; });
  std::vector<stats::SpecialtyRow> rows;
  std::size_t journal_sum = 0;
  std::size_t citation_sum = 0;
  for (const auto& label : labels) {
    std::vector<CitationRecord> mine;
    for (const auto& r : records)
      if (has_label(r, label)) mine.push_back(r);
    stats::SpecialtyRow row;
    row.specialty = label;
    row.journals_cited = distinct<sciomap::catalog::CanonicalIssn>(mine, [](const auto& r) { return r.journal; }).size();
    const auto articles = distinct<std::string>(mine, [](const auto& r) { return r.article_id; });
    row.articles_cited = articles.size();
    row.citations = mine.size();
    std::vector<double> per_article;
    for (const auto& a : articles)
      per_article.push_back(static_cast<double>(std::count_if(mine.begin(), mine.end(), [&](const auto& r) { return r.article_id == a; })));
    const auto s = summary(per_article);
    row.mean_citations_per_article = s.mean;
    row.std_citations_per_article = s.std_dev;
    row.share_journals_raw = static_cast<double>(row.journals_cited) / static_cast<double>(all_journals.size());
    row.share_citations_raw = static_cast<double>(row.citations) / static_cast<double>(records.size());
    journal_sum += row.journals_cited;
    citation_sum += row.citations;
    rows.push_back(row);
  }
  for (auto& row : rows) {
    row.share_journals = static_cast<double>(row.journals_cited) / static_cast<double>(journal_sum);
    row.share_citations = static_cast<double>(row.citations) / static_cast<double>(citation_sum);
  }
  return rows;
}

std::vector<stats::JournalRow> ranking(const std::vector<CitationRecord>& records,
                                       const std::vector<sciomap::JournalRecord>& journals, std::size_t k) {
  std::vector<stats::JournalRow> rows;
  for (const auto& issn : distinct<sciomap::catalog::CanonicalIssn>(records, [](const auto& r) { return r.journal; })) {
    stats::JournalRow row;
    row.issn = issn.hyphenated();
    row.title = row.issn;
    std::vector<CitationRecord> mine;
    for (const auto& r : records)
      if (r.journal == issn) mine.push_back(r);
    row.citations = mine.size();
    row.articles_cited = distinct<std::string>(mine, [](const auto& r) { return r.article_id; }).size();
    row.mean_citations = static_cast<double>(row.citations) / static_cast<double>(row.articles_cited);
    for (const auto& j : journals) {
      if (j.print_issn == issn || j.e_issn == issn) {
        row.title = j.title;
        row.open_access = j.open_access;
        row.top_journal = j.top_percentile <= 10.0;
        break;
      }
    }
    rows.push_back(row);
  }
  // Selection sort: repeatedly pick the best remaining row.
  std::vector<stats::JournalRow> out;
  while (!rows.empty() && out.size() < k) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& a = rows[i];
      const auto& b = rows[best];
      if (a.citations > b.citations || (a.citations == b.citations && (a.title < b.title || (a.title == b.title && a.issn < b.issn))))
        best = i;
    }
    out.push_back(rows[best]);
    out.back().rank = out.size();
    rows.erase(rows.begin() + static_cast<long>(best));
  }
  return out;
}

std::vector<stats::CoverageRow> coverage(const std::vector<CitationRecord>& records,
                                         const std::map<std::string, stats::ScopusAggregate>& aggregates) {
  std::set<std::string> labels;
  for (const auto& r : records) labels.insert(r.specialties.begin(), r.specialties.end());
  double article_total = 0, citation_total = 0, scopus_articles = 0, scopus_citations = 0;
  std::map<std::string, std::pair<double, double>> wiki;
  for (const auto& label : labels) {
    std::vector<CitationRecord> mine;
    for (const auto& r : records)
      if (has_label(r, label)) mine.push_back(r);
    const double articles = static_cast<double>(distinct<std::string>(mine, [](const auto& r) { return r.article_id; }).size());
    wiki[label] = {articles, static_cast<double>(mine.size())};
    article_total += articles;
    citation_total += static_cast<double>(mine.size());
    scopus_articles += static_cast<double>(aggregates.at(label).scholarly_output);
    scopus_citations += static_cast<double>(aggregates.at(label).citation_count);
  }
  std::vector<stats::CoverageRow> rows;
  for (const auto& label : labels) {
    rows.push_back({label, wiki[label].first / article_total, wiki[label].second / citation_total,
                    static_cast<double>(aggregates.at(label).scholarly_output) / scopus_articles,
                    static_cast<double>(aggregates.at(label).citation_count) / scopus_citations});
  }
  // Insertion sort by article share, descending; equal shares keep label order.
  for (std::size_t i = 1; i < rows.size(); ++i)
    for (std::size_t j = i; j > 0 && rows[j].wiki_article_share > rows[j - 1].wiki_article_share; --j)
      std::swap(rows[j], rows[j - 1]);
  return rows;
}

#define ORACLE_EXPECT(cond, what)   \
  do {                              \
    if (!(cond)) {                  \
      std::ostringstream os;        \
      os << what;                   \
      return os.str();              \
    }                               \
  } while (0)

std::string compare(const stats::StatsSummary& a, const stats::StatsSummary& b, double tol) {
  ORACLE_EXPECT(a.n == b.n, "n " << a.n << " vs " << b.n);
  ORACLE_EXPECT(close(a.mean, b.mean, tol), "mean " << a.mean << " vs " << b.mean);
  ORACLE_EXPECT(close(a.median, b.median, tol), "median " << a.median << " vs " << b.median);
  ORACLE_EXPECT(a.mode == b.mode, "mode " << a.mode << " vs " << b.mode);
  ORACLE_EXPECT(close(a.std_dev, b.std_dev, tol), "std_dev " << a.std_dev << " vs " << b.std_dev);
  ORACLE_EXPECT(a.range == b.range && a.min == b.min && a.max == b.max, "range differs");
  return {};
}

std::string compare(const stats::DistributionTables& a, const stats::DistributionTables& b, double tol) {
  ORACLE_EXPECT(a.entries == b.entries && a.articles == b.articles && a.citations == b.citations, "totals differ");
  if (auto e = compare(a.per_entry, b.per_entry, tol); !e.empty()) return "per_entry " + e;
  if (auto e = compare(a.per_article, b.per_article, tol); !e.empty()) return "per_article " + e;
  return {};
}

std::string compare(const std::vector<stats::AnnualPoint>& a, const std::vector<stats::AnnualPoint>& b, double tol) {
  ORACLE_EXPECT(a.size() == b.size(), "annual length " << a.size() << " vs " << b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ORACLE_EXPECT(a[i].year == b[i].year && a[i].citations == b[i].citations, "annual row " << i);
    ORACLE_EXPECT(close(a[i].mean_citations_per_article, b[i].mean_citations_per_article, tol), "annual mean " << i);
  }
  return {};
}

std::string compare(const std::vector<stats::SpecialtyRow>& a, const std::vector<stats::SpecialtyRow>& b, double tol) {
  ORACLE_EXPECT(a.size() == b.size(), "specialty rows " << a.size() << " vs " << b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a[i];
    const auto& y = b[i];
    ORACLE_EXPECT(x.specialty == y.specialty, "label " << x.specialty << " vs " << y.specialty);
    ORACLE_EXPECT(x.journals_cited == y.journals_cited && x.articles_cited == y.articles_cited && x.citations == y.citations,
                  "counts for " << x.specialty);
    ORACLE_EXPECT(close(x.share_journals, y.share_journals, tol) && close(x.share_journals_raw, y.share_journals_raw, tol) &&
                      close(x.share_citations, y.share_citations, tol) &&
                      close(x.share_citations_raw, y.share_citations_raw, tol),
                  "shares for " << x.specialty);
    ORACLE_EXPECT(close(x.mean_citations_per_article, y.mean_citations_per_article, tol) &&
                      close(x.std_citations_per_article, y.std_citations_per_article, tol),
                  "per-article stats for " << x.specialty);
  }
  return {};
}

std::string compare(const std::vector<stats::JournalRow>& a, const std::vector<stats::JournalRow>& b, double tol) {
  ORACLE_EXPECT(a.size() == b.size(), "journal rows " << a.size() << " vs " << b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a[i];
    const auto& y = b[i];
    ORACLE_EXPECT(x.rank == y.rank && x.title == y.title && x.issn == y.issn, "journal row " << i << " " << x.title << " vs " << y.title);
    ORACLE_EXPECT(x.citations == y.citations && x.articles_cited == y.articles_cited, "journal counts " << x.title);
    ORACLE_EXPECT(close(x.mean_citations, y.mean_citations, tol), "journal mean " << x.title);
    ORACLE_EXPECT(x.open_access == y.open_access && x.top_journal == y.top_journal, "journal flags " << x.title);
  }
  return {};
}

std::string compare(const std::vector<stats::CoverageRow>& a, const std::vector<stats::CoverageRow>& b, double tol) {
  ORACLE_EXPECT(a.size() == b.size(), "coverage rows " << a.size() << " vs " << b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ORACLE_EXPECT(a[i].specialty == b[i].specialty, "coverage label " << a[i].specialty << " vs " << b[i].specialty);
    ORACLE_EXPECT(close(a[i].wiki_article_share, b[i].wiki_article_share, tol) &&
                      close(a[i].wiki_citation_share, b[i].wiki_citation_share, tol) &&
                      close(a[i].scopus_article_share, b[i].scopus_article_share, tol) &&
                      close(a[i].scopus_citation_share, b[i].scopus_citation_share, tol),
                  "coverage shares " << a[i].specialty);
  }
  return {};
}

}  // namespace oracle
