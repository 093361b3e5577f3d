#include "sciomap/corpus.hpp"

#include <algorithm>
#include <tuple>

#include "sciomap/error.hpp"
#include "sciomap/text.hpp"

namespace sciomap::corpus {

namespace {

auto canonical_key(const CitationRecord& r) {
  return std::tie(r.entry, r.article_id, r.date, r.journal, r.specialties, r.year, r.mention_id);
}

bool same_pair(const CitationRecord& a, const CitationRecord& b) {
  return a.entry == b.entry && a.article_id == b.article_id;
}

}  // namespace

void sort_canonical(std::vector<CitationRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const CitationRecord& a, const CitationRecord& b) { return canonical_key(a) < canonical_key(b); });
}

LinkResult link_mentions(std::span<const RawMention> mentions, const catalog::JournalIndex& index,
                         const catalog::LabelVocabulary& vocabulary, DateSource date_source) {
  LinkResult out;
  out.report.input = mentions.size();
  std::map<catalog::CanonicalIssn, std::optional<catalog::SpecialtySet>> resolved;

  for (const auto& m : mentions) {
    if (m.issns.empty()) {
      ++out.report.no_issn;
      continue;
    }
    std::optional<catalog::CanonicalIssn> journal;
    for (const auto& raw : m.issns) {
      const auto issn = catalog::try_normalize_issn(raw);
      if (issn && index.find(*issn)) {
        journal = index.primary_issn(*issn);
        break;
      }
    }
    if (!journal) {
      ++out.report.unknown_issn;
      continue;
    }

    std::optional<Date> date;
    if (date_source == DateSource::Mention) date = m.mention_date;
    else if (m.article_year) date = Date{*m.article_year, 1, 1};
    if (!date) {
      ++out.report.undated;
      continue;
    }

    auto it = resolved.find(*journal);
    if (it == resolved.end()) {
      std::optional<catalog::SpecialtySet> labels;
      try {
        auto resolution = catalog::resolve_specialties(*index.find(*journal), vocabulary);
        out.report.unknown_codes.insert(resolution.unknown_codes.begin(), resolution.unknown_codes.end());
        labels = std::move(resolution.labels);
      } catch (const catalog::UnclassifiableJournal&) {
      }
      it = resolved.emplace(*journal, std::move(labels)).first;
    }
    if (!it->second) {
      ++out.report.unclassifiable;
      continue;
    }

    CitationRecord r{
        .entry = {m.wiki_language, m.wiki_page_title},
        .article_id = m.doi.value_or(m.mention_id),
        .journal = *journal,
        .specialties = *it->second,
        .date = *date,
        .year = date->year,
        .mention_id = m.mention_id,
    };
    out.records.push_back(std::move(r));
  }
  out.report.linked = out.records.size();
  return out;
}

DedupResult dedupe_citations(std::span<const CitationRecord> records) {
  std::vector<CitationRecord> sorted(records.begin(), records.end());
  sort_canonical(sorted);

  DedupResult out;
  out.report.input = sorted.size();
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i + 1;
    while (j < sorted.size() && same_pair(sorted[i], sorted[j])) ++j;
    // Within a group the order is by date ascending; take the first record
    // carrying the latest date.
    std::size_t best = j - 1;
    while (best > i && sorted[best - 1].date == sorted[j - 1].date) --best;
    out.records.push_back(std::move(sorted[best]));
    i = j;
  }
  out.report.removed = out.report.input - out.records.size();
  return out;
}

FilterResult filter_corpus(std::span<const CitationRecord> records, const FilterRules& rules,
                           std::size_t undated_at_link) {
  FilterResult out;
  out.report.input = records.size();
  out.report.undated_at_link = undated_at_link;
  for (const auto& r : records) {
    CitationRecord kept = r;
    if (rules.discipline) {
      std::erase_if(kept.specialties, [&](const std::string& label) { return !rules.discipline->labels.contains(label); });
      if (kept.specialties.empty()) {
        ++out.report.removed_discipline;
        continue;
      }
    }
    if (rules.window) {
      if (r.year < rules.window->lo) {
        ++out.report.removed_before_window;
        continue;
      }
      if (r.year > rules.window->hi) {
        ++out.report.removed_after_window;
        continue;
      }
    }
    out.records.push_back(std::move(kept));
  }
  out.report.output = out.records.size();
  return out;
}

CorpusSummary summarize_corpus(std::span<const CitationRecord> records) {
  CorpusSummary s;
  std::set<EntryId> entries;
  std::set<std::string> articles;
  std::set<catalog::CanonicalIssn> journals;
  for (const auto& r : records) {
    entries.insert(r.entry);
    articles.insert(r.article_id);
    journals.insert(r.journal);
  }
  s.entries = entries.size();
  s.citations = records.size();
  s.articles = articles.size();
  s.journals = journals.size();
  std::map<std::string, std::size_t> per_language;
  for (const auto& e : entries) ++per_language[e.language];
  for (const auto& [lang, count] : per_language)
    s.language_shares[lang] = static_cast<double>(count) / static_cast<double>(s.entries);
  return s;
}

std::string format_corpus_tsv(std::span<const CitationRecord> records) {
  std::vector<const CitationRecord*> order;
  order.reserve(records.size());
  for (const auto& r : records) order.push_back(&r);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) { return canonical_key(*a) < canonical_key(*b); });

  std::string out;
  for (const auto* r : order) {
    std::vector<std::string> labels;
    for (const auto& l : r->specialties) labels.push_back(text::tsv_escape(l));
    out += text::tsv_escape(r->entry.language) + '\t' + text::tsv_escape(r->entry.page_title) + '\t' +
           text::tsv_escape(r->article_id) + '\t' + r->journal.value() + '\t' + text::join(labels, ";") + '\t' +
           r->date.iso() + '\t' + std::to_string(r->year) + '\n';
  }
  return out;
}

std::vector<CitationRecord> parse_corpus_tsv(std::string_view content) {
  std::vector<CitationRecord> out;
  std::size_t line_no = 0;
  for (const auto& line : text::split(content, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw FormatError("corpus line " + std::to_string(line_no) + ": " + why);
    };
    const auto fields = text::split(line, '\t');
    if (fields.size() != 7) fail("expected 7 tab-separated fields");
    const auto issn = catalog::try_normalize_issn(fields[3]);
    if (!issn) fail("invalid ISSN '" + fields[3] + "'");
    const auto date = parse_iso_date(fields[5]);
    if (!date) fail("invalid date '" + fields[5] + "'");
    const auto year = text::parse_int(fields[6]);
    if (!year || *year != date->year) fail("year does not match date");
    CitationRecord r{
        .entry = {text::tsv_unescape(fields[0]), text::tsv_unescape(fields[1])},
        .article_id = text::tsv_unescape(fields[2]),
        .journal = *issn,
        .specialties = {},
        .date = *date,
        .year = static_cast<int>(*year),
        .mention_id = {},
    };
    for (const auto& label : text::split(fields[4], ';'))
      if (!label.empty()) r.specialties.insert(text::tsv_unescape(label));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace sciomap::corpus
