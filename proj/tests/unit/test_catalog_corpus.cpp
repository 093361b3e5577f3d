#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "generators.hpp"
#include "paths.hpp"
#include "sciomap/catalog.hpp"
#include "sciomap/corpus.hpp"
#include "sciomap/error.hpp"
#include "sciomap/ingest.hpp"

using namespace sciomap;
using catalog::normalize_issn;

namespace {

JournalRecord journal(std::string title, std::optional<std::string> print, std::optional<std::string> e,
                      std::set<std::string> codes) {
  JournalRecord j;
  j.title = std::move(title);
  if (print) j.print_issn = normalize_issn(*print);
  if (e) j.e_issn = normalize_issn(*e);
  j.asjc_codes = std::move(codes);
  return j;
}

catalog::LabelVocabulary fixture_vocabulary() { return catalog::LabelVocabulary::load(testpaths::fixture("labels.txt")); }

struct FixtureCorpus {
  catalog::IndexBuild built;
  corpus::LinkResult linked;
};

FixtureCorpus link_fixture() {
  auto mentions = ingest::parse_altmetric_export(testpaths::fixture("mentions_small.csv")).mentions;
  ingest::FixtureLookupClient client(testpaths::fixture("lookup"));
  const auto enriched = ingest::enrich_issn(std::move(mentions), client, {});
  auto built = catalog::build_journal_index(ingest::parse_scopus_source_list(testpaths::fixture("sources_small.csv")).journals);
  auto linked = corpus::link_mentions(enriched.mentions, built.index, fixture_vocabulary());
  return {std::move(built), std::move(linked)};
}

}  // namespace

TEST_CASE("journal index") {
  SUBCASE("empty") {
    const auto built = catalog::build_journal_index({});
    CHECK(built.index.key_count() == 0);
    CHECK(built.conflicts.empty());
  }
  SUBCASE("print and e-ISSN both map to the record") {
    const auto built = catalog::build_journal_index({journal("Hearing Research", "0378-5955", "0028-0836", {"2809"})});
    CHECK(built.index.find(normalize_issn("03785955"))->title == "Hearing Research");
    CHECK(built.index.find(normalize_issn("00280836"))->title == "Hearing Research");
    CHECK(built.index.primary_issn(normalize_issn("00280836")) == normalize_issn("03785955"));
  }
  SUBCASE("first claim wins, the second is reported") {
    const auto built = catalog::build_journal_index(
        {journal("First", "0378-5955", std::nullopt, {"2809"}), journal("Second", "0378-5955", "0028-0836", {"2809"})});
    CHECK(built.index.find(normalize_issn("03785955"))->title == "First");
    CHECK(built.index.find(normalize_issn("00280836"))->title == "Second");
    REQUIRE(built.conflicts.size() == 1);
    CHECK(built.conflicts[0].rejected_title == "Second");
    CHECK(built.index.primary_issn(normalize_issn("00280836")) == normalize_issn("00280836"));
  }
}

TEST_CASE("label vocabulary and specialty resolution") {
  const auto vocab = fixture_vocabulary();
  auto resolve = [&](std::set<std::string> codes) {
    JournalRecord j;
    j.title = "J";
    j.asjc_codes = std::move(codes);
    return catalog::resolve_specialties(j, vocab).labels;
  };
  CHECK(resolve({"1201", "1200"}) == catalog::SpecialtySet{"Arts and Humanities"});
  CHECK(resolve({"1202"}) == catalog::SpecialtySet{"History"});
  CHECK(resolve({"1202", "1201"}) == catalog::SpecialtySet{"History", "Arts and Humanities"});
  CHECK_THROWS_AS(resolve({"9999"}), catalog::UnclassifiableJournal);
  CHECK_THROWS_AS(resolve({}), catalog::UnclassifiableJournal);

  JournalRecord named;
  named.title = "Named";
  named.specialty_names = {"Arts and Humanities (miscellaneous)", "Music"};
  CHECK(catalog::resolve_specialties(named, vocab).labels == catalog::SpecialtySet{"Arts and Humanities", "Music"});

  CHECK(vocab.discipline_labels("Arts and Humanities").size() == 13);
  CHECK(vocab.discipline_labels("Neuroscience") == std::set<std::string>{"Sensory Systems"});
  CHECK(vocab.labels().size() == 15);

  CHECK_THROWS_AS(catalog::LabelVocabulary::parse("1202 = History\n1202 = Music\n"), FormatError);
  CHECK_THROWS_AS(catalog::LabelVocabulary::parse("1202 History\n"), FormatError);
  CHECK_THROWS_AS(catalog::LabelVocabulary::parse("1 = A, X\n2 = A, Y\n"), FormatError);
}

TEST_CASE("resolution is order independent and never exceeds the label set") {
  const auto vocab = fixture_vocabulary();
  std::vector<std::string> codes{"1200", "1201", "1202", "1203", "1204", "1205", "1206",
                                 "1207", "1208", "1209", "1210", "1211", "1212", "1213"};
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(codes.begin(), codes.end(), rng);
    const auto k = 1 + rng() % codes.size();
    JournalRecord j;
    j.asjc_codes = {codes.begin(), codes.begin() + static_cast<long>(k)};
    const auto labels = catalog::resolve_specialties(j, vocab).labels;
    CHECK(labels.size() <= 13);
    CHECK_FALSE(labels.contains("General Arts and Humanities"));
    CHECK_FALSE(labels.contains("Arts and Humanities (miscellaneous)"));
  }
}

TEST_CASE("linking") {
  const auto vocab = fixture_vocabulary();
  const auto built = catalog::build_journal_index({journal("Isis", "0021-1753", std::nullopt, {"1207", "1202"})});
  RawMention m;
  m.mention_id = "x";
  m.wiki_page_title = "Page";
  m.wiki_language = "en";
  m.mention_date = Date{2015, 1, 2};

  SUBCASE("unknown ISSN is dropped") {
    m.issns = {"0028-0836"};
    const auto r = corpus::link_mentions(std::vector{m}, built.index, vocab);
    CHECK(r.records.empty());
    CHECK(r.report.unknown_issn == 1);
  }
  SUBCASE("second ISSN resolves") {
    m.issns = {"1234-5679", "0021-1753"};
    m.doi = "10.1/z";
    const auto r = corpus::link_mentions(std::vector{m}, built.index, vocab);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].journal == normalize_issn("00211753"));
    CHECK(r.records[0].article_id == "10.1/z");
    CHECK(r.records[0].specialties == catalog::SpecialtySet{"History", "History and Philosophy of Science"});
    CHECK(r.records[0].year == 2015);
  }
  SUBCASE("article year as date source") {
    m.issns = {"0021-1753"};
    m.mention_date.reset();
    m.article_year = 2011;
    const auto by_mention = corpus::link_mentions(std::vector{m}, built.index, vocab);
    CHECK(by_mention.report.undated == 1);
    const auto by_article = corpus::link_mentions(std::vector{m}, built.index, vocab, corpus::DateSource::ArticleYear);
    REQUIRE(by_article.records.size() == 1);
    CHECK(by_article.records[0].date == Date{2011, 1, 1});
    CHECK(by_article.records[0].article_id == "x");
  }
}

TEST_CASE("fixture corpus: link, dedupe, summarize") {
  const auto fx = link_fixture();
  CHECK(fx.linked.records.size() == 9);
  CHECK(fx.linked.report.input == 12);
  CHECK(fx.linked.report.no_issn + fx.linked.report.unknown_issn + fx.linked.report.undated == 3);

  const auto deduped = corpus::dedupe_citations(fx.linked.records);
  CHECK(deduped.records.size() == 6);
  CHECK(deduped.report.removed == 3);

  const auto s = corpus::summarize_corpus(deduped.records);
  CHECK(s.entries == 4);
  CHECK(s.citations == 6);
  CHECK(s.articles == 5);
  CHECK(s.journals == 3);
  double share_sum = 0;
  for (const auto& [lang, share] : s.language_shares) share_sum += share;
  CHECK(share_sum == doctest::Approx(1.0).epsilon(1e-12));

  const auto empty = corpus::summarize_corpus({});
  CHECK(empty.entries == 0);
  CHECK(empty.language_shares.empty());
}

TEST_CASE("dedupe keeps the latest date") {
  const auto issn = normalize_issn("0021-1753");
  const corpus::EntryId entry{"en", "Galileo Galilei"};
  std::vector<corpus::CitationRecord> records{
      {entry, "a1", issn, {"History"}, Date{2016, 7, 9}, 2016, "m02"},
      {entry, "a1", issn, {"History"}, Date{2015, 3, 1}, 2015, "m01"},
  };
  const auto single = corpus::dedupe_citations(std::span(records).subspan(1));
  CHECK(single.records.size() == 1);
  CHECK(single.report.removed == 0);
  const auto r = corpus::dedupe_citations(records);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].date == Date{2016, 7, 9});
}

TEST_CASE("filter rules") {
  const auto issn = normalize_issn("0021-1753");
  std::vector<corpus::CitationRecord> records{
      {{"en", "A"}, "a", issn, {"History"}, Date{2006, 5, 5}, 2006, ""},
      {{"en", "A"}, "b", issn, {"History", "Sensory Systems"}, Date{2007, 1, 1}, 2007, ""},
      {{"en", "A"}, "c", issn, {"Sensory Systems"}, Date{2017, 12, 31}, 2017, ""},
      {{"en", "A"}, "d", issn, {"History"}, Date{2018, 1, 1}, 2018, ""},
  };
  corpus::FilterRules rules;
  rules.window = corpus::YearWindow{2007, 2017};
  rules.discipline = corpus::DisciplineRule{"Arts and Humanities", {"History"}};
  const auto r = corpus::filter_corpus(records, rules, 5);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].article_id == "b");
  CHECK(r.records[0].specialties == catalog::SpecialtySet{"History"});
  CHECK(r.report.removed_before_window == 1);
  CHECK(r.report.removed_after_window == 1);
  CHECK(r.report.removed_discipline == 1);
  CHECK(r.report.undated_at_link == 5);

  const auto identity = corpus::filter_corpus(records, corpus::FilterRules{});
  CHECK(identity.records == records);
}

TEST_CASE("corpus.tsv round-trips and is byte stable under shuffling") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto records = gen::random_corpus(rng);
    for (auto& r : records) r.mention_id.clear();
    const auto text = corpus::format_corpus_tsv(records);
    auto parsed = corpus::parse_corpus_tsv(text);
    auto sorted = records;
    corpus::sort_canonical(sorted);
    CHECK(parsed == sorted);
    std::shuffle(records.begin(), records.end(), rng);
    CHECK(corpus::format_corpus_tsv(records) == text);
  }
  CHECK_THROWS_AS(corpus::parse_corpus_tsv("en\tPage\ta\t00211753\tHistory\t2015-01-01\t2014\n"), FormatError);
  CHECK_THROWS_AS(corpus::parse_corpus_tsv("en\tPage\ta\n"), FormatError);
}

TEST_CASE("dedupe properties") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto records = gen::random_corpus_with_duplicates(rng);
    // Oracle: latest date per (entry, article).
    std::map<std::pair<corpus::EntryId, std::string>, Date> latest;
    for (const auto& r : records) {
      auto [it, inserted] = latest.emplace(std::pair{r.entry, r.article_id}, r.date);
      if (!inserted) it->second = std::max(it->second, r.date);
    }
    const auto once = corpus::dedupe_citations(records);
    REQUIRE(once.records.size() == latest.size());
    CHECK(once.report.removed == records.size() - latest.size());
    for (const auto& r : once.records) CHECK(latest.at({r.entry, r.article_id}) == r.date);

    const auto twice = corpus::dedupe_citations(once.records);
    CHECK(twice.records == once.records);

    std::shuffle(records.begin(), records.end(), rng);
    auto shuffled = corpus::dedupe_citations(records).records;
    auto a = once.records;
    for (auto* v : {&a, &shuffled})
      for (auto& r : *v) r.mention_id.clear();
    corpus::sort_canonical(a);
    corpus::sort_canonical(shuffled);
    CHECK(a == shuffled);
  }
}
