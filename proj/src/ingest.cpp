#include "sciomap/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

#include "sciomap/error.hpp"
#include "sciomap/text.hpp"

namespace sciomap::ingest {

namespace {

using catalog::CanonicalIssn;
using nlohmann::json;

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  for (const auto& part : text::split(s, sep)) {
    auto trimmed = text::trim(part);
    if (!trimmed.empty()) out.emplace_back(trimmed);
  }
  return out;
}

bool header_matches(const std::vector<text::CsvRow>& rows, std::string_view expected) {
  if (rows.empty()) return false;
  std::vector<std::string> trimmed;
  for (const auto& f : rows.front().fields) trimmed.emplace_back(text::trim(f));
  return text::join(trimmed, ",") == expected;
}

bool is_language_code(std::string_view s) {
  if (s.size() < 2 || s.size() > 3) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
}

}  // namespace

MentionParse parse_altmetric_text(std::string_view content) {
  const auto rows = text::parse_csv(content);
  if (!header_matches(rows, kMentionsHeader)) throw FormatError("mentions file does not start with the expected header");

  MentionParse out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    ++out.report.rows;
    auto skip = [&](std::string reason) {
      ++out.report.skipped;
      out.report.issues.push_back({row.line, std::move(reason)});
    };
    if (row.fields.size() != 9) {
      skip("expected 9 fields, found " + std::to_string(row.fields.size()));
      continue;
    }
    auto field = [&](std::size_t i) { return std::string(text::trim(row.fields[i])); };

    RawMention m;
    m.mention_id = field(0);
    if (auto doi = field(1); !doi.empty()) m.doi = doi;
    m.article_title = field(2);
    m.journal_title = field(3);
    m.issns = split_list(row.fields[4], '|');
    m.wiki_page_title = field(5);
    m.wiki_language = text::to_lower_ascii(field(6));
    m.mention_date = parse_iso_date(field(7));
    if (auto year = text::parse_int(field(8)); year && *year > 0 && *year < 10000) m.article_year = static_cast<int>(*year);

    if (m.mention_id.empty()) {
      skip("empty mention_id");
      continue;
    }
    if (m.wiki_page_title.empty()) {
      skip("empty wiki_page_title");
      continue;
    }
    if (!is_language_code(m.wiki_language)) {
      skip("invalid wiki_language '" + m.wiki_language + "'");
      continue;
    }
    out.mentions.push_back(std::move(m));
  }
  return out;
}

MentionParse parse_altmetric_export(const std::filesystem::path& path) {
  return parse_altmetric_text(text::read_file(path));
}

std::string format_altmetric_export(std::span<const RawMention> mentions) {
  std::string out(kMentionsHeader);
  out.push_back('\n');
  for (const auto& m : mentions) {
    out += text::csv_line({m.mention_id, m.doi.value_or(""), m.article_title, m.journal_title, text::join(m.issns, "|"),
                           m.wiki_page_title, m.wiki_language, m.mention_date ? m.mention_date->iso() : "",
                           m.article_year ? std::to_string(*m.article_year) : ""});
  }
  return out;
}

SourceParse parse_scopus_text(std::string_view content) {
  const auto rows = text::parse_csv(content);
  if (!header_matches(rows, kSourcesHeader)) throw FormatError("source list does not start with the expected header");

  SourceParse out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    ++out.report.rows;
    auto skip = [&](std::string reason) {
      ++out.report.skipped;
      out.report.issues.push_back({row.line, std::move(reason)});
    };
    if (row.fields.size() != 9) {
      skip("expected 9 fields, found " + std::to_string(row.fields.size()));
      continue;
    }
    auto field = [&](std::size_t i) { return std::string(text::trim(row.fields[i])); };

    JournalRecord j;
    j.title = field(0);
    if (j.title.empty()) {
      skip("empty title");
      continue;
    }
    bool bad_issn = false;
    auto read_issn = [&](std::size_t i) -> std::optional<CanonicalIssn> {
      const auto raw = field(i);
      if (raw.empty()) return std::nullopt;
      try {
        return catalog::normalize_issn(raw);
      } catch (const catalog::IssnError& e) {
        bad_issn = true;
        out.report.issues.push_back({row.line, e.what()});
        return std::nullopt;
      }
    };
    j.print_issn = read_issn(1);
    j.e_issn = read_issn(2);
    if (!j.print_issn && !j.e_issn) {
      skip(bad_issn ? "no valid ISSN" : "no ISSN");
      continue;
    }
    for (auto& c : split_list(row.fields[3], ';')) j.asjc_codes.insert(std::move(c));
    for (auto& s : split_list(row.fields[4], ';')) j.specialty_names.insert(std::move(s));

    const auto oa = text::to_lower_ascii(field(5));
    if (oa != "true" && oa != "false") {
      skip("open_access must be true or false");
      continue;
    }
    j.open_access = oa == "true";

    if (const auto p = field(6); !p.empty()) {
      const auto value = text::parse_double(p);
      if (!value || *value < 0.0 || *value > 100.0) {
        skip("top_percentile outside [0,100]");
        continue;
      }
      j.top_percentile = *value;
    }
    bool counts_ok = true;
    auto read_count = [&](std::size_t i) -> std::uint64_t {
      const auto raw = field(i);
      if (raw.empty()) return 0;
      const auto value = text::parse_int(raw);
      if (!value || *value < 0) {
        counts_ok = false;
        return 0;
      }
      return static_cast<std::uint64_t>(*value);
    };
    j.scholarly_output = read_count(7);
    j.citation_count = read_count(8);
    if (!counts_ok) {
      skip("scholarly_output and citation_count must be non-negative integers");
      continue;
    }
    out.journals.push_back(std::move(j));
  }
  return out;
}

SourceParse parse_scopus_source_list(const std::filesystem::path& path) {
  return parse_scopus_text(text::read_file(path));
}

std::string format_scopus_source_list(std::span<const JournalRecord> journals) {
  std::string out(kSourcesHeader);
  out.push_back('\n');
  auto join_set = [](const std::set<std::string>& s) { return text::join({s.begin(), s.end()}, ";"); };
  for (const auto& j : journals) {
    out += text::csv_line({j.title, j.print_issn ? j.print_issn->hyphenated() : "",
                           j.e_issn ? j.e_issn->hyphenated() : "", join_set(j.asjc_codes), join_set(j.specialty_names),
                           j.open_access ? "true" : "false", text::format_shortest(j.top_percentile),
                           std::to_string(j.scholarly_output), std::to_string(j.citation_count)});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string title_key(std::string_view title) { return text::fold_key(title); }

std::vector<std::string> extract_issns_from_wikitext(std::string_view wikitext) {
  static const std::regex pattern(
      R"((?:[|\n]\s*e?issn[0-9]*\s*=\s*|\{\{\s*issn\s*\|\s*)([0-9]{4}\s*-?\s*[0-9]{3}[0-9xX]))",
      std::regex::icase | std::regex::ECMAScript);
  std::vector<std::string> out;
  std::set<std::string> seen;
  const std::string s(wikitext);
  for (auto it = std::sregex_iterator(s.begin(), s.end(), pattern); it != std::sregex_iterator(); ++it) {
    const auto issn = catalog::try_normalize_issn((*it)[1].str());
    if (issn && seen.insert(issn->value()).second) out.push_back(issn->hyphenated());
  }
  return out;
}

namespace {

/// Title and wikitext of the first page of an action=query response, for both
/// formatversion 1 (pages keyed by id) and 2 (pages as an array).
struct QueryPage {
  std::string title;
  bool missing = false;
  std::string wikitext;
};

std::optional<QueryPage> first_query_page(const json& doc) {
  if (!doc.is_object() || !doc.contains("query")) return std::nullopt;
  const auto& query = doc["query"];
  if (!query.contains("pages")) return std::nullopt;
  const json* page = nullptr;
  const auto& pages = query["pages"];
  if (pages.is_array() && !pages.empty()) page = &pages.front();
  if (pages.is_object() && !pages.empty()) page = &pages.begin().value();
  if (page == nullptr || !page->is_object()) return std::nullopt;

  QueryPage out;
  out.title = page->value("title", "");
  out.missing = page->contains("missing") || page->contains("invalid");
  if (page->contains("revisions") && (*page)["revisions"].is_array() && !(*page)["revisions"].empty()) {
    const auto& rev = (*page)["revisions"].front();
    const json* holder = &rev;
    if (rev.contains("slots") && rev["slots"].contains("main")) holder = &rev["slots"]["main"];
    if (holder->contains("content") && (*holder)["content"].is_string()) out.wikitext = (*holder)["content"];
    else if (holder->contains("*") && (*holder)["*"].is_string()) out.wikitext = (*holder)["*"];
  }
  return out;
}

}  // namespace

FixtureLookupClient::FixtureLookupClient(const std::filesystem::path& directory) {
  if (!std::filesystem::is_directory(directory)) throw IoError("lookup fixture directory not found: " + directory.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(directory))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  for (const auto& file : files) {
    json doc;
    try {
      doc = json::parse(text::read_file(file));
    } catch (const json::exception& e) {
      throw FormatError("invalid lookup fixture " + file.string() + ": " + e.what());
    }
    if (doc.is_object() && doc.contains("title") && doc.contains("issns")) {
      std::vector<std::string> issns;
      for (const auto& v : doc["issns"])
        if (v.is_string()) issns.push_back(v.get<std::string>());
      by_key_.emplace(title_key(doc["title"].get<std::string>()), std::move(issns));
    } else if (auto page = first_query_page(doc)) {
      if (!page->missing) by_key_.emplace(title_key(page->title), extract_issns_from_wikitext(page->wikitext));
    } else {
      throw FormatError("unrecognised lookup fixture " + file.string());
    }
  }
}

LookupResult FixtureLookupClient::lookup(std::string_view journal_title) {
  auto it = by_key_.find(title_key(journal_title));
  if (it == by_key_.end() || it->second.empty()) return {LookupResult::Status::NotFound, {}, "no fixture"};
  return {LookupResult::Status::Found, it->second, {}};
}

MediaWikiLookupClient::MediaWikiLookupClient(std::string api_url, int timeout_seconds)
    : timeout_seconds_(timeout_seconds) {
  const auto scheme_end = api_url.find("://");
  if (scheme_end == std::string::npos) throw PreconditionError("endpoint must be an http(s) URL: " + api_url);
  const auto path_start = api_url.find('/', scheme_end + 3);
  scheme_host_ = api_url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/w/api.php" : api_url.substr(path_start);
}

LookupResult MediaWikiLookupClient::lookup(std::string_view journal_title) {
  httplib::Client client(scheme_host_);
  client.set_connection_timeout(timeout_seconds_);
  client.set_read_timeout(timeout_seconds_);
  client.set_follow_location(true);
  const httplib::Params params{{"action", "query"},   {"format", "json"},    {"formatversion", "2"},
                               {"prop", "revisions"}, {"rvprop", "content"}, {"rvslots", "main"},
                               {"redirects", "1"},    {"titles", std::string(journal_title)}};
  const httplib::Headers headers{{"User-Agent", "sciomap/1.0 (ISSN enrichment)"}};
  auto res = client.Get(path_, params, headers);
  if (!res) return {LookupResult::Status::Failed, {}, httplib::to_string(res.error())};
  if (res->status != 200) return {LookupResult::Status::Failed, {}, "HTTP " + std::to_string(res->status)};
  json doc;
  try {
    doc = json::parse(res->body);
  } catch (const json::exception& e) {
    return {LookupResult::Status::Failed, {}, e.what()};
  }
  const auto page = first_query_page(doc);
  if (!page || page->missing) return {LookupResult::Status::NotFound, {}, "no such page"};
  auto issns = extract_issns_from_wikitext(page->wikitext);
  if (issns.empty()) return {LookupResult::Status::NotFound, {}, "page has no ISSN"};
  return {LookupResult::Status::Found, std::move(issns), {}};
}

IssnCache IssnCache::load(const std::filesystem::path& path) {
  IssnCache cache;
  if (path.empty() || !std::filesystem::exists(path)) return cache;
  json doc;
  try {
    doc = json::parse(text::read_file(path));
  } catch (const json::exception& e) {
    throw FormatError("invalid ISSN cache " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw FormatError("ISSN cache " + path.string() + " is not a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_array()) throw FormatError("ISSN cache entry '" + key + "' is not a list");
    std::vector<std::string> issns;
    for (const auto& v : value) {
      if (!v.is_string()) throw FormatError("ISSN cache entry '" + key + "' holds a non-string");
      issns.push_back(v.get<std::string>());
    }
    cache.entries_.emplace(title_key(key), std::move(issns));
  }
  return cache;
}

void IssnCache::save(const std::filesystem::path& path) const {
  json doc = json::object();
  for (const auto& [key, issns] : entries_) doc[key] = issns;
  text::write_file(path, doc.dump(2) + "\n");
}

const std::vector<std::string>* IssnCache::find(std::string_view journal_title) const {
  auto it = entries_.find(title_key(journal_title));
  return it == entries_.end() ? nullptr : &it->second;
}

void IssnCache::put(std::string_view journal_title, std::vector<std::string> issns) {
  entries_[title_key(journal_title)] = std::move(issns);
}

EnrichResult enrich_issn(std::vector<RawMention> mentions, IssnLookupClient& client,
                         const std::filesystem::path& cache_path) {
  EnrichResult out;
  IssnCache cache = IssnCache::load(cache_path);
  bool cache_dirty = false;
  // Titles already answered negatively during this run.
  std::map<std::string, LookupResult::Status> negative;

  for (auto& m : mentions) {
    if (!m.issns.empty()) {
      ++out.report.passthrough;
      continue;
    }
    ++out.report.lookups;
    if (const auto* cached = cache.find(m.journal_title)) {
      ++out.report.cache_hits;
      m.issns = *cached;
      if (m.issns.empty()) ++out.report.misses;
      else ++out.report.resolved;
      continue;
    }
    const auto key = title_key(m.journal_title);
    if (key.empty()) {
      ++out.report.misses;
      continue;
    }
    if (auto it = negative.find(key); it != negative.end()) {
      ++out.report.misses;
      if (it->second == LookupResult::Status::Failed) ++out.report.failures;
      continue;
    }
    const auto result = client.lookup(m.journal_title);
    switch (result.status) {
      case LookupResult::Status::Found:
        m.issns = result.issns;
        cache.put(m.journal_title, result.issns);
        cache_dirty = true;
        ++out.report.resolved;
        break;
      case LookupResult::Status::NotFound:
        negative.emplace(key, result.status);
        ++out.report.misses;
        break;
      case LookupResult::Status::Failed:
        negative.emplace(key, result.status);
        ++out.report.misses;
        ++out.report.failures;
        break;
    }
  }
  if (cache_dirty && !cache_path.empty()) cache.save(cache_path);
  out.mentions = std::move(mentions);
  return out;
}

}  // namespace sciomap::ingest
