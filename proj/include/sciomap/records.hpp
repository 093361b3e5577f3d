#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sciomap/date.hpp"
#include "sciomap/issn.hpp"

namespace sciomap {

/// One Wikipedia page citing one scholarly article, as exported by the
/// altmetrics provider.
struct RawMention {
  std::string mention_id;
  std::optional<std::string> doi;
  std::string article_title;
  std::string journal_title;
  std::vector<std::string> issns;  // raw, possibly invalid
  std::string wiki_page_title;
  std::string wiki_language;
  std::optional<Date> mention_date;
  std::optional<int> article_year;

  bool operator==(const RawMention&) const = default;
};

struct JournalRecord {
  std::string title;
  std::optional<catalog::CanonicalIssn> print_issn;
  std::optional<catalog::CanonicalIssn> e_issn;
  std::set<std::string> asjc_codes;
  std::set<std::string> specialty_names;
  bool open_access = false;
  double top_percentile = 100.0;
  std::uint64_t scholarly_output = 0;
  std::uint64_t citation_count = 0;

  /// Print ISSN first, then e-ISSN, skipping absent ones.
  std::vector<catalog::CanonicalIssn> issns() const;

  bool operator==(const JournalRecord&) const = default;
};

}  // namespace sciomap
