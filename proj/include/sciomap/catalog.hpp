#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sciomap/issn.hpp"
#include "sciomap/records.hpp"

namespace sciomap::catalog {

/// Unified specialty labels of one journal.
using SpecialtySet = std::set<std::string>;

struct IssnConflict {
  CanonicalIssn issn;
  std::string kept_title;
  std::string rejected_title;
};

/// ISSN -> journal lookup covering print and electronic ISSNs.
/// Immutable once built.
class JournalIndex {
 public:
  const JournalRecord* find(const CanonicalIssn& issn) const;
  /// The key under which a journal is identified downstream: the first of its
  /// own ISSNs that the index maps back to it.
  std::optional<CanonicalIssn> primary_issn(const CanonicalIssn& any_issn) const;

  std::size_t key_count() const { return by_issn_.size(); }
  const std::vector<JournalRecord>& journals() const { return journals_; }
  const std::map<CanonicalIssn, std::size_t>& keys() const { return by_issn_; }

 private:
  std::vector<JournalRecord> journals_;
  std::map<CanonicalIssn, std::size_t> by_issn_;
  std::vector<std::optional<CanonicalIssn>> primary_;

  friend struct IndexBuilder;
};

struct IndexBuild {
  JournalIndex index;
  std::vector<IssnConflict> conflicts;
};

/// First record claiming an ISSN wins; later claims are reported.
IndexBuild build_journal_index(std::vector<JournalRecord> journals);

/// Code table `code = label [, folds_into]`, optionally grouped under
/// `[Discipline]` section headers.
class LabelVocabulary {
 public:
  static LabelVocabulary parse(std::string_view text);
  static LabelVocabulary load(const std::filesystem::path& path);

  /// Unified label for an ASJC code.
  std::optional<std::string> label_for_code(std::string_view code) const;
  /// Unified label for a raw or already-unified label name.
  std::optional<std::string> unify(std::string_view label) const;
  std::set<std::string> discipline_labels(std::string_view discipline) const;
  std::set<std::string> labels() const;
  std::vector<std::string> disciplines() const;
  std::size_t code_count() const { return codes_.size(); }

 private:
  struct CodeEntry {
    std::string raw_label;
    std::string unified;
    std::string discipline;
  };
  std::map<std::string, CodeEntry, std::less<>> codes_;
  std::map<std::string, std::string, std::less<>> unify_;  // raw or unified -> unified
  std::map<std::string, std::string, std::less<>> discipline_of_;  // unified -> discipline
};

class UnclassifiableJournal : public Error {
 public:
  using Error::Error;
};

struct SpecialtyResolution {
  SpecialtySet labels;
  std::vector<std::string> unknown_codes;
};

/// Maps ASJC codes to unified labels, folding generic variants. When the
/// record carries no codes, its specialty names are unified instead.
/// Throws UnclassifiableJournal if nothing resolves.
SpecialtyResolution resolve_specialties(const JournalRecord& record, const LabelVocabulary& vocabulary);

}  // namespace sciomap::catalog
