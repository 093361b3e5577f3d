#include "sciomap/catalog.hpp"

#include "sciomap/text.hpp"

namespace sciomap::catalog {

struct IndexBuilder {
  static IndexBuild build(std::vector<JournalRecord> journals) {
    IndexBuild out;
    JournalIndex& index = out.index;
    index.journals_ = std::move(journals);
    index.primary_.resize(index.journals_.size());
    for (std::size_t i = 0; i < index.journals_.size(); ++i) {
      for (const auto& issn : index.journals_[i].issns()) {
        auto [it, inserted] = index.by_issn_.emplace(issn, i);
        if (inserted) {
          if (!index.primary_[i]) index.primary_[i] = issn;
        } else if (it->second != i) {
          out.conflicts.push_back({issn, index.journals_[it->second].title, index.journals_[i].title});
        }
      }
    }
    return out;
  }
};

const JournalRecord* JournalIndex::find(const CanonicalIssn& issn) const {
  auto it = by_issn_.find(issn);
  return it == by_issn_.end() ? nullptr : &journals_[it->second];
}

std::optional<CanonicalIssn> JournalIndex::primary_issn(const CanonicalIssn& any_issn) const {
  auto it = by_issn_.find(any_issn);
  if (it == by_issn_.end()) return std::nullopt;
  return primary_[it->second];
}

IndexBuild build_journal_index(std::vector<JournalRecord> journals) {
  return IndexBuilder::build(std::move(journals));
}

LabelVocabulary LabelVocabulary::parse(std::string_view content) {
  LabelVocabulary vocab;
  std::string discipline;
  std::size_t line_no = 0;
  for (const auto& raw_line : text::split(content, '\n')) {
    ++line_no;
    std::string_view line = raw_line;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = text::trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw FormatError("label vocabulary line " + std::to_string(line_no) + ": " + why);
    };
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      discipline = std::string(text::trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected 'code = label [, folds_into]'");
    const std::string code(text::trim(line.substr(0, eq)));
    const std::string_view rhs = line.substr(eq + 1);
    const auto comma = rhs.find(',');
    const std::string label(text::trim(rhs.substr(0, comma)));
    const std::string unified = comma == std::string_view::npos ? label : std::string(text::trim(rhs.substr(comma + 1)));
    if (code.empty() || label.empty() || unified.empty()) fail("empty code or label");
    if (!vocab.codes_.emplace(code, CodeEntry{label, unified, discipline}).second) fail("duplicate code " + code);

    auto check_unify = [&](const std::string& name) {
      auto [it, inserted] = vocab.unify_.emplace(name, unified);
      if (!inserted && it->second != unified) fail("label '" + name + "' folds into two different labels");
    };
    check_unify(label);
    check_unify(unified);
    auto [it, inserted] = vocab.discipline_of_.emplace(unified, discipline);
    if (!inserted && it->second != discipline) fail("label '" + unified + "' appears in two disciplines");
  }
  return vocab;
}

LabelVocabulary LabelVocabulary::load(const std::filesystem::path& path) { return parse(text::read_file(path)); }

std::optional<std::string> LabelVocabulary::label_for_code(std::string_view code) const {
  auto it = codes_.find(text::trim(code));
  if (it == codes_.end()) return std::nullopt;
  return it->second.unified;
}

std::optional<std::string> LabelVocabulary::unify(std::string_view label) const {
  auto it = unify_.find(text::trim(label));
  if (it == unify_.end()) return std::nullopt;
  return it->second;
}

std::set<std::string> LabelVocabulary::discipline_labels(std::string_view discipline) const {
  std::set<std::string> out;
  for (const auto& [label, d] : discipline_of_)
    if (d == discipline) out.insert(label);
  return out;
}

std::set<std::string> LabelVocabulary::labels() const {
  std::set<std::string> out;
  for (const auto& [label, d] : discipline_of_) out.insert(label);
  return out;
}

std::vector<std::string> LabelVocabulary::disciplines() const {
  std::set<std::string> out;
  for (const auto& [label, d] : discipline_of_) out.insert(d);
  return {out.begin(), out.end()};
}

SpecialtyResolution resolve_specialties(const JournalRecord& record, const LabelVocabulary& vocabulary) {
  SpecialtyResolution out;
  for (const auto& code : record.asjc_codes) {
    if (auto label = vocabulary.label_for_code(code)) out.labels.insert(*label);
    else out.unknown_codes.push_back(code);
  }
  if (out.labels.empty()) {
    for (const auto& name : record.specialty_names)
      if (auto label = vocabulary.unify(name)) out.labels.insert(*label);
  }
  if (out.labels.empty()) throw UnclassifiableJournal("journal '" + record.title + "' has no resolvable specialty");
  return out;
}

}  // namespace sciomap::catalog
