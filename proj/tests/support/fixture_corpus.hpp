#pragma once

#include <string>
#include <vector>

#include "sciomap/catalog.hpp"
#include "sciomap/corpus.hpp"

namespace testfx {

struct Loaded {
  std::vector<sciomap::JournalRecord> journals;
  sciomap::catalog::LabelVocabulary vocabulary;
  std::vector<sciomap::corpus::CitationRecord> linked;    // before dedupe
  std::vector<sciomap::corpus::CitationRecord> records;   // deduped and filtered
};

/// Runs the fixture files through the library (offline lookups, Arts and
/// Humanities, 2007-2017).
Loaded load(const std::string& mentions, const std::string& sources);

}  // namespace testfx
