#include "sciomap/records.hpp"

namespace sciomap {

std::vector<catalog::CanonicalIssn> JournalRecord::issns() const {
  std::vector<catalog::CanonicalIssn> out;
  if (print_issn) out.push_back(*print_issn);
  if (e_issn && e_issn != print_issn) out.push_back(*e_issn);
  return out;
}

}  // namespace sciomap
