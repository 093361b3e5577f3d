#include "sciomap/issn.hpp"

#include <cctype>

namespace sciomap::catalog {

char issn_check_digit(std::string_view body7) {
  int sum = 0;
  for (std::size_t i = 0; i < 7; ++i) sum += (body7[i] - '0') * static_cast<int>(8 - i);
  const int check = (11 - sum % 11) % 11;
  return check == 10 ? 'X' : static_cast<char>('0' + check);
}

CanonicalIssn normalize_issn(std::string_view raw) {
  std::string value;
  for (char c : raw) {
    if (c == '-' || std::isspace(static_cast<unsigned char>(c))) continue;
    value.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  if (value.size() != 8)
    throw IssnError(IssnErrorKind::WrongLength, "ISSN '" + std::string(raw) + "' does not have 8 characters");
  for (std::size_t i = 0; i < 7; ++i)
    if (value[i] < '0' || value[i] > '9')
      throw IssnError(IssnErrorKind::NonDigitBody, "ISSN '" + std::string(raw) + "' has a non-digit body");
  const char last = value[7];
  if (!(last == 'X' || (last >= '0' && last <= '9')))
    throw IssnError(IssnErrorKind::NonDigitBody, "ISSN '" + std::string(raw) + "' has an invalid check character");
  if (issn_check_digit(value) != last)
    throw IssnError(IssnErrorKind::CheckDigitMismatch, "ISSN '" + std::string(raw) + "' fails its check digit");
  return CanonicalIssn(std::move(value));
}

std::optional<CanonicalIssn> try_normalize_issn(std::string_view raw) {
  try {
    return normalize_issn(raw);
  } catch (const IssnError&) {
    return std::nullopt;
  }
}

}  // namespace sciomap::catalog
