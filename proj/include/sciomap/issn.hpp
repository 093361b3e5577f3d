#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "sciomap/error.hpp"

namespace sciomap::catalog {

/// Eight characters, uppercase, no hyphen, valid mod-11 check digit.
class CanonicalIssn {
 public:
  const std::string& value() const { return value_; }
  /// "0028-0836" form.
  std::string hyphenated() const { return value_.substr(0, 4) + "-" + value_.substr(4); }

  auto operator<=>(const CanonicalIssn&) const = default;

 private:
  explicit CanonicalIssn(std::string value) : value_(std::move(value)) {}
  std::string value_;

  friend CanonicalIssn normalize_issn(std::string_view raw);
};

enum class IssnErrorKind { WrongLength, NonDigitBody, CheckDigitMismatch };

class IssnError : public Error {
 public:
  IssnError(IssnErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  IssnErrorKind kind() const { return kind_; }

 private:
  IssnErrorKind kind_;
};

/// Check character ('0'-'9' or 'X') for a seven-digit body.
char issn_check_digit(std::string_view body7);

/// Strips hyphens and whitespace, uppercases, then validates.
CanonicalIssn normalize_issn(std::string_view raw);
std::optional<CanonicalIssn> try_normalize_issn(std::string_view raw);

}  // namespace sciomap::catalog
