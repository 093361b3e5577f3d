#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace sciomap {

/// Proleptic Gregorian calendar date.
struct Date {
  int year = 0;
  unsigned month = 1;
  unsigned day = 1;

  auto operator<=>(const Date&) const = default;
  std::string iso() const;
};

bool is_valid_date(int year, unsigned month, unsigned day);

/// Accepts exactly `YYYY-MM-DD`; anything else is absent.
std::optional<Date> parse_iso_date(std::string_view s);

}  // namespace sciomap
