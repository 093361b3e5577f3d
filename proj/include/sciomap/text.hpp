#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sciomap::text {

struct CsvRow {
  std::size_t line = 0;  // 1-based line on which the record starts
  std::vector<std::string> fields;
};

/// RFC-4180 reader. Never throws; an unterminated quote swallows the rest of
/// the input into the last field.
std::vector<CsvRow> parse_csv(std::string_view input);

std::string csv_field(std::string_view field);
std::string csv_line(const std::vector<std::string>& fields);

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string_view trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);
/// Lowercases and collapses whitespace runs to single spaces.
std::string fold_key(std::string_view s);

std::optional<std::int64_t> parse_int(std::string_view s);
std::optional<double> parse_double(std::string_view s);

/// Fixed-point rendering with at most `precision` decimals, trailing zeros
/// and a dangling dot removed ("1", "0.25").
std::string format_decimal(double value, int precision);
/// Shortest decimal that parses back to the same double.
std::string format_shortest(double value);

std::string read_file(const std::filesystem::path& path);
/// Creates parent directories as needed.
void write_file(const std::filesystem::path& path, std::string_view content);

/// Backslash escaping for tab-separated files: \t, \n, \r and \\.
std::string tsv_escape(std::string_view s);
std::string tsv_unescape(std::string_view s);

}  // namespace sciomap::text
