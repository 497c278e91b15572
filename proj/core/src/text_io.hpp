#pragma once

// Internal CSV helpers shared by the readers. The on-disk formats are plain
// comma-separated fields without quoting.

#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "roadrank/errors.hpp"

namespace roadrank::detail {

inline std::optional<double> parse_double(std::string_view field) {
  double value = 0.0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

/// Line-oriented reader that validates the header against a set of accepted
/// layouts and then yields one split row at a time. Blank lines are skipped;
/// `\r\n` endings are accepted.
class CsvReader {
 public:
  CsvReader(std::istream& in, std::vector<std::vector<std::string_view>> accepted_headers) : in_(in) {
    if (!read_line()) throw MalformedRow(1, "missing header");
    std::string_view header = buffer_;
    if (header.substr(0, 3) == "\xEF\xBB\xBF") header.remove_prefix(3);
    const auto fields = split_fields(header);
    for (const auto& accepted : accepted_headers) {
      if (fields == accepted) {
        width_ = accepted.size();
        return;
      }
    }
    throw MalformedRow(1, fmt::format("unexpected header '{}'", header));
  }

  std::size_t header_width() const noexcept { return width_; }
  /// 1-based line number of the row most recently returned by next().
  std::size_t line() const noexcept { return line_; }

  std::optional<std::vector<std::string_view>> next() {
    while (read_line()) {
      if (!buffer_.empty()) return split_fields(buffer_);
    }
    return std::nullopt;
  }

 private:
  bool read_line() {
    if (!std::getline(in_, buffer_)) return false;
    ++line_;
    if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
    return true;
  }

  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
  std::size_t width_ = 0;
};

}  // namespace roadrank::detail
