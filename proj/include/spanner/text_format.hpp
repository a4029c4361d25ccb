#pragma once

#include <charconv>
#include <cstdio>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "spanner/error.hpp"

namespace spanner {

// Shortest decimal string that parses back to the same double.
inline std::string format_shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

// Fixed significant-digit rendering used for CSV columns.
inline std::string format_sig(double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

// Line reader for the plain-text formats: strips `#` comments, skips blank
// lines, and tracks line numbers for error messages.
class TokenLineReader {
 public:
  explicit TokenLineReader(std::istream& in) : in_(in) {}

  // Next non-empty line split on whitespace; nullopt at end of input.
  std::optional<std::vector<std::string>> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      auto tokens = split(line);
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  std::size_t line_number() const noexcept { return line_no_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::parse, "line " + std::to_string(line_no_) + ": " + msg);
  }

  template <typename T>
  T parse_number(std::string_view token) const {
    T value{};
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
      fail("cannot parse number '" + std::string(token) + "'");
    }
    return value;
  }

 private:
  static std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      if (j > i) out.emplace_back(line.substr(i, j - i));
      i = j;
    }
    return out;
  }

  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

  std::istream& in_;
  std::size_t line_no_ = 0;
};

}  // namespace spanner
