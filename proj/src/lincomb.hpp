#pragma once

// Linear combinations `2*a - 1/2*b + c` over a built-in ring, used by the
// graded-algebra and partial-action file formats.

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leavitt/errors.hpp"
#include "leavitt/rings.hpp"

namespace leavitt::text {

using NameLookup = std::function<std::optional<std::size_t>(std::string_view)>;

/// Returns (index, coefficient) pairs; repeated names are not merged.
/// Column numbers in errors are 1-based offsets into `s`.
inline std::vector<std::pair<std::size_t, RingValue>> parse_lincomb(const RingDescriptor& ring, std::string_view s,
                                                                     const NameLookup& lookup, std::size_t line) {
  std::vector<std::pair<std::size_t, RingValue>> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, line, i + 1); };
  skip();
  if (s.substr(i) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      negative = s[i] == '-';
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    if (i >= s.size()) throw fail("expected a term");
    RingValue coeff = ring.one();
    if (!std::isalpha(static_cast<unsigned char>(s[i]))) {
      std::size_t start = i;
      if (s[i] == '(') {
        while (i < s.size() && s[i] != ')') ++i;
        if (i == s.size()) throw fail("unterminated tuple");
        ++i;
      } else {
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
      }
      if (i == start) throw fail("expected a coefficient or a name");
      try {
        coeff = ring.parse_value(s.substr(start, i - start));
      } catch (const Error& e) {
        throw ParseError(e.what(), line, start + 1);
      }
      skip();
      if (i >= s.size() || s[i] != '*') throw fail("expected '*' after coefficient");
      ++i;
      skip();
    }
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '^' ||
                            (s[i] == '-' && i > start && s[i - 1] == '^')))
      ++i;
    if (i == start) throw fail("expected a name");
    auto name = s.substr(start, i - start);
    auto idx = lookup(name);
    if (!idx) throw ParseError("unknown name '" + std::string(name) + "'", line, start + 1);
    out.emplace_back(*idx, negative ? -coeff : coeff);
    first = false;
    skip();
    if (i >= s.size()) break;
  }
  return out;
}

}  // namespace leavitt::text
