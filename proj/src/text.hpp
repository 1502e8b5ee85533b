#pragma once

// Small helpers shared by the line-oriented file parsers.

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace leavitt::text {

inline bool valid_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Line {
  std::size_t number;
  std::string_view text;  // trimmed, comment removed, never empty
};

/// Non-empty lines with their 1-based line numbers; '#' starts a comment.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t pos = 0, number = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++number;
    auto line = trim(raw.substr(0, raw.find('#')));
    if (!line.empty()) out.push_back({number, line});
  }
  return out;
}

/// Splits "key rest" at the first occurrence of `sep`; false when absent.
inline bool split_once(std::string_view s, std::string_view sep, std::string_view& head, std::string_view& tail) {
  auto at = s.find(sep);
  if (at == std::string_view::npos) return false;
  head = trim(s.substr(0, at));
  tail = trim(s.substr(at + sep.size()));
  return true;
}

}  // namespace leavitt::text
