#pragma once

#include <string_view>

namespace leavitt {

enum class Verdict { yes, no, unknown };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

constexpr Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }

}  // namespace leavitt
