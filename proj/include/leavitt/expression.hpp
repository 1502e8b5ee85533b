#pragma once

// Element expressions:
//   elem   := ['-'] term (('+' | '-') term)*
//   term   := coeff | [coeff '*'] factor ('.' factor)*
//   factor := NAME ['^*']
//   coeff  := INT | INT '/' INT | '(' coeff (',' coeff)* ')'
// `^*` marks a ghost edge, `.` is multiplication, a bare coefficient c is c*1.

#include <string_view>

#include "leavitt/algebra.hpp"

namespace leavitt {

RawElement parse_expression(const LeavittAlgebra& algebra, std::string_view text);

/// parse_expression followed by normal_form.
NormalElement parse_element(const LeavittAlgebra& algebra, std::string_view text);

}  // namespace leavitt
