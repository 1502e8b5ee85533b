#pragma once

// Chain-condition verdicts with witnesses and the rules that licensed them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/rings.hpp"
#include "leavitt/verdict.hpp"

namespace leavitt {

struct AppliedRule {
  std::string id;
  std::string statement;
};

struct ClassificationWitnesses {
  std::optional<std::size_t> support_bound;        // max path length / largest |degree| in the support
  std::optional<std::string> infinite_support;     // a cycle, or the reason the support is infinite
  std::optional<std::string> ne_cycle;
  std::optional<std::string> ne_exit;
  std::vector<std::string> ne_idempotents;         // verified pairwise orthogonal idempotents
  std::optional<std::size_t> stabilization_level;  // k with (L)_0 = C_0 + ... + C_k
  std::optional<std::string> degree_zero_structure;
  std::optional<std::string> trace;
  std::optional<std::string> trace_inverse;
};

struct ClassificationReport {
  std::string subject;
  Verdict noetherian_left = Verdict::unknown;
  Verdict noetherian_right = Verdict::unknown;
  Verdict artinian_left = Verdict::unknown;
  Verdict artinian_right = Verdict::unknown;
  Verdict semisimple = Verdict::unknown;
  ClassificationWitnesses witnesses;
  std::vector<AppliedRule> rules;
  std::vector<std::string> notes;
};

/// Number of witness idempotents attached when Condition (NE) fails.
inline constexpr std::size_t kWitnessCount = 4;

/// The rule with the given id from the built-in rule table; throws for unknown ids.
AppliedRule rule(std::string_view id);

ClassificationReport classify_lpa(const Graph& graph, const RingDescriptor& ring);

std::string to_text(const ClassificationReport& report);
/// JSON document with the field names of ClassificationReport.
std::string to_json(const ClassificationReport& report);

}  // namespace leavitt
