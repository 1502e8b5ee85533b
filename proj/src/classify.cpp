#include "leavitt/classify.hpp"

#include <array>
#include <sstream>

#include "json.hpp"

#include "leavitt/algebra.hpp"
#include "leavitt/errors.hpp"
#include "leavitt/structure.hpp"

namespace leavitt {

namespace {

struct RuleText {
  std::string_view id;
  std::string_view statement;
};

constexpr std::array kRules{
    RuleText{"lpa-noetherian-iff-ne-and-coefficients",
             "For a finite graph E, L_R(E) is left (right) noetherian exactly when E satisfies Condition (NE) "
             "and R is left (right) noetherian."},
    RuleText{"lpa-artinian-iff-acyclic-and-coefficients",
             "For a finite graph E, L_R(E) is left (right) artinian exactly when E is acyclic and R is left "
             "(right) artinian."},
    RuleText{"lpa-semisimple-necessary", "If L_R(E) is semisimple, then E is finite and acyclic and R is semisimple."},
    RuleText{"lpa-semisimple-sufficient",
             "If E is finite and acyclic, R is semisimple and every nonzero integer is a unit of R, then the "
             "trace of the identity is invertible in degree zero and L_R(E) is semisimple."},
    RuleText{"semisimple-integer-hypothesis-gap",
             "E is acyclic and R is semisimple, but some nonzero integer is not a unit of R; no implemented rule "
             "decides semisimplicity in this case."},
    RuleText{"ne-failure-orthogonal-idempotents",
             "A cycle gamma with an exit alpha gives the distinct pairwise orthogonal idempotents "
             "gamma^n alpha alpha* (gamma*)^n, n >= 0, so L_R(E) is neither left nor right noetherian."},
    RuleText{"cycle-infinite-support",
             "A cycle gives nonzero homogeneous components in infinitely many degrees; an epsilon-strongly "
             "graded ring with infinite support over Z is not left or right artinian."},
    RuleText{"degree-zero-finitely-generated",
             "Under Condition (NE) the degree-zero component equals C_0 + ... + C_k, with k the first level where "
             "C_{k+1} adds nothing."},
    RuleText{"degree-zero-matrix-product", "D_k is isomorphic to a finite product of full matrix rings over R."},
    RuleText{"crossed-noetherian-iff-coefficients",
             "An epsilon-strongly graded ring over a polycyclic-by-finite group (a finite group or Z here) is left "
             "(right) noetherian exactly when its principal component is; for a partial crossed product that "
             "component is R."},
    RuleText{"crossed-artinian-torsion-free",
             "Over the torsion-free group Z a partial crossed product is left (right) artinian exactly when R is "
             "left (right) artinian and D_g = 0 for all but finitely many g."},
    RuleText{"artinian-finite-support-sufficient",
             "An epsilon-strongly graded ring with finite support whose principal component is left (right) "
             "artinian is left (right) artinian."},
    RuleText{"artinian-principal-necessary",
             "If a group graded ring is left (right) artinian, then so is its principal component."},
    RuleText{"semisimple-implies-artinian", "A semisimple ring is artinian, so failing artinian rules out semisimple."},
};

std::string sided(Verdict left, Verdict right) {
  if (left == right) return std::string(to_string(left));
  return "left " + std::string(to_string(left)) + ", right " + std::string(to_string(right));
}

}  // namespace

AppliedRule rule(std::string_view id) {
  for (const auto& r : kRules)
    if (r.id == id) return {std::string(r.id), std::string(r.statement)};
  throw Error("unknown rule id " + std::string(id));
}

ClassificationReport classify_lpa(const Graph& graph, const RingDescriptor& ring) {
  auto alg = LeavittAlgebra::create(graph, ring);
  const GraphReport& g = alg->report();
  const RingFlags flags = ring_flags(ring);
  ClassificationReport rep;
  rep.subject = "L_{" + ring.to_string() + "}(E), " + std::to_string(graph.vertex_count()) + " vertices, " +
                std::to_string(graph.edge_count()) + " edges";

  rep.noetherian_left = verdict_of(g.condition_ne && flags.noetherian_left);
  rep.noetherian_right = verdict_of(g.condition_ne && flags.noetherian_right);
  rep.rules.push_back(rule("lpa-noetherian-iff-ne-and-coefficients"));
  if (!g.condition_ne) {
    const ExitWitness& w = *g.ne_witness;
    rep.witnesses.ne_cycle = graph.path_to_string(w.cycle);
    rep.witnesses.ne_exit = graph.edge(w.exit).name;
    auto family = ne_witness_idempotents(*alg, w, kWitnessCount);
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i] * family[i] != family[i] || family[i].is_zero()) throw Error("witness is not a nonzero idempotent");
      for (std::size_t j = 0; j < family.size(); ++j)
        if (i != j && (!(family[i] * family[j]).is_zero() || family[i] == family[j]))
          throw Error("witnesses are not distinct and orthogonal");
      rep.witnesses.ne_idempotents.push_back(family[i].to_string());
    }
    rep.rules.push_back(rule("ne-failure-orthogonal-idempotents"));
  } else {
    auto cm = cm_filtration(*alg);
    rep.witnesses.stabilization_level = cm.level;
    rep.witnesses.degree_zero_structure = dn_structure(*alg, cm.level).describe();
    rep.rules.push_back(rule("degree-zero-finitely-generated"));
    rep.rules.push_back(rule("degree-zero-matrix-product"));
  }

  rep.artinian_left = verdict_of(g.acyclic && flags.artinian_left);
  rep.artinian_right = verdict_of(g.acyclic && flags.artinian_right);
  rep.rules.push_back(rule("lpa-artinian-iff-acyclic-and-coefficients"));
  if (g.acyclic) {
    rep.witnesses.support_bound = g.max_path_length;
  } else {
    rep.witnesses.infinite_support = "cycle " + graph.path_to_string(*g.cycle_witness) + " gives paths of every length";
    rep.rules.push_back(rule("cycle-infinite-support"));
  }

  if (!g.acyclic || !flags.semisimple) {
    rep.semisimple = Verdict::no;
    rep.rules.push_back(rule("lpa-semisimple-necessary"));
  } else if (flags.all_nonzero_integers_invertible) {
    auto sys = trace_inverse(*alg);
    rep.witnesses.trace = sys.trace.to_string();
    rep.witnesses.trace_inverse = sys.inverse.to_string();
    rep.semisimple = Verdict::yes;
    rep.rules.push_back(rule("lpa-semisimple-sufficient"));
  } else {
    rep.semisimple = Verdict::unknown;
    rep.rules.push_back(rule("semisimple-integer-hypothesis-gap"));
    rep.notes.push_back(ring.to_string() + " is semisimple but does not invert every nonzero integer");
  }
  return rep;
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "subject: " << r.subject << "\n";
  out << "noetherian: " << sided(r.noetherian_left, r.noetherian_right) << "\n";
  out << "artinian: " << sided(r.artinian_left, r.artinian_right) << "\n";
  out << "semisimple: " << to_string(r.semisimple) << "\n";
  const auto& w = r.witnesses;
  out << "witnesses:\n";
  if (w.support_bound) out << "  support bound: " << *w.support_bound << "\n";
  if (w.infinite_support) out << "  infinite support: " << *w.infinite_support << "\n";
  if (w.ne_cycle) out << "  cycle with exit: " << *w.ne_cycle << ", exit " << *w.ne_exit << "\n";
  if (!w.ne_idempotents.empty()) {
    out << "  orthogonal idempotents:\n";
    for (const auto& x : w.ne_idempotents) out << "    " << x << "\n";
  }
  if (w.stabilization_level) out << "  stabilization level: " << *w.stabilization_level << "\n";
  if (w.degree_zero_structure) out << "  degree zero: " << *w.degree_zero_structure << "\n";
  if (w.trace) out << "  trace: " << *w.trace << "\n";
  if (w.trace_inverse) out << "  trace inverse: " << *w.trace_inverse << "\n";
  out << "rules:\n";
  for (const auto& rule : r.rules) out << "  [" << rule.id << "] " << rule.statement << "\n";
  if (!r.notes.empty()) {
    out << "notes:\n";
    for (const auto& n : r.notes) out << "  " << n << "\n";
  }
  return out.str();
}

std::string to_json(const ClassificationReport& r) {
  using nlohmann::json;
  auto opt = [](const auto& x) -> json { return x ? json(*x) : json(nullptr); };
  const auto& w = r.witnesses;
  json witnesses = {
      {"support_bound", opt(w.support_bound)},
      {"infinite_support", opt(w.infinite_support)},
      {"ne_cycle", opt(w.ne_cycle)},
      {"ne_exit", opt(w.ne_exit)},
      {"ne_idempotents", w.ne_idempotents},
      {"stabilization_level", opt(w.stabilization_level)},
      {"degree_zero_structure", opt(w.degree_zero_structure)},
      {"trace", opt(w.trace)},
      {"trace_inverse", opt(w.trace_inverse)},
  };
  json rules = json::array();
  for (const auto& rule : r.rules) rules.push_back({{"id", rule.id}, {"statement", rule.statement}});
  json doc = {
      {"subject", r.subject},
      {"noetherian_left", to_string(r.noetherian_left)},
      {"noetherian_right", to_string(r.noetherian_right)},
      {"artinian_left", to_string(r.artinian_left)},
      {"artinian_right", to_string(r.artinian_right)},
      {"semisimple", to_string(r.semisimple)},
      {"witnesses", witnesses},
      {"rules", rules},
      {"notes", r.notes},
  };
  return doc.dump(2);
}

}  // namespace leavitt
