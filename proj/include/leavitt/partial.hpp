#pragma once

// Unital twisted partial actions of a finite group or of Z on R = K^m, where
// K is a built-in atom ring, and their crossed products. Each ideal D_g is
// generated by a 0/1 idempotent 1_g; alpha_g is given on the idempotent basis
// e_1..e_m of D_{g^-1}.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leavitt/classify.hpp"
#include "leavitt/graded.hpp"
#include "leavitt/group.hpp"
#include "leavitt/rings.hpp"

namespace leavitt {

class PartialActionSystem {
 public:
  struct Twist {
    RingValue value;
    RingValue inverse;
  };

  /// `support` applies to Z only: the degrees where D_g may be nonzero, or
  /// nullopt for a global action by the powers of alpha_1.
  PartialActionSystem(RingDescriptor ring, Group group, std::optional<std::set<GroupElement>> support,
                      std::map<GroupElement, RingValue> units, std::map<GroupElement, std::vector<RingValue>> alpha,
                      std::map<std::pair<GroupElement, GroupElement>, Twist> twists);

  /// Reads the partial-action file format:
  ///   ring: Q x Q x Q
  ///   group: Z support -1 0 1    (or `group: Z support all`, or `group: table` as for graded algebras)
  ///   unit 1 = (1,0,0)
  ///   alpha 1: e2 -> e1
  ///   twist g h = (1,1) inverse (1,1)
  static PartialActionSystem parse(std::string_view text);

  const RingDescriptor& ring() const { return ring_; }
  /// The atom ring K with R = K^m.
  const RingDescriptor& scalars() const { return scalars_; }
  std::size_t rank() const { return ring_.arity(); }
  const Group& group() const { return group_; }
  bool finite_support() const { return !group_.is_integers() || support_.has_value(); }
  /// Degrees where D_g may be nonzero (Z with full support: [-3, 3] as a sample).
  std::vector<GroupElement> declared_degrees() const;
  /// Degrees the axioms are quantified over.
  std::vector<GroupElement> quantified_degrees() const;

  RingValue unit(GroupElement g) const;
  /// alpha_g(r 1_{g^-1}).
  RingValue apply(GroupElement g, const RingValue& r) const;
  Twist twist(GroupElement g, GroupElement h) const;
  RingValue basis_element(std::size_t j) const;
  std::vector<std::size_t> ideal_basis(const RingValue& idempotent) const;
  std::string basis_name(std::size_t j) const { return "e" + std::to_string(j + 1); }

 private:
  std::vector<RingValue> images(GroupElement g) const;

  RingDescriptor ring_;
  RingDescriptor scalars_;
  Group group_;
  std::optional<std::set<GroupElement>> support_;
  std::map<GroupElement, RingValue> units_;
  std::map<GroupElement, std::vector<RingValue>> alpha_;
  std::map<std::pair<GroupElement, GroupElement>, Twist> twists_;
};

struct AxiomResult {
  std::string name;
  bool holds = true;
  std::string failure;  // first failing instance
};

struct AxiomReport {
  /// "well-formed" (ideals, isomorphisms, twist inverses), then P1..P5.
  std::vector<AxiomResult> results;
  bool all_pass() const;
  const AxiomResult& operator[](std::string_view name) const;
};

AxiomReport check_axioms(const PartialActionSystem& s);

/// Basis e_j delta_g over K. Throws PreconditionError unless all axioms hold
/// and the support is finite.
GradedAlgebra crossed_product(const PartialActionSystem& s);

ClassificationReport classify_crossed(const PartialActionSystem& s);

}  // namespace leavitt
