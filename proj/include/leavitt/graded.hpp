#pragma once

// Finite-dimensional G-graded algebras given by structure constants on a
// homogeneous basis. Products that a windowed model cannot evaluate are
// stored as unknown and never treated as zero.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leavitt/group.hpp"
#include "leavitt/linalg.hpp"
#include "leavitt/rings.hpp"
#include "leavitt/verdict.hpp"

namespace leavitt {

using Coordinates = linalg::Vector;

class GradedAlgebra {
 public:
  /// products[i][j] is b_i * b_j in basis coordinates, nullopt when unknown.
  GradedAlgebra(RingDescriptor ring, Group group, std::vector<std::string> basis,
                std::vector<GroupElement> degrees, std::vector<std::vector<std::optional<Coordinates>>> products,
                std::optional<std::int64_t> window = std::nullopt);

  const RingDescriptor& ring() const { return ring_; }
  const Group& group() const { return group_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::string& basis_name(std::size_t i) const { return basis_[i]; }
  const std::vector<std::string>& basis_names() const { return basis_; }
  GroupElement degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  std::optional<std::int64_t> window() const { return window_; }
  const std::optional<Coordinates>& product(std::size_t i, std::size_t j) const { return products_[i][j]; }
  std::optional<std::size_t> find_basis(std::string_view name) const;

  Coordinates zero() const;
  Coordinates unit_vector(std::size_t i) const;
  /// nullopt when some needed basis product is unknown.
  std::optional<Coordinates> multiply(const Coordinates& x, const Coordinates& y) const;

  /// Basis indices of degree g.
  std::vector<std::size_t> component(GroupElement g) const;
  std::set<GroupElement> support() const;
  bool has_unknown_products() const;
  std::string render(const Coordinates& x) const;

 private:
  RingDescriptor ring_;
  Group group_;
  std::vector<std::string> basis_;
  std::vector<GroupElement> degrees_;
  std::vector<std::vector<std::optional<Coordinates>>> products_;
  std::optional<std::int64_t> window_;
};

struct ValidationReport {
  bool degrees_respected = true;
  std::optional<std::pair<std::size_t, std::size_t>> degree_failure;
  /// unknown when some triple involves an unknown product and no failure was found.
  Verdict associative = Verdict::yes;
  std::optional<std::array<std::size_t, 3>> associativity_failure;
  std::size_t indeterminate_triples = 0;
  bool ok() const { return degrees_respected && associative != Verdict::no; }
};

ValidationReport validate(const GradedAlgebra& a);

struct GradingReport {
  Verdict symmetric = Verdict::yes;
  std::optional<GroupElement> symmetric_witness;
  Verdict strong = Verdict::yes;
  std::optional<std::pair<GroupElement, GroupElement>> strong_witness;
  Verdict epsilon_strong = Verdict::yes;
  std::optional<GroupElement> epsilon_witness;
  std::map<GroupElement, Coordinates> epsilon_units;
  std::set<GroupElement> support;
  /// Degrees whose verdict could not be decided inside the window.
  std::vector<std::string> notes;
};

GradingReport grading_check(const GradedAlgebra& a);

/// The degrees a check ranges over: every element of a finite group, the
/// window for windowed Z-gradings, and the support closure otherwise.
std::vector<GroupElement> examined_degrees(const GradedAlgebra& a);

/// S(H) for a finite subgroup H (element list). Throws PreconditionError if H is not a subgroup.
GradedAlgebra restrict_subgroup(const GradedAlgebra& a, const std::vector<GroupElement>& h);
/// S(kZ) for a Z-grading, re-indexed by d -> d / k.
GradedAlgebra restrict_subgroup(const GradedAlgebra& a, std::int64_t k);

/// The induced G/N grading for a finite normal subgroup N.
GradedAlgebra induce_quotient(const GradedAlgebra& a, const std::vector<GroupElement>& n);
/// The induced Z/k grading of a Z-grading; a window must be a multiple of k.
GradedAlgebra induce_quotient(const GradedAlgebra& a, std::int64_t k);

/// Reads the graded-algebra file format:
///   ring: Q
///   group: Z [window B]     or    group: table / elements: ... / row X: ...
///   total: yes              (omitted products are zero rather than unknown)
///   basis: a b c
///   deg a = g
///   mul a b = 2*c - 1/2*a
GradedAlgebra parse_graded(std::string_view text);
std::string to_text(const GradedAlgebra& a);

/// A linear combination of basis names, e.g. "e1_0 - 2*e2_1".
Coordinates parse_coordinates(const GradedAlgebra& a, std::string_view text);

/// R[X^2, X^-2] truncated to |degree| <= bound (bound even, >= 2).
GradedAlgebra laurent_even_example(std::int64_t bound, const RingDescriptor& ring);

}  // namespace leavitt
