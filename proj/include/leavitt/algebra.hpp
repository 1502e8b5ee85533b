#pragma once

// Leavitt path algebras L_R(E) of finite graphs, stored in normal form.
//
// Normal form: every element is a finite R-combination of monomials
// alpha beta* with r(alpha) = r(beta), where alpha and beta do not both end
// in the special edge of a regular vertex (the first edge leaving that
// vertex in declaration order). Any other monomial is rewritten with
//   e e* = s(e) - sum_{f in s^{-1}(s(e)), f != e} f f*.
// These monomials form a free R-basis, so equality is coefficientwise.

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/rings.hpp"

namespace leavitt {

/// alpha beta*: `real` is alpha, `ghost` is beta.
struct Monomial {
  Path real;
  Path ghost;

  int degree() const { return static_cast<int>(real.length()) - static_cast<int>(ghost.length()); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.real.length() <=> b.real.length(); c != 0) return c;
    if (auto c = a.ghost.length() <=> b.ghost.length(); c != 0) return c;
    if (auto c = a.real <=> b.real; c != 0) return c;
    return a.ghost <=> b.ghost;
  }
};

/// One letter of a formal word: a vertex, an edge or a ghost edge.
struct Generator {
  enum class Kind { vertex, edge, ghost };
  Kind kind;
  std::uint32_t id;

  friend bool operator==(const Generator&, const Generator&) = default;
};

struct RawTerm {
  RingValue coefficient;
  std::vector<Generator> word;
};

/// A formal, unreduced sum of coefficient-weighted words.
using RawElement = std::vector<RawTerm>;

class LeavittAlgebra;

class NormalElement {
 public:
  using Terms = std::map<Monomial, RingValue>;

  NormalElement(std::shared_ptr<const LeavittAlgebra> algebra, Terms terms);

  const LeavittAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const LeavittAlgebra>& context() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Degree when all terms share one degree (zero is homogeneous of every degree).
  std::optional<int> homogeneous_degree() const;

  /// Same grammar the expression parser reads, e.g. "v1 - 1/2*e.e^*".
  std::string to_string() const;

  NormalElement operator-() const;
  friend NormalElement operator+(const NormalElement& a, const NormalElement& b);
  friend NormalElement operator-(const NormalElement& a, const NormalElement& b);
  friend NormalElement operator*(const NormalElement& a, const NormalElement& b);
  friend NormalElement operator*(const RingValue& c, const NormalElement& a);

  friend bool operator==(const NormalElement& a, const NormalElement& b);

 private:
  std::shared_ptr<const LeavittAlgebra> algebra_;
  Terms terms_;
};

class LeavittAlgebra : public std::enable_shared_from_this<LeavittAlgebra> {
 public:
  static std::shared_ptr<const LeavittAlgebra> create(Graph graph, RingDescriptor ring);

  const Graph& graph() const { return graph_; }
  const RingDescriptor& ring() const { return ring_; }
  const GraphReport& report() const { return report_; }

  NormalElement zero() const;
  /// sum of all vertices, the identity of L_R(E).
  NormalElement one() const;
  NormalElement vertex(VertexId v) const;
  NormalElement edge(EdgeId e) const;
  NormalElement ghost(EdgeId e) const;
  NormalElement generator(const Generator& g) const;
  /// c * alpha beta*, reduced. Throws PreconditionError unless r(alpha) = r(beta).
  NormalElement monomial(const Path& real, const Path& ghost, const RingValue& c) const;
  NormalElement monomial(const Path& real, const Path& ghost) const;
  NormalElement scalar(const RingValue& c) const;

  /// Reduces a formal word sum. Throws PreconditionError on unknown generator ids.
  NormalElement normal_form(const RawElement& raw) const;

  NormalElement multiply(const NormalElement& a, const NormalElement& b) const;

  bool is_reduced(const Monomial& m) const;

  /// Adds c * alpha beta* (not necessarily reduced) into `out` in reduced form.
  void accumulate(NormalElement::Terms& out, const Path& real, const Path& ghost, const RingValue& c) const;

  std::string monomial_to_string(const Monomial& m) const;

 private:
  LeavittAlgebra(Graph graph, RingDescriptor ring);

  Graph graph_;
  RingDescriptor ring_;
  GraphReport report_;
};

/// alpha followed by beta; requires r(alpha) = s(beta).
Path concat(const Path& alpha, const Path& beta);

/// The product (alpha beta*)(gamma delta*) as a single unreduced monomial,
/// or nullopt when it vanishes.
std::optional<Monomial> multiply_monomials(const Monomial& a, const Monomial& b);

/// x = sum of its homogeneous parts, keyed by degree.
std::map<int, NormalElement> degree_decompose(const NormalElement& x);

}  // namespace leavitt
