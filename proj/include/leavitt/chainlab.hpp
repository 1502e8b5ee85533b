#pragma once

// Brute-force oracles over finite Z-graded rings: every right ideal, the
// leading-coefficient ideals Id_n(I), and the separation property of
// nested ideal pairs.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "leavitt/graded.hpp"

namespace leavitt {

inline constexpr std::size_t kDefaultElementCap = 4096;

/// A finite ring given as a Z-graded algebra over Z/n (or a product of such),
/// with every element enumerated. Elements are indices in mixed radix.
class FiniteRingInstance {
 public:
  using Element = std::size_t;

  /// Throws PreconditionError unless the coefficients are finite, the grading is by Z
  /// and every product is known; throws CapExceeded above `cap` elements.
  explicit FiniteRingInstance(GradedAlgebra algebra, std::size_t cap = kDefaultElementCap);
  /// A coefficient ring viewed as trivially graded (everything in degree 0).
  static FiniteRingInstance trivially_graded(const RingDescriptor& ring, std::size_t cap = kDefaultElementCap);

  const GradedAlgebra& algebra() const { return algebra_; }
  std::size_t size() const { return size_; }
  Element zero() const { return 0; }
  Element add(Element a, Element b) const;
  Element multiply(Element a, Element b) const;
  Coordinates decode(Element x) const;
  Element encode(const Coordinates& x) const;
  std::string render(Element x) const { return algebra_.render(decode(x)); }

  /// Additive generators g (one per basis element and ring component) with
  /// their right multiplication maps x -> x g.
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<Element>& right_map(std::size_t k) const { return right_maps_[k]; }
  bool generator_in_degree_zero(std::size_t k) const;

  /// Degrees of the nonzero homogeneous parts of x.
  std::vector<GroupElement> support(Element x) const;
  /// The degree-0 part of x.
  Element degree_zero_part(Element x) const;
  GroupElement min_degree() const { return min_degree_; }

 private:
  std::vector<unsigned> digits(Element x) const;
  Element from_digits(const std::vector<unsigned>& d) const;

  GradedAlgebra algebra_;
  std::vector<unsigned> radix_;  // digit (basis k, component c) at position k * arity + c
  std::size_t size_ = 1;
  std::vector<Element> generators_;
  std::vector<std::vector<Element>> right_maps_;
  GroupElement min_degree_ = 0;
};

using ElementSet = boost::dynamic_bitset<>;

struct RightIdeal {
  ElementSet members;
  std::vector<FiniteRingInstance::Element> generators;  // additive generators
  std::size_t size() const { return members.count(); }
};

/// The smallest right ideal containing `seeds`.
RightIdeal right_ideal_closure(const FiniteRingInstance& s, const std::vector<FiniteRingInstance::Element>& seeds);

/// Every right ideal, sorted by size and then by membership bits.
std::vector<RightIdeal> enumerate_right_ideals(const FiniteRingInstance& s);

/// The members are closed under addition and right multiplication by every element.
bool is_right_ideal(const FiniteRingInstance& s, const ElementSet& members);

struct LeadingIdeal {
  std::size_t n;
  ElementSet members;  // a subset of the degree-0 component
  bool is_right_ideal = false;  // a right ideal of the degree-0 component
};

LeadingIdeal leading_ideal(const FiniteRingInstance& s, const ElementSet& ideal, std::size_t n);

struct SeparationReport {
  std::size_t ideal_count = 0;
  std::size_t nested_pairs = 0;
  std::size_t largest_n = 1;        // Id_n is examined for 1 <= n <= largest_n
  std::size_t max_discriminating_n = 0;
  bool monotone = true;             // Id_n(I) inside Id_m(I) for n <= m
  bool leading_ideals_valid = true;  // every Id_n(I) is a right ideal of the degree-0 component
  std::optional<std::pair<std::size_t, std::size_t>> failure;  // (J, I) indices with equal Id_n for all n
  bool pass() const { return monotone && leading_ideals_valid && !failure; }
};

SeparationReport verify_separation(const FiniteRingInstance& s);

}  // namespace leavitt
