#pragma once

// Exact coefficient rings: Z, Q, Z/n and finite products of these.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace leavitt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct RingAtom {
  enum class Kind { integers, rationals, modular };

  Kind kind = Kind::integers;
  std::uint64_t modulus = 0;  // only meaningful for Kind::modular, always >= 2

  friend bool operator==(const RingAtom&, const RingAtom&) = default;
};

/// Structural metadata consumed by the classification rules.
struct RingFlags {
  bool noetherian_left = false;
  bool noetherian_right = false;
  bool artinian_left = false;
  bool artinian_right = false;
  bool semisimple = false;
  bool all_nonzero_integers_invertible = false;

  friend bool operator==(const RingFlags&, const RingFlags&) = default;
};

class RingValue;

/// A built-in coefficient ring. Cheap to copy: the atom list is shared.
/// Products are always flat, and a product of one atom is that atom.
class RingDescriptor {
 public:
  /// Defaults to the integers.
  RingDescriptor();

  static RingDescriptor integers();
  static RingDescriptor rationals();
  /// Throws PreconditionError when n < 2.
  static RingDescriptor modular(std::uint64_t n);
  static RingDescriptor product(const std::vector<RingDescriptor>& factors);

  std::span<const RingAtom> atoms() const { return *atoms_; }
  std::size_t arity() const { return atoms_->size(); }
  bool is_product() const { return atoms_->size() > 1; }
  const RingAtom& atom(std::size_t i) const { return (*atoms_)[i]; }

  /// Canonical rendering in the input grammar, e.g. "Z/4 x Q".
  std::string to_string() const;

  RingValue zero() const;
  RingValue one() const;
  RingValue from_integer(const BigInt& n) const;
  /// Parses an integer, a fraction p/q, or a tuple (a,b,...) for products.
  /// A scalar literal is broadcast to every factor of a product.
  RingValue parse_value(std::string_view text) const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    return a.atoms_ == b.atoms_ || *a.atoms_ == *b.atoms_;
  }

 private:
  explicit RingDescriptor(std::vector<RingAtom> atoms);

  std::shared_ptr<const std::vector<RingAtom>> atoms_;
};

/// Parses `atom (" x " atom)*` with `atom := "Z" | "Q" | "Z/" int`.
RingDescriptor parse_ring(std::string_view text);

RingFlags ring_flags(const RingDescriptor& ring);

bool is_squarefree(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// An element of a built-in ring. Each component is stored as a Rational:
/// integral for Z, canonical residue in [0, n) for Z/n.
class RingValue {
 public:
  RingValue() = default;
  RingValue(RingDescriptor ring, std::vector<Rational> parts);

  const RingDescriptor& ring() const { return ring_; }
  std::span<const Rational> parts() const { return parts_; }
  const Rational& part(std::size_t i) const { return parts_[i]; }

  bool is_zero() const;
  bool is_one() const;

  /// Multiplicative inverse, or nullopt when x is not a unit.
  std::optional<RingValue> inverse() const;

  std::string to_string() const;

  RingValue operator-() const;
  friend RingValue operator+(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a, const RingValue& b);
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  RingValue& operator+=(const RingValue& b) { return *this = *this + b; }
  RingValue& operator-=(const RingValue& b) { return *this = *this - b; }
  RingValue& operator*=(const RingValue& b) { return *this = *this * b; }

  friend bool operator==(const RingValue& a, const RingValue& b) {
    return a.ring_ == b.ring_ && a.parts_ == b.parts_;
  }

 private:
  RingDescriptor ring_;
  std::vector<Rational> parts_;
};

/// Reduces a rational into the canonical payload for one atom.
/// Throws PreconditionError when it has no image (e.g. 1/2 in Z).
Rational canonical_part(const RingAtom& atom, const Rational& x);

/// Inverse of one component, nullopt when not a unit.
std::optional<Rational> invert_part(const RingAtom& atom, const Rational& x);

}  // namespace leavitt
