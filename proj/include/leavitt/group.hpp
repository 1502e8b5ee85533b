#pragma once

// Grading groups: the integers, or a finite group given by its table.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace leavitt {

/// An integer for Z, an element index for a finite group.
using GroupElement = std::int64_t;

class Group {
 public:
  static Group integers();
  /// Validates closure, associativity, identity and inverses; throws PreconditionError.
  static Group finite(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table);
  /// Z/n with elements named "0".."n-1".
  static Group cyclic(std::uint64_t n);

  bool is_integers() const { return integers_; }
  /// 0 for the integers.
  std::size_t order() const { return names_.size(); }
  GroupElement identity() const { return identity_; }
  GroupElement multiply(GroupElement a, GroupElement b) const;
  GroupElement inverse(GroupElement a) const;
  std::string name(GroupElement a) const;
  /// Throws ParseError for unknown names.
  GroupElement parse_element(std::string_view text) const;
  /// Finite groups only.
  std::vector<GroupElement> elements() const;
  const std::vector<std::string>& names() const { return names_; }
  bool contains(GroupElement a) const;

  /// H closed under products and inverses (finite groups).
  bool is_subgroup(const std::vector<GroupElement>& h) const;
  bool is_normal_subgroup(const std::vector<GroupElement>& n) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.integers_ == b.integers_ && a.names_ == b.names_ && a.table_ == b.table_;
  }

 private:
  bool integers_ = true;
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverses_;
  GroupElement identity_ = 0;
};

}  // namespace leavitt
