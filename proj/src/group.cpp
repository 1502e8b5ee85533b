#include "leavitt/group.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>

#include "leavitt/errors.hpp"

namespace leavitt {

Group Group::integers() { return Group{}; }

Group Group::finite(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = names.size();
  if (n == 0) throw PreconditionError("a finite group needs at least one element");
  if (std::set<std::string>(names.begin(), names.end()).size() != n)
    throw PreconditionError("duplicate group element names");
  if (table.size() != n) throw PreconditionError("group table has wrong number of rows");
  for (const auto& row : table) {
    if (row.size() != n) throw PreconditionError("group table row has wrong length");
    for (auto x : row)
      if (x >= n) throw PreconditionError("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw PreconditionError("group table is not associative at (" + names[a] + ", " + names[b] + ", " +
                                  names[c] + ")");
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw PreconditionError("group table has no identity element");
  std::vector<std::size_t> inverses(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto it = std::find(table[a].begin(), table[a].end(), *identity);
    if (it == table[a].end()) throw PreconditionError("element " + names[a] + " has no inverse");
    std::size_t b = static_cast<std::size_t>(it - table[a].begin());
    if (table[b][a] != *identity) throw PreconditionError("element " + names[a] + " has no two-sided inverse");
    inverses[a] = b;
  }
  Group g;
  g.integers_ = false;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.inverses_ = std::move(inverses);
  g.identity_ = static_cast<GroupElement>(*identity);
  return g;
}

Group Group::cyclic(std::uint64_t n) {
  if (n == 0) throw PreconditionError("cyclic group of order 0");
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return finite(std::move(names), std::move(table));
}

GroupElement Group::multiply(GroupElement a, GroupElement b) const {
  if (integers_) return a + b;
  return static_cast<GroupElement>(table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
}

GroupElement Group::inverse(GroupElement a) const {
  if (integers_) return -a;
  return static_cast<GroupElement>(inverses_[static_cast<std::size_t>(a)]);
}

std::string Group::name(GroupElement a) const {
  if (integers_) return std::to_string(a);
  return names_[static_cast<std::size_t>(a)];
}

GroupElement Group::parse_element(std::string_view text) const {
  if (integers_) {
    GroupElement v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
      throw ParseError("expected an integer group element, got '" + std::string(text) + "'");
    return v;
  }
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == text) return static_cast<GroupElement>(i);
  throw ParseError("unknown group element '" + std::string(text) + "'");
}

std::vector<GroupElement> Group::elements() const {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(static_cast<GroupElement>(i));
  return out;
}

bool Group::contains(GroupElement a) const {
  return integers_ || (a >= 0 && static_cast<std::size_t>(a) < names_.size());
}

bool Group::is_subgroup(const std::vector<GroupElement>& h) const {
  if (integers_) throw PreconditionError("is_subgroup expects a finite group");
  std::set<GroupElement> set(h.begin(), h.end());
  if (!set.count(identity_)) return false;
  for (auto a : set) {
    if (!contains(a) || !set.count(inverse(a))) return false;
    for (auto b : set)
      if (!set.count(multiply(a, b))) return false;
  }
  return true;
}

bool Group::is_normal_subgroup(const std::vector<GroupElement>& n) const {
  if (!is_subgroup(n)) return false;
  std::set<GroupElement> set(n.begin(), n.end());
  for (auto g : elements())
    for (auto x : set)
      if (!set.count(multiply(multiply(g, x), inverse(g)))) return false;
  return true;
}

}  // namespace leavitt
