#include "leavitt/chainlab.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "leavitt/errors.hpp"

namespace leavitt {

FiniteRingInstance::FiniteRingInstance(GradedAlgebra algebra, std::size_t cap) : algebra_(std::move(algebra)) {
  const RingDescriptor& ring = algebra_.ring();
  if (!algebra_.group().is_integers()) throw PreconditionError("leading ideals need a Z-grading");
  if (algebra_.has_unknown_products()) throw PreconditionError("every product must be known");
  for (const auto& a : ring.atoms())
    if (a.kind != RingAtom::Kind::modular) throw PreconditionError("coefficient ring " + ring.to_string() + " is infinite");
  for (std::size_t k = 0; k < algebra_.dimension(); ++k)
    for (const auto& a : ring.atoms()) {
      radix_.push_back(static_cast<unsigned>(a.modulus));
      if (size_ > cap / a.modulus)
        throw CapExceeded("ring has more than " + std::to_string(cap) + " elements");
      size_ *= a.modulus;
    }
  for (auto d : algebra_.degrees()) min_degree_ = std::min(min_degree_, d);
  for (std::size_t pos = 0; pos < radix_.size(); ++pos) {
    std::vector<unsigned> d(radix_.size(), 0);
    d[pos] = 1;
    generators_.push_back(from_digits(d));
  }
  for (auto g : generators_) {
    const Coordinates gc = decode(g);
    std::vector<Element> map(size_);
    for (Element x = 0; x < size_; ++x) map[x] = encode(*algebra_.multiply(decode(x), gc));
    right_maps_.push_back(std::move(map));
  }
}

FiniteRingInstance FiniteRingInstance::trivially_graded(const RingDescriptor& ring, std::size_t cap) {
  std::vector<std::vector<std::optional<Coordinates>>> products{{Coordinates{ring.one()}}};
  return FiniteRingInstance(GradedAlgebra(ring, Group::integers(), {"one"}, {0}, std::move(products)), cap);
}

std::vector<unsigned> FiniteRingInstance::digits(Element x) const {
  std::vector<unsigned> d(radix_.size());
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    d[i] = static_cast<unsigned>(x % radix_[i]);
    x /= radix_[i];
  }
  return d;
}

FiniteRingInstance::Element FiniteRingInstance::from_digits(const std::vector<unsigned>& d) const {
  Element x = 0;
  for (std::size_t i = radix_.size(); i-- > 0;) x = x * radix_[i] + d[i];
  return x;
}

FiniteRingInstance::Element FiniteRingInstance::add(Element a, Element b) const {
  auto da = digits(a), db = digits(b);
  for (std::size_t i = 0; i < da.size(); ++i) da[i] = (da[i] + db[i]) % radix_[i];
  return from_digits(da);
}

FiniteRingInstance::Element FiniteRingInstance::multiply(Element a, Element b) const {
  return encode(*algebra_.multiply(decode(a), decode(b)));
}

Coordinates FiniteRingInstance::decode(Element x) const {
  const RingDescriptor& ring = algebra_.ring();
  const std::size_t arity = ring.arity();
  auto d = digits(x);
  Coordinates out;
  for (std::size_t k = 0; k < algebra_.dimension(); ++k) {
    std::vector<Rational> parts;
    for (std::size_t c = 0; c < arity; ++c) parts.emplace_back(d[k * arity + c]);
    out.emplace_back(ring, std::move(parts));
  }
  return out;
}

FiniteRingInstance::Element FiniteRingInstance::encode(const Coordinates& x) const {
  const std::size_t arity = algebra_.ring().arity();
  std::vector<unsigned> d(radix_.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t c = 0; c < arity; ++c)
      d[k * arity + c] = static_cast<unsigned>(numerator(x[k].part(c)));
  return from_digits(d);
}

bool FiniteRingInstance::generator_in_degree_zero(std::size_t k) const {
  return algebra_.degree(k / algebra_.ring().arity()) == 0;
}

std::vector<GroupElement> FiniteRingInstance::support(Element x) const {
  const std::size_t arity = algebra_.ring().arity();
  auto d = digits(x);
  std::set<GroupElement> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) out.insert(algebra_.degree(i / arity));
  return {out.begin(), out.end()};
}

FiniteRingInstance::Element FiniteRingInstance::degree_zero_part(Element x) const {
  const std::size_t arity = algebra_.ring().arity();
  auto d = digits(x);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (algebra_.degree(i / arity) != 0) d[i] = 0;
  return from_digits(d);
}

namespace {

using Element = FiniteRingInstance::Element;

// Extends `members` to the additive span of itself and g.
void add_generator(const FiniteRingInstance& s, ElementSet& members, std::vector<Element>& list, Element g) {
  std::deque<Element> queue(list.begin(), list.end());
  while (!queue.empty()) {
    Element y = s.add(queue.front(), g);
    queue.pop_front();
    if (members.test(y)) continue;
    members.set(y);
    list.push_back(y);
    queue.push_back(y);
  }
}

struct Span {
  ElementSet members;
  std::vector<Element> list;
  std::vector<Element> generators;
};

Span empty_span(const FiniteRingInstance& s) {
  Span sp{ElementSet(s.size()), {s.zero()}, {}};
  sp.members.set(s.zero());
  return sp;
}

// Closes the span under right multiplication by the additive generators of S.
void close_right(const FiniteRingInstance& s, Span& sp) {
  for (std::size_t i = 0; i < sp.generators.size(); ++i)
    for (std::size_t k = 0; k < s.generators().size(); ++k) {
      Element y = s.right_map(k)[sp.generators[i]];
      if (sp.members.test(y)) continue;
      sp.generators.push_back(y);
      add_generator(s, sp.members, sp.list, y);
    }
}

void include(const FiniteRingInstance& s, Span& sp, Element g) {
  if (sp.members.test(g)) return;
  sp.generators.push_back(g);
  add_generator(s, sp.members, sp.list, g);
}

}  // namespace

RightIdeal right_ideal_closure(const FiniteRingInstance& s, const std::vector<Element>& seeds) {
  Span sp = empty_span(s);
  for (auto x : seeds) include(s, sp, x);
  close_right(s, sp);
  return {std::move(sp.members), std::move(sp.generators)};
}

std::vector<RightIdeal> enumerate_right_ideals(const FiniteRingInstance& s) {
  // Every right ideal is a sum of principal right ideals.
  std::vector<RightIdeal> principal;
  std::set<ElementSet> seen_principal;
  for (Element x = 0; x < s.size(); ++x) {
    auto p = right_ideal_closure(s, {x});
    if (seen_principal.insert(p.members).second) principal.push_back(std::move(p));
  }
  std::map<ElementSet, RightIdeal> found;
  std::deque<ElementSet> work;
  auto zero = right_ideal_closure(s, {});
  work.push_back(zero.members);
  found.emplace(zero.members, std::move(zero));
  while (!work.empty()) {
    const RightIdeal current = found.at(work.front());
    work.pop_front();
    for (const auto& p : principal) {
      if (p.members.is_subset_of(current.members)) continue;
      Span sp = empty_span(s);
      for (auto g : current.generators) include(s, sp, g);
      for (auto g : p.generators) include(s, sp, g);
      if (found.count(sp.members)) continue;
      work.push_back(sp.members);
      found.emplace(sp.members, RightIdeal{sp.members, sp.generators});
    }
  }
  std::vector<RightIdeal> out;
  for (auto& [bits, ideal] : found) out.push_back(std::move(ideal));
  std::stable_sort(out.begin(), out.end(), [](const RightIdeal& a, const RightIdeal& b) { return a.size() < b.size(); });
  return out;
}

bool is_right_ideal(const FiniteRingInstance& s, const ElementSet& members) {
  if (!members.test(s.zero())) return false;
  for (auto x = members.find_first(); x != ElementSet::npos; x = members.find_next(x)) {
    for (auto y = members.find_first(); y != ElementSet::npos; y = members.find_next(y))
      if (!members.test(s.add(x, y))) return false;
    for (Element r = 0; r < s.size(); ++r)
      if (!members.test(s.multiply(x, r))) return false;
  }
  return true;
}

LeadingIdeal leading_ideal(const FiniteRingInstance& s, const ElementSet& ideal, std::size_t n) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  const auto low = -static_cast<GroupElement>(n) + 1;
  LeadingIdeal out{n, ElementSet(s.size()), false};
  for (auto x = ideal.find_first(); x != ElementSet::npos; x = ideal.find_next(x)) {
    auto supp = s.support(x);
    if (std::all_of(supp.begin(), supp.end(), [&](GroupElement d) { return d >= low && d <= 0; }))
      out.members.set(s.degree_zero_part(x));
  }
  bool ok = out.members.test(s.zero());
  for (auto x = out.members.find_first(); ok && x != ElementSet::npos; x = out.members.find_next(x)) {
    for (auto y = out.members.find_first(); ok && y != ElementSet::npos; y = out.members.find_next(y))
      ok = out.members.test(s.add(x, y));
    for (std::size_t k = 0; ok && k < s.generators().size(); ++k)
      if (s.generator_in_degree_zero(k)) ok = out.members.test(s.right_map(k)[x]);
  }
  out.is_right_ideal = ok;
  return out;
}

SeparationReport verify_separation(const FiniteRingInstance& s) {
  SeparationReport rep;
  const auto ideals = enumerate_right_ideals(s);
  rep.ideal_count = ideals.size();
  rep.largest_n = static_cast<std::size_t>(std::max<GroupElement>(1, 1 - s.min_degree()));
  std::vector<std::vector<ElementSet>> id(ideals.size());
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t n = 1; n <= rep.largest_n; ++n) {
      auto lead = leading_ideal(s, ideals[i].members, n);
      if (!lead.is_right_ideal) rep.leading_ideals_valid = false;
      if (!id[i].empty() && !id[i].back().is_subset_of(lead.members)) rep.monotone = false;
      id[i].push_back(std::move(lead.members));
    }
  for (std::size_t j = 0; j < ideals.size(); ++j)
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (i == j || !ideals[j].members.is_proper_subset_of(ideals[i].members)) continue;
      ++rep.nested_pairs;
      std::optional<std::size_t> first;
      for (std::size_t n = 1; n <= rep.largest_n && !first; ++n)
        if (id[j][n - 1] != id[i][n - 1]) first = n;
      if (!first) {
        if (!rep.failure) rep.failure = std::pair{j, i};
      } else {
        rep.max_discriminating_n = std::max(rep.max_discriminating_n, *first);
      }
    }
  return rep;
}

}  // namespace leavitt
