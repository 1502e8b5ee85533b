#include "leavitt/partial.hpp"

#include <algorithm>
#include <sstream>

#include "leavitt/errors.hpp"
#include "lincomb.hpp"
#include "text.hpp"

namespace leavitt {

namespace {

RingDescriptor atom_ring(const RingAtom& a) {
  switch (a.kind) {
    case RingAtom::Kind::integers:
      return RingDescriptor::integers();
    case RingAtom::Kind::rationals:
      return RingDescriptor::rationals();
    case RingAtom::Kind::modular:
      return RingDescriptor::modular(a.modulus);
  }
  return RingDescriptor::integers();
}

bool is_zero_one(const RingValue& x) {
  return std::all_of(x.parts().begin(), x.parts().end(), [](const Rational& p) { return p == 0 || p == 1; });
}

}  // namespace

PartialActionSystem::PartialActionSystem(RingDescriptor ring, Group group, std::optional<std::set<GroupElement>> support,
                                         std::map<GroupElement, RingValue> units,
                                         std::map<GroupElement, std::vector<RingValue>> alpha,
                                         std::map<std::pair<GroupElement, GroupElement>, Twist> twists)
    : ring_(std::move(ring)),
      group_(std::move(group)),
      support_(std::move(support)),
      units_(std::move(units)),
      alpha_(std::move(alpha)),
      twists_(std::move(twists)) {
  for (std::size_t i = 1; i < ring_.arity(); ++i)
    if (!(ring_.atom(i) == ring_.atom(0)))
      throw PreconditionError("the ring must be a power K x ... x K of a single ring");
  scalars_ = atom_ring(ring_.atom(0));
  if (!group_.is_integers() && support_) throw PreconditionError("a support list only applies to Z");
  if (group_.is_integers() && support_) support_->insert(0);
  for (const auto& [g, u] : units_) {
    if (!(u.ring() == ring_)) throw PreconditionError("unit " + group_.name(g) + " is not an element of R");
    if (group_.is_integers() && support_ && !support_->count(g))
      throw PreconditionError("unit " + group_.name(g) + " lies outside the declared support");
  }
  for (const auto& [g, imgs] : alpha_)
    if (imgs.size() != rank()) throw PreconditionError("alpha " + group_.name(g) + " needs one image per basis element");
  if (group_.is_integers() && !support_) {
    if (!units_.empty() || !twists_.empty())
      throw PreconditionError("a global Z action takes no unit or twist declarations");
    auto it = alpha_.find(1);
    if (it == alpha_.end()) throw PreconditionError("a global Z action needs 'alpha 1'");
    std::vector<bool> hit(rank(), false);
    for (const auto& img : it->second) {
      auto b = ideal_basis(img);
      if (b.size() != 1 || !is_zero_one(img) || hit[b[0]])
        throw PreconditionError("alpha 1 of a global Z action must permute e_1..e_m");
      hit[b[0]] = true;
    }
    for (const auto& [g, imgs] : alpha_)
      if (g != 1) throw PreconditionError("a global Z action is given by 'alpha 1' only");
  }
}

std::vector<GroupElement> PartialActionSystem::declared_degrees() const {
  if (!group_.is_integers()) return group_.elements();
  if (support_) return {support_->begin(), support_->end()};
  return {-3, -2, -1, 0, 1, 2, 3};
}

std::vector<GroupElement> PartialActionSystem::quantified_degrees() const {
  if (!group_.is_integers() || !support_) return declared_degrees();
  std::set<GroupElement> diffs;
  for (auto a : *support_)
    for (auto b : *support_) diffs.insert(a - b);
  return {diffs.begin(), diffs.end()};
}

RingValue PartialActionSystem::unit(GroupElement g) const {
  if (group_.is_integers()) {
    if (!support_) return ring_.one();
    if (!support_->count(g)) return ring_.zero();
  }
  auto it = units_.find(g);
  if (it != units_.end()) return it->second;
  return g == group_.identity() ? ring_.one() : ring_.zero();
}

RingValue PartialActionSystem::basis_element(std::size_t j) const {
  std::vector<Rational> parts(rank(), Rational(0));
  parts[j] = 1;
  return RingValue(ring_, std::move(parts));
}

std::vector<std::size_t> PartialActionSystem::ideal_basis(const RingValue& idempotent) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < rank(); ++j)
    if (idempotent.part(j) != 0) out.push_back(j);
  return out;
}

std::vector<RingValue> PartialActionSystem::images(GroupElement g) const {
  if (group_.is_integers() && !support_) {
    // powers of the permutation alpha_1
    const auto& one = alpha_.at(1);
    std::vector<std::size_t> perm(rank());
    for (std::size_t j = 0; j < rank(); ++j) perm[j] = ideal_basis(one[j])[0];
    std::vector<std::size_t> p(rank());
    for (std::size_t j = 0; j < rank(); ++j) p[j] = j;
    for (GroupElement k = 0; k < std::abs(g); ++k)
      for (std::size_t j = 0; j < rank(); ++j) p[j] = perm[p[j]];
    std::vector<RingValue> out(rank(), ring_.zero());
    for (std::size_t j = 0; j < rank(); ++j) {
      if (g >= 0)
        out[j] = basis_element(p[j]);
      else
        out[p[j]] = basis_element(j);
    }
    return out;
  }
  auto it = alpha_.find(g);
  if (it != alpha_.end()) return it->second;
  std::vector<RingValue> out;
  for (std::size_t j = 0; j < rank(); ++j)
    out.push_back(g == group_.identity() ? basis_element(j) : ring_.zero());
  return out;
}

RingValue PartialActionSystem::apply(GroupElement g, const RingValue& r) const {
  const RingValue x = r * unit(group_.inverse(g));
  const auto imgs = images(g);
  RingValue out = ring_.zero();
  for (std::size_t j = 0; j < rank(); ++j) {
    if (x.part(j) == 0) continue;
    out += RingValue(ring_, std::vector<Rational>(rank(), x.part(j))) * imgs[j];
  }
  return out;
}

PartialActionSystem::Twist PartialActionSystem::twist(GroupElement g, GroupElement h) const {
  auto it = twists_.find({g, h});
  if (it != twists_.end()) return it->second;
  RingValue u = unit(g) * unit(group_.multiply(g, h));
  return {u, u};
}

// --- axioms -----------------------------------------------------------------------

bool AxiomReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.holds; });
}

const AxiomResult& AxiomReport::operator[](std::string_view name) const {
  for (const auto& r : results)
    if (r.name == name) return r;
  throw PreconditionError("no axiom named " + std::string(name));
}

AxiomReport check_axioms(const PartialActionSystem& s) {
  const Group& grp = s.group();
  const auto q = s.quantified_degrees();
  const GroupElement e = grp.identity();
  auto nm = [&](GroupElement g) { return grp.name(g); };
  AxiomReport rep;
  auto record = [&](const std::string& name) -> AxiomResult& {
    rep.results.push_back({name, true, ""});
    return rep.results.back();
  };
  auto fail = [](AxiomResult& r, std::string what) {
    if (r.holds) r.failure = std::move(what);
    r.holds = false;
  };

  {
    AxiomResult& r = record("well-formed");
    if (s.unit(e) != s.ring().one()) fail(r, "1_e is not 1_R");
    for (auto g : q) {
      if (!r.holds) break;
      RingValue u = s.unit(g);
      if (!is_zero_one(u)) fail(r, "1_" + nm(g) + " = " + u.to_string() + " is not a 0/1 idempotent");
    }
    for (auto g : q) {
      if (!r.holds) break;
      const RingValue target = s.unit(g);
      const auto dom = s.ideal_basis(s.unit(grp.inverse(g)));
      if (dom.size() != s.ideal_basis(target).size()) {
        fail(r, "D_" + nm(grp.inverse(g)) + " and D_" + nm(g) + " have different ranks");
        break;
      }
      RingValue sum = s.ring().zero();
      for (std::size_t a = 0; a < dom.size() && r.holds; ++a) {
        RingValue x = s.apply(g, s.basis_element(dom[a]));
        if (x.is_zero() || x * x != x || x * target != x)
          fail(r, "alpha_" + nm(g) + "(" + s.basis_name(dom[a]) + ") = " + x.to_string() +
                      " is not a nonzero idempotent of D_" + nm(g));
        for (std::size_t b = a + 1; b < dom.size() && r.holds; ++b)
          if (!(x * s.apply(g, s.basis_element(dom[b]))).is_zero())
            fail(r, "alpha_" + nm(g) + " is not multiplicative on " + s.basis_name(dom[a]) + ", " +
                        s.basis_name(dom[b]));
        sum += x;
      }
      if (r.holds && sum != target) fail(r, "alpha_" + nm(g) + " does not map 1_" + nm(grp.inverse(g)) + " to 1_" + nm(g));
    }
    for (auto g : q)
      for (auto h : q) {
        if (!r.holds) break;
        auto w = s.twist(g, h);
        RingValue id = s.unit(g) * s.unit(grp.multiply(g, h));
        if (w.value * id != w.value || w.inverse * id != w.inverse || w.value * w.inverse != id)
          fail(r, "w_{" + nm(g) + "," + nm(h) + "} is not invertible in D_" + nm(g) + " D_" + nm(grp.multiply(g, h)));
      }
  }
  {
    AxiomResult& r = record("P1");
    for (std::size_t j = 0; j < s.rank(); ++j)
      if (s.apply(e, s.basis_element(j)) != s.basis_element(j)) fail(r, "alpha_e(" + s.basis_name(j) + ")");
  }
  {
    AxiomResult& r = record("P2");
    for (auto g : q)
      for (auto h : q) {
        RingValue lhs = s.apply(g, s.unit(grp.inverse(g)) * s.unit(h));
        RingValue rhs = s.unit(g) * s.unit(grp.multiply(g, h));
        if (lhs != rhs) fail(r, "(g, h) = (" + nm(g) + ", " + nm(h) + ")");
      }
  }
  {
    AxiomResult& r = record("P3");
    for (auto g : q)
      for (auto h : q) {
        GroupElement gh = grp.multiply(g, h);
        auto w = s.twist(g, h);
        for (auto j : s.ideal_basis(s.unit(grp.inverse(h)) * s.unit(grp.inverse(gh)))) {
          RingValue x = s.basis_element(j);
          if (s.apply(g, s.apply(h, x)) != w.value * s.apply(gh, x) * w.inverse)
            fail(r, "(g, h, r) = (" + nm(g) + ", " + nm(h) + ", " + s.basis_name(j) + ")");
        }
      }
  }
  {
    AxiomResult& r = record("P4");
    for (auto g : q)
      if (s.twist(e, g).value != s.unit(g) || s.twist(g, e).value != s.unit(g)) fail(r, "g = " + nm(g));
  }
  {
    AxiomResult& r = record("P5");
    for (auto g : q)
      for (auto h : q)
        for (auto l : q) {
          GroupElement gh = grp.multiply(g, h), hl = grp.multiply(h, l);
          for (auto j : s.ideal_basis(s.unit(grp.inverse(g)) * s.unit(h) * s.unit(hl))) {
            RingValue x = s.basis_element(j);
            RingValue lhs = s.apply(g, x * s.twist(h, l).value) * s.twist(g, hl).value;
            RingValue rhs = s.apply(g, x) * s.twist(g, h).value * s.twist(gh, l).value;
            if (lhs != rhs)
              fail(r, "(g, h, l, r) = (" + nm(g) + ", " + nm(h) + ", " + nm(l) + ", " + s.basis_name(j) + ")");
          }
        }
  }
  return rep;
}

namespace {

void require_axioms(const PartialActionSystem& s) {
  auto rep = check_axioms(s);
  for (const auto& r : rep.results)
    if (!r.holds) throw PreconditionError("not a unital twisted partial action: " + r.name + " fails at " + r.failure);
}

}  // namespace

GradedAlgebra crossed_product(const PartialActionSystem& s) {
  if (!s.finite_support()) throw PreconditionError("the support is infinite: the crossed product is not finite dimensional");
  require_axioms(s);
  const Group& grp = s.group();
  struct Slot {
    GroupElement g;
    std::size_t j;
  };
  std::vector<Slot> slots;
  std::vector<std::string> names;
  std::vector<GroupElement> degrees;
  for (auto g : s.declared_degrees())
    for (auto j : s.ideal_basis(s.unit(g))) {
      slots.push_back({g, j});
      names.push_back(s.basis_name(j) + "_d^" + grp.name(g));
      degrees.push_back(g);
    }
  const std::size_t n = slots.size();
  const RingDescriptor& k = s.scalars();
  std::vector<std::vector<std::optional<Coordinates>>> products(n, std::vector<std::optional<Coordinates>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto [g, i] = slots[a];
      const auto [h, j] = slots[b];
      GroupElement gh = grp.multiply(g, h);
      RingValue x = s.basis_element(i) * s.apply(g, s.basis_element(j)) * s.twist(g, h).value;
      auto v = linalg::zero_vector(k, n);
      for (std::size_t c = 0; c < s.rank(); ++c) {
        if (x.part(c) == 0) continue;
        auto it = std::find_if(slots.begin(), slots.end(), [&](const Slot& sl) { return sl.g == gh && sl.j == c; });
        if (it == slots.end()) throw Error("product leaves D_" + grp.name(gh));
        v[static_cast<std::size_t>(it - slots.begin())] = RingValue(k, {x.part(c)});
      }
      products[a][b] = std::move(v);
    }
  return GradedAlgebra(k, grp, std::move(names), std::move(degrees), std::move(products));
}

ClassificationReport classify_crossed(const PartialActionSystem& s) {
  require_axioms(s);
  const Group& grp = s.group();
  const RingFlags flags = ring_flags(s.ring());
  ClassificationReport rep;
  rep.subject = "partial crossed product of " + s.ring().to_string() + " by " +
                (grp.is_integers() ? std::string("Z") : "a group of order " + std::to_string(grp.order()));
  rep.noetherian_left = verdict_of(flags.noetherian_left);
  rep.noetherian_right = verdict_of(flags.noetherian_right);
  rep.rules.push_back(rule("crossed-noetherian-iff-coefficients"));

  std::optional<std::size_t> bound;
  bool finite = s.finite_support();
  if (finite) {
    std::size_t b = 0;
    for (auto g : s.declared_degrees())
      if (!s.unit(g).is_zero()) b = std::max<std::size_t>(b, grp.is_integers() ? std::abs(g) : 0);
    if (grp.is_integers()) bound = b;
  } else {
    rep.witnesses.infinite_support = "D_g = R for every g in Z";
  }
  rep.witnesses.support_bound = bound;

  auto artinian = [&](bool flag) {
    if (grp.is_integers()) return verdict_of(flag && finite);
    return verdict_of(flag);
  };
  rep.artinian_left = artinian(flags.artinian_left);
  rep.artinian_right = artinian(flags.artinian_right);
  if (grp.is_integers()) {
    rep.rules.push_back(rule("crossed-artinian-torsion-free"));
  } else if (flags.artinian_left && flags.artinian_right) {
    rep.rules.push_back(rule("artinian-finite-support-sufficient"));
  } else {
    if (flags.artinian_left || flags.artinian_right) rep.rules.push_back(rule("artinian-finite-support-sufficient"));
    rep.rules.push_back(rule("artinian-principal-necessary"));
  }
  if (rep.artinian_left == Verdict::no || rep.artinian_right == Verdict::no) {
    rep.semisimple = Verdict::no;
    rep.rules.push_back(rule("semisimple-implies-artinian"));
  } else {
    rep.semisimple = Verdict::unknown;
    rep.notes.push_back("semisimplicity of partial crossed products is not decided by the implemented rules");
  }
  return rep;
}

// --- file format ----------------------------------------------------------------

PartialActionSystem PartialActionSystem::parse(std::string_view source) {
  using text::split_once;
  using text::split_ws;
  std::optional<RingDescriptor> ring;
  std::optional<Group> group;
  std::optional<std::set<GroupElement>> support;
  bool table_mode = false;
  std::vector<std::string> elements;
  std::map<std::string, std::vector<std::string>> rows;
  std::size_t group_line = 0;
  struct Pending {
    std::string head, body;
    std::size_t line;
  };
  std::vector<Pending> units, alphas, twists;

  for (const auto& [line, content] : text::content_lines(source)) {
    std::string_view head, tail;
    if (content.starts_with("ring:")) {
      if (ring) throw ParseError("second 'ring:' line", line);
      try {
        ring = parse_ring(text::trim(content.substr(5)));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
      }
    } else if (content.starts_with("group:")) {
      if (group || table_mode) throw ParseError("second 'group:' line", line);
      group_line = line;
      auto words = split_ws(content.substr(6));
      if (words.size() >= 2 && words[0] == "Z" && words[1] == "support") {
        group = Group::integers();
        if (words.size() == 3 && words[2] == "all") continue;
        support.emplace();
        for (std::size_t i = 2; i < words.size(); ++i) support->insert(group->parse_element(words[i]));
      } else if (words.size() == 1 && words[0] == "table") {
        table_mode = true;
      } else {
        throw ParseError("expected 'group: Z support ...' or 'group: table'", line);
      }
    } else if (content.starts_with("elements:")) {
      if (!table_mode) throw ParseError("'elements:' needs 'group: table'", line);
      elements = split_ws(content.substr(9));
    } else if (content.starts_with("row ") && split_once(content.substr(4), ":", head, tail)) {
      if (!table_mode) throw ParseError("'row' needs 'group: table'", line);
      rows[std::string(head)] = split_ws(tail);
    } else if (content.starts_with("unit ") && split_once(content.substr(5), "=", head, tail)) {
      units.push_back({std::string(head), std::string(tail), line});
    } else if (content.starts_with("alpha ") && split_once(content.substr(6), ":", head, tail)) {
      alphas.push_back({std::string(head), std::string(tail), line});
    } else if (content.starts_with("twist ") && split_once(content.substr(6), "=", head, tail)) {
      twists.push_back({std::string(head), std::string(tail), line});
    } else {
      throw ParseError("unrecognized line '" + std::string(content) + "'", line);
    }
  }
  if (!ring) throw ParseError("missing 'ring:' line");
  if (table_mode) {
    if (elements.empty()) throw ParseError("group table has no 'elements:' line", group_line);
    std::vector<std::vector<std::size_t>> table;
    for (const auto& x : elements) {
      auto it = rows.find(x);
      if (it == rows.end()) throw ParseError("group table misses 'row " + x + ":'", group_line);
      std::vector<std::size_t> row;
      for (const auto& y : it->second) {
        auto at = std::find(elements.begin(), elements.end(), y);
        if (at == elements.end()) throw ParseError("unknown group element '" + y + "'", group_line);
        row.push_back(static_cast<std::size_t>(at - elements.begin()));
      }
      table.push_back(std::move(row));
    }
    group = Group::finite(elements, std::move(table));
  }
  if (!group) throw ParseError("missing 'group:' line");

  const std::size_t m = ring->arity();
  auto lookup = [&](std::string_view name) -> std::optional<std::size_t> {
    if (name.size() < 2 || name[0] != 'e') return std::nullopt;
    std::size_t j = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      j = j * 10 + static_cast<std::size_t>(c - '0');
    }
    if (j < 1 || j > m) return std::nullopt;
    return j - 1;
  };
  auto element = [&](std::string_view textual, std::size_t line) {
    textual = text::trim(textual);
    if (!textual.empty() && (textual[0] == '(' || std::isdigit(static_cast<unsigned char>(textual[0])) ||
                             (textual[0] == '-' && textual.size() > 1 && std::isdigit(static_cast<unsigned char>(textual[1]))))) {
      try {
        return ring->parse_value(textual);
      } catch (const Error& e) {
        throw ParseError(e.what(), line);
      }
    }
    std::vector<Rational> parts(m, Rational(0));
    RingValue out = ring->zero();
    for (auto& [j, c] : text::parse_lincomb(*ring, textual, lookup, line)) {
      std::vector<Rational> p(m, Rational(0));
      p[j] = 1;
      out += c * RingValue(*ring, std::move(p));
    }
    return out;
  };
  auto degree = [&](std::string_view name, std::size_t line) {
    try {
      return group->parse_element(text::trim(name));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
  };

  std::map<GroupElement, RingValue> unit_map;
  for (const auto& u : units) {
    auto g = degree(u.head, u.line);
    if (unit_map.count(g)) throw ParseError("unit " + u.head + " given twice", u.line);
    unit_map.emplace(g, element(u.body, u.line));
  }
  std::map<GroupElement, std::vector<RingValue>> alpha_map;
  for (const auto& a : alphas) {
    auto g = degree(a.head, a.line);
    if (alpha_map.count(g)) throw ParseError("alpha " + a.head + " given twice", a.line);
    std::vector<RingValue> imgs(m, ring->zero());
    std::string body = a.body;
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      // commas inside tuples belong to the element
      while (comma != std::string::npos && std::count(body.begin() + static_cast<long>(start), body.begin() + static_cast<long>(comma), '(') >
                                               std::count(body.begin() + static_cast<long>(start), body.begin() + static_cast<long>(comma), ')'))
        comma = body.find(',', comma + 1);
      std::string_view item = text::trim(std::string_view(body).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      start = comma == std::string::npos ? body.size() + 1 : comma + 1;
      if (item.empty()) continue;
      std::string_view src, dst;
      if (!split_once(item, "->", src, dst)) throw ParseError("expected 'eJ -> image'", a.line);
      auto j = lookup(src);
      if (!j) throw ParseError("unknown basis element '" + std::string(src) + "'", a.line);
      imgs[*j] = element(dst, a.line);
    }
    alpha_map.emplace(g, std::move(imgs));
  }
  std::map<std::pair<GroupElement, GroupElement>, Twist> twist_map;
  for (const auto& t : twists) {
    auto names = split_ws(t.head);
    if (names.size() != 2) throw ParseError("expected 'twist g h = w inverse w'", t.line);
    std::string_view value, inverse;
    if (!split_once(t.body, "inverse", value, inverse)) throw ParseError("expected 'w inverse w''", t.line);
    twist_map.insert_or_assign({degree(names[0], t.line), degree(names[1], t.line)},
                               Twist{element(value, t.line), element(inverse, t.line)});
  }
  return PartialActionSystem(*ring, *group, support, std::move(unit_map), std::move(alpha_map), std::move(twist_map));
}

}  // namespace leavitt
