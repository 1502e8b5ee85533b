#include "leavitt/graded.hpp"

#include <algorithm>
#include <cstdlib>

#include "leavitt/errors.hpp"

namespace leavitt {

GradedAlgebra::GradedAlgebra(RingDescriptor ring, Group group, std::vector<std::string> basis,
                             std::vector<GroupElement> degrees,
                             std::vector<std::vector<std::optional<Coordinates>>> products,
                             std::optional<std::int64_t> window)
    : ring_(std::move(ring)),
      group_(std::move(group)),
      basis_(std::move(basis)),
      degrees_(std::move(degrees)),
      products_(std::move(products)),
      window_(window) {
  const std::size_t n = basis_.size();
  if (degrees_.size() != n) throw PreconditionError("every basis element needs a degree");
  if (products_.size() != n) throw PreconditionError("product table has wrong number of rows");
  for (auto d : degrees_)
    if (!group_.contains(d)) throw PreconditionError("basis degree is not a group element");
  if (window_ && !group_.is_integers()) throw PreconditionError("a window only applies to Z-gradings");
  if (window_ && *window_ < 0) throw PreconditionError("window must be nonnegative");
  if (window_)
    for (auto d : degrees_)
      if (std::abs(d) > *window_) throw PreconditionError("basis degree lies outside the window");
  for (const auto& row : products_) {
    if (row.size() != n) throw PreconditionError("product table row has wrong length");
    for (const auto& p : row)
      if (p && p->size() != n) throw PreconditionError("product coordinates have wrong length");
  }
}

std::optional<std::size_t> GradedAlgebra::find_basis(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == name) return i;
  return std::nullopt;
}

Coordinates GradedAlgebra::zero() const { return linalg::zero_vector(ring_, dimension()); }

Coordinates GradedAlgebra::unit_vector(std::size_t i) const {
  auto v = zero();
  v[i] = ring_.one();
  return v;
}

std::optional<Coordinates> GradedAlgebra::multiply(const Coordinates& x, const Coordinates& y) const {
  auto out = zero();
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (y[j].is_zero()) continue;
      const auto& p = products_[i][j];
      if (!p) return std::nullopt;
      RingValue c = x[i] * y[j];
      for (std::size_t k = 0; k < dimension(); ++k)
        if (!(*p)[k].is_zero()) out[k] += c * (*p)[k];
    }
  }
  return out;
}

std::vector<std::size_t> GradedAlgebra::component(GroupElement g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == g) out.push_back(i);
  return out;
}

std::set<GroupElement> GradedAlgebra::support() const { return {degrees_.begin(), degrees_.end()}; }

bool GradedAlgebra::has_unknown_products() const {
  for (const auto& row : products_)
    for (const auto& p : row)
      if (!p) return true;
  return false;
}

std::string GradedAlgebra::render(const Coordinates& x) const {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    std::string c = x[i].to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (c != "1") out += c + "*";
    out += basis_[i];
  }
  return out.empty() ? "0" : out;
}

ValidationReport validate(const GradedAlgebra& a) {
  ValidationReport rep;
  const std::size_t n = a.dimension();
  const Group& grp = a.group();
  for (std::size_t i = 0; i < n && rep.degrees_respected; ++i)
    for (std::size_t j = 0; j < n && rep.degrees_respected; ++j) {
      const auto& p = a.product(i, j);
      if (!p) continue;
      GroupElement d = grp.multiply(a.degree(i), a.degree(j));
      for (std::size_t k = 0; k < n; ++k)
        if (!(*p)[k].is_zero() && a.degree(k) != d) {
          rep.degrees_respected = false;
          rep.degree_failure = std::pair{i, j};
          break;
        }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto ab = a.product(i, j);
        auto bc = a.product(j, k);
        std::optional<Coordinates> left, right;
        if (ab) left = a.multiply(*ab, a.unit_vector(k));
        if (bc) right = a.multiply(a.unit_vector(i), *bc);
        if (!left || !right) {
          ++rep.indeterminate_triples;
          continue;
        }
        if (*left != *right) {
          rep.associative = Verdict::no;
          rep.associativity_failure = std::array{i, j, k};
          return rep;
        }
      }
  if (rep.indeterminate_triples > 0) rep.associative = Verdict::unknown;
  return rep;
}

std::vector<GroupElement> examined_degrees(const GradedAlgebra& a) {
  const Group& grp = a.group();
  if (!grp.is_integers()) return grp.elements();
  std::int64_t bound;
  if (a.window()) {
    bound = *a.window();
  } else {
    std::int64_t m = 0;
    for (auto d : a.degrees()) m = std::max<std::int64_t>(m, std::abs(d));
    bound = m + 1;  // one empty degree on each side exposes failures of strongness
  }
  std::vector<GroupElement> out;
  for (std::int64_t d = -bound; d <= bound; ++d) out.push_back(d);
  return out;
}

namespace {

bool in_examined(const GradedAlgebra& a, GroupElement g) {
  if (!a.group().is_integers()) return true;
  if (a.window()) return std::abs(g) <= *a.window();
  return true;
}

// Known products of the given coordinate lists with one another.
struct Products {
  std::vector<Coordinates> values;
  bool some_unknown = false;
};

Products products_of(const GradedAlgebra& a, const std::vector<Coordinates>& xs, const std::vector<Coordinates>& ys) {
  Products out;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      auto p = a.multiply(x, y);
      if (p)
        out.values.push_back(std::move(*p));
      else
        out.some_unknown = true;
    }
  return out;
}

std::vector<Coordinates> basis_vectors(const GradedAlgebra& a, GroupElement g) {
  std::vector<Coordinates> out;
  for (auto i : a.component(g)) out.push_back(a.unit_vector(i));
  return out;
}

// S_target is contained in span(products); the reverse inclusion holds by the grading.
Verdict covers(const GradedAlgebra& a, const Products& p, const std::vector<Coordinates>& target) {
  if (linalg::span_contains(a.ring(), p.values, target)) return Verdict::yes;
  return p.some_unknown ? Verdict::unknown : Verdict::no;
}

Verdict merge(Verdict acc, Verdict v) {
  if (acc == Verdict::no || v == Verdict::no) return Verdict::no;
  if (acc == Verdict::unknown || v == Verdict::unknown) return Verdict::unknown;
  return Verdict::yes;
}

// Solves for u in span(S_g S_{g^-1}) with u x = x on S_g and y u = y on S_{g^-1}.
std::pair<Verdict, std::optional<Coordinates>> local_unit(const GradedAlgebra& a, GroupElement g) {
  const auto sg = basis_vectors(a, g);
  const auto sinv = basis_vectors(a, a.group().inverse(g));
  if (sg.empty()) return {Verdict::yes, a.zero()};
  Products gens = products_of(a, sg, sinv);
  bool dropped = gens.some_unknown;
  std::vector<Coordinates> usable;
  std::vector<std::vector<Coordinates>> effects;
  for (const auto& p : gens.values) {
    std::vector<Coordinates> eff;
    bool ok = true;
    for (const auto& x : sg) {
      auto px = a.multiply(p, x);
      if (!px) {
        ok = false;
        break;
      }
      eff.push_back(std::move(*px));
    }
    for (const auto& y : sinv) {
      if (!ok) break;
      auto yp = a.multiply(y, p);
      if (!yp) {
        ok = false;
        break;
      }
      eff.push_back(std::move(*yp));
    }
    if (!ok) {
      dropped = true;
      continue;
    }
    usable.push_back(p);
    effects.push_back(std::move(eff));
  }
  linalg::Matrix m;
  linalg::Vector rhs;
  const std::size_t n = a.dimension();
  const std::size_t blocks = sg.size() + sinv.size();
  for (std::size_t b = 0; b < blocks; ++b) {
    const Coordinates& target = b < sg.size() ? sg[b] : sinv[b - sg.size()];
    for (std::size_t k = 0; k < n; ++k) {
      linalg::Vector row;
      for (const auto& eff : effects) row.push_back(eff[b][k]);
      m.push_back(std::move(row));
      rhs.push_back(target[k]);
    }
  }
  auto sol = linalg::solve(a.ring(), m, rhs, usable.size());
  if (!sol) return {dropped ? Verdict::unknown : Verdict::no, std::nullopt};
  auto u = a.zero();
  for (std::size_t k = 0; k < usable.size(); ++k) u = linalg::add(u, linalg::scale((*sol)[k], usable[k]));
  return {Verdict::yes, u};
}

}  // namespace

GradingReport grading_check(const GradedAlgebra& a) {
  GradingReport rep;
  rep.support = a.support();
  const Group& grp = a.group();
  const auto degrees = examined_degrees(a);
  if (a.window())
    rep.notes.push_back("verdicts cover degrees in [-" + std::to_string(*a.window()) + ", " +
                        std::to_string(*a.window()) + "]");

  for (auto g : rep.support) {
    if (!in_examined(a, grp.inverse(g))) continue;
    auto sg = basis_vectors(a, g);
    auto pairs = products_of(a, sg, basis_vectors(a, grp.inverse(g)));
    auto triples = products_of(a, pairs.values, sg);
    triples.some_unknown = triples.some_unknown || pairs.some_unknown;
    Verdict v = covers(a, triples, sg);
    if (v == Verdict::unknown) rep.notes.push_back("symmetry undecided in degree " + grp.name(g));
    if (v != Verdict::yes && rep.symmetric != Verdict::no) rep.symmetric_witness = g;
    rep.symmetric = merge(rep.symmetric, v);
  }

  for (auto g : degrees)
    for (auto h : degrees) {
      GroupElement gh = grp.multiply(g, h);
      if (!in_examined(a, gh)) continue;
      auto target = basis_vectors(a, gh);
      if (target.empty()) continue;
      Verdict v = covers(a, products_of(a, basis_vectors(a, g), basis_vectors(a, h)), target);
      if (v != Verdict::yes && rep.strong != Verdict::no) rep.strong_witness = std::pair{g, h};
      rep.strong = merge(rep.strong, v);
    }
  // strong implies symmetric; a symmetric failure rules strongness out as well
  if (rep.symmetric == Verdict::no) rep.strong = Verdict::no;

  rep.epsilon_strong = rep.symmetric;
  for (auto g : degrees) {
    if (!in_examined(a, grp.inverse(g))) continue;
    auto [v, u] = local_unit(a, g);
    if (u) rep.epsilon_units.emplace(g, std::move(*u));
    if (v == Verdict::unknown) rep.notes.push_back("no local unit found from known products in degree " + grp.name(g));
    if (v != Verdict::yes && rep.epsilon_strong != Verdict::no) rep.epsilon_witness = g;
    rep.epsilon_strong = merge(rep.epsilon_strong, v);
  }
  if (rep.epsilon_strong == Verdict::yes) rep.epsilon_witness.reset();
  return rep;
}

namespace {

Coordinates project(const Coordinates& x, const std::vector<std::size_t>& keep) {
  Coordinates out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(x[i]);
  return out;
}

GradedAlgebra restrict_to(const GradedAlgebra& a, const std::vector<std::size_t>& keep, Group group,
                          const std::vector<GroupElement>& new_degrees, std::optional<std::int64_t> window) {
  std::vector<std::string> names;
  std::vector<std::vector<std::optional<Coordinates>>> products;
  for (auto i : keep) {
    names.push_back(a.basis_name(i));
    std::vector<std::optional<Coordinates>> row;
    for (auto j : keep) {
      const auto& p = a.product(i, j);
      row.push_back(p ? std::optional(project(*p, keep)) : std::nullopt);
    }
    products.push_back(std::move(row));
  }
  return GradedAlgebra(a.ring(), std::move(group), std::move(names), new_degrees, std::move(products), window);
}

}  // namespace

GradedAlgebra restrict_subgroup(const GradedAlgebra& a, const std::vector<GroupElement>& h) {
  const Group& grp = a.group();
  if (grp.is_integers()) throw PreconditionError("subgroups of Z are given as kZ");
  if (!grp.is_subgroup(h)) throw PreconditionError("the given elements do not form a subgroup");
  std::vector<GroupElement> members(h);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto index_of = [&](GroupElement g) {
    return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), g) - members.begin());
  };
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;
  for (auto x : members) {
    names.push_back(grp.name(x));
    std::vector<std::size_t> row;
    for (auto y : members) row.push_back(index_of(grp.multiply(x, y)));
    table.push_back(std::move(row));
  }
  std::vector<std::size_t> keep;
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    if (std::binary_search(members.begin(), members.end(), a.degree(i))) {
      keep.push_back(i);
      degrees.push_back(static_cast<GroupElement>(index_of(a.degree(i))));
    }
  return restrict_to(a, keep, Group::finite(std::move(names), std::move(table)), degrees, std::nullopt);
}

GradedAlgebra restrict_subgroup(const GradedAlgebra& a, std::int64_t k) {
  if (!a.group().is_integers()) throw PreconditionError("kZ restriction needs a Z-grading");
  if (k < 1) throw PreconditionError("k must be positive");
  std::vector<std::size_t> keep;
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    if (a.degree(i) % k == 0) {
      keep.push_back(i);
      degrees.push_back(a.degree(i) / k);
    }
  std::optional<std::int64_t> window;
  if (a.window()) window = *a.window() / k;
  return restrict_to(a, keep, Group::integers(), degrees, window);
}

GradedAlgebra induce_quotient(const GradedAlgebra& a, const std::vector<GroupElement>& n) {
  const Group& grp = a.group();
  if (grp.is_integers()) throw PreconditionError("subgroups of Z are given as kZ");
  if (!grp.is_normal_subgroup(n)) throw PreconditionError("the given elements do not form a normal subgroup");
  const auto elems = grp.elements();
  std::vector<std::size_t> coset(elems.size(), SIZE_MAX);
  std::vector<GroupElement> reps;
  for (auto g : elems) {
    if (coset[static_cast<std::size_t>(g)] != SIZE_MAX) continue;
    for (auto m : n) coset[static_cast<std::size_t>(grp.multiply(g, m))] = reps.size();
    reps.push_back(g);
  }
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;
  for (auto x : reps) {
    names.push_back(grp.name(x) + "N");
    std::vector<std::size_t> row;
    for (auto y : reps) row.push_back(coset[static_cast<std::size_t>(grp.multiply(x, y))]);
    table.push_back(std::move(row));
  }
  std::vector<std::size_t> keep;
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    keep.push_back(i);
    degrees.push_back(static_cast<GroupElement>(coset[static_cast<std::size_t>(a.degree(i))]));
  }
  return restrict_to(a, keep, Group::finite(std::move(names), std::move(table)), degrees, std::nullopt);
}

GradedAlgebra induce_quotient(const GradedAlgebra& a, std::int64_t k) {
  if (!a.group().is_integers()) throw PreconditionError("Z/k quotient needs a Z-grading");
  if (k < 1) throw PreconditionError("k must be positive");
  if (a.window() && *a.window() % k != 0)
    throw PreconditionError("window " + std::to_string(*a.window()) + " is not a multiple of " + std::to_string(k));
  std::vector<std::size_t> keep;
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    keep.push_back(i);
    degrees.push_back(((a.degree(i) % k) + k) % k);
  }
  return restrict_to(a, keep, Group::cyclic(static_cast<std::uint64_t>(k)), degrees, std::nullopt);
}

GradedAlgebra laurent_even_example(std::int64_t bound, const RingDescriptor& ring) {
  if (bound < 2 || bound % 2 != 0) throw PreconditionError("bound must be even and at least 2");
  std::vector<std::string> names;
  std::vector<GroupElement> degrees;
  for (std::int64_t d = -bound; d <= bound; d += 2) {
    names.push_back("X^" + std::to_string(d));
    degrees.push_back(d);
  }
  const std::size_t n = names.size();
  std::vector<std::vector<std::optional<Coordinates>>> products(n, std::vector<std::optional<Coordinates>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t d = degrees[i] + degrees[j];
      if (std::abs(d) > bound) continue;
      auto v = linalg::zero_vector(ring, n);
      v[static_cast<std::size_t>((d + bound) / 2)] = ring.one();
      products[i][j] = std::move(v);
    }
  return GradedAlgebra(ring, Group::integers(), std::move(names), std::move(degrees), std::move(products), bound);
}

}  // namespace leavitt
