#include "leavitt/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "leavitt/errors.hpp"

namespace leavitt {

namespace {

std::size_t length_cap(const LeavittAlgebra& alg, std::optional<std::size_t> window) {
  const auto& rep = alg.report();
  if (rep.acyclic) return *rep.max_path_length;
  if (!window) throw PreconditionError("graph has a cycle: a degree window is required");
  return *window;
}

Path extend(const Graph& g, const Path& p, EdgeId e) {
  Path out = p;
  if (out.edges.empty()) out.source = g.edge(e).source;
  out.edges.push_back(e);
  out.range = g.edge(e).range;
  return out;
}

NormalElement as_element(const LeavittAlgebra& alg, const Monomial& m) { return alg.monomial(m.real, m.ghost); }

}  // namespace

std::vector<Monomial> reduced_monomials(const LeavittAlgebra& alg, std::size_t cap) {
  const auto paths = paths_up_to(alg.graph(), cap);
  std::map<VertexId, std::vector<const Path*>> by_range;
  for (const auto& p : paths) by_range[p.range].push_back(&p);
  std::vector<Monomial> out;
  for (const auto& [v, group] : by_range)
    for (const Path* a : group)
      for (const Path* b : group) {
        Monomial m{*a, *b};
        if (alg.is_reduced(m)) out.push_back(std::move(m));
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> reduced_monomials_of_degree(const LeavittAlgebra& alg, int degree, std::size_t cap) {
  auto all = reduced_monomials(alg, cap);
  std::vector<Monomial> out;
  for (auto& m : all)
    if (m.degree() == degree) out.push_back(std::move(m));
  return out;
}

std::vector<Path> epsilon_paths(const LeavittAlgebra& alg, int i) {
  const Graph& g = alg.graph();
  std::vector<Path> out;
  if (i >= 0) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto ps = enumerate_paths(g, static_cast<std::size_t>(i), v);
      out.insert(out.end(), ps.begin(), ps.end());
    }
  } else {
    // Prefix-minimal paths alpha whose range has depth >= len(alpha) + k.
    const std::size_t k = static_cast<std::size_t>(-static_cast<long long>(i));
    const auto depth = depths(g);
    std::function<void(const Path&)> grow = [&](const Path& p) {
      const auto& d = depth[p.range];
      if (!d || *d >= p.length() + k) {
        out.push_back(p);
        return;
      }
      for (EdgeId e : g.out_edges(p.range)) grow(extend(g, p, e));
    };
    for (VertexId v = 0; v < g.vertex_count(); ++v) grow(Path::vertex(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

EpsilonUnit epsilon(const LeavittAlgebra& alg, int i, std::optional<std::size_t> window) {
  const std::size_t cap = length_cap(alg, window);
  if (!alg.report().acyclic && static_cast<std::size_t>(std::abs(i)) > *window)
    throw PreconditionError("degree " + std::to_string(i) + " lies outside the window " + std::to_string(*window));
  NormalElement value = alg.zero();
  for (const auto& p : epsilon_paths(alg, i)) value = value + alg.monomial(p, p);

  auto fail = [&](const std::string& what) {
    throw Error("epsilon unit law failed in degree " + std::to_string(i) + ": " + what);
  };
  if (value * value != value) fail("not idempotent");
  // e (alpha beta*) = alpha beta* iff e alpha = alpha (multiply by beta on the right),
  // so the unit laws reduce to one check per path.
  const Graph& g = alg.graph();
  const auto paths = paths_up_to(g, cap);
  std::map<VertexId, std::set<std::size_t>> lengths_at;
  for (const auto& p : paths) lengths_at[p.range].insert(p.length());
  auto has_partner = [&](const Path& p, long long partner_length) {
    return partner_length >= 0 && lengths_at[p.range].count(static_cast<std::size_t>(partner_length)) > 0;
  };
  const RingValue one = alg.ring().one();
  for (const auto& p : paths) {
    const long long len = static_cast<long long>(p.length());
    // p as alpha of a degree-i monomial, or as beta of a degree -i one
    if (!has_partner(p, len - i)) continue;
    NormalElement a = alg.monomial(p, Path::vertex(p.range), one);
    if (value * a != a) fail("e x != x for x = " + a.to_string());
    NormalElement b = alg.monomial(Path::vertex(p.range), p, one);
    if (b * value != b) fail("y e != y for y = " + b.to_string());
  }
  // Centrality on degree-0 monomials, shortest first, up to a fixed budget.
  std::size_t budget = kEpsilonCentralityBudget;
  for (std::size_t k = 0; k <= cap && budget > 0; ++k) {
    for (const auto& a : paths) {
      if (a.length() != k || budget == 0) continue;
      for (const auto& b : paths) {
        if (b.length() != k || b.range != a.range) continue;
        Monomial m{a, b};
        if (!alg.is_reduced(m)) continue;
        NormalElement x = as_element(alg, m);
        if (value * x != x * value) fail("not central, x = " + x.to_string());
        if (--budget == 0) break;
      }
    }
  }
  return {i, value};
}

std::optional<NormalElement> epsilon_by_linear_solve(const LeavittAlgebra& alg, int i) {
  if (!alg.report().acyclic) throw PreconditionError("graph has a cycle: the linear solve needs finite support");
  const std::size_t cap = *alg.report().max_path_length;
  const auto basis = reduced_monomials(alg, cap);
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  std::vector<NormalElement> si, sneg;
  for (const auto& m : basis) {
    if (m.degree() == i) si.push_back(as_element(alg, m));
    if (m.degree() == -i) sneg.push_back(as_element(alg, m));
  }
  if (si.empty()) return alg.zero();
  const RingDescriptor& ring = alg.ring();
  auto coords = [&](const NormalElement& x) {
    auto v = linalg::zero_vector(ring, basis.size());
    for (const auto& [m, c] : x.terms()) v[index.at(m)] = c;
    return v;
  };
  std::vector<NormalElement> gens;
  for (const auto& x : si)
    for (const auto& y : sneg) gens.push_back(x * y);
  linalg::Matrix a;
  linalg::Vector b;
  auto add_block = [&](const NormalElement& target, const std::function<NormalElement(const NormalElement&)>& act) {
    std::vector<linalg::Vector> cols;
    for (const auto& p : gens) cols.push_back(coords(act(p)));
    auto t = coords(target);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      linalg::Vector row;
      for (const auto& c : cols) row.push_back(c[r]);
      a.push_back(std::move(row));
      b.push_back(t[r]);
    }
  };
  for (const auto& x : si) add_block(x, [&](const NormalElement& p) { return p * x; });
  for (const auto& y : sneg) add_block(y, [&](const NormalElement& p) { return y * p; });
  auto sol = linalg::solve(ring, a, b, gens.size());
  if (!sol) return std::nullopt;
  NormalElement u = alg.zero();
  for (std::size_t k = 0; k < gens.size(); ++k) u = u + (*sol)[k] * gens[k];
  return u;
}

CmFiltration cm_filtration(const LeavittAlgebra& alg) {
  const auto& rep = alg.report();
  if (!rep.condition_ne) throw PreconditionError("graph fails Condition (NE): the filtration need not stabilize");
  const Graph& g = alg.graph();
  const std::size_t bound = g.vertex_count() + 1;
  CmFiltration out;
  auto spanning = [&](std::size_t m) {
    std::vector<Monomial> span;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto ps = enumerate_paths(g, m, v);
      for (const auto& a : ps)
        for (const auto& b : ps) span.push_back(Monomial{a, b});
    }
    std::sort(span.begin(), span.end());
    return span;
  };
  for (std::size_t k = 0; k <= bound; ++k) {
    out.spans.push_back(spanning(k));
    bool contained = true;
    for (const auto& m : spanning(k + 1)) {
      // x lies in C_0 + ... + C_k iff its normal form only uses turns of length <= k
      const NormalElement x = as_element(alg, m);
      for (const auto& [t, c] : x.terms())
        if (t.real.length() > k) contained = false;
      if (!contained) break;
    }
    if (contained) {
      out.level = k;
      return out;
    }
  }
  throw Error("C_m filtration did not stabilize within " + std::to_string(bound) + " steps");
}

// --- matrix models ------------------------------------------------------------

MatrixDecomposition::MatrixDecomposition(std::shared_ptr<const LeavittAlgebra> alg, std::vector<MatrixFactor> factors,
                                         std::optional<std::size_t> stop_length)
    : alg_(std::move(alg)), factors_(std::move(factors)), stop_length_(stop_length) {}

std::size_t MatrixDecomposition::dimension() const {
  std::size_t d = 0;
  for (const auto& f : factors_) d += f.size() * f.size();
  return d;
}

BlockMatrix MatrixDecomposition::zero() const {
  BlockMatrix out;
  for (const auto& f : factors_) out.emplace_back(f.size(), linalg::zero_vector(alg_->ring(), f.size()));
  return out;
}

void MatrixDecomposition::place(BlockMatrix& out, const Path& alpha, const Path& beta, const RingValue& c) const {
  const Graph& g = alg_->graph();
  const VertexId w = alpha.range;
  const bool at_top = stop_length_ && alpha.length() == *stop_length_;
  if (!at_top && !g.is_sink(w)) {
    // alpha beta* = sum over f in s^{-1}(w) of alpha f (beta f)*
    for (EdgeId f : g.out_edges(w)) place(out, extend(g, alpha, f), extend(g, beta, f), c);
    return;
  }
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto& fac = factors_[k];
    if (fac.vertex != w) continue;
    bool match = fac.kind == MatrixFactor::Kind::sink ||
                 (fac.kind == MatrixFactor::Kind::top && at_top && fac.level == alpha.length()) ||
                 (fac.kind == MatrixFactor::Kind::sink_level && !at_top && fac.level == alpha.length());
    if (!match) continue;
    auto ia = std::find(fac.paths.begin(), fac.paths.end(), alpha);
    auto ib = std::find(fac.paths.begin(), fac.paths.end(), beta);
    if (ia == fac.paths.end() || ib == fac.paths.end()) break;
    out[k][static_cast<std::size_t>(ia - fac.paths.begin())][static_cast<std::size_t>(ib - fac.paths.begin())] += c;
    return;
  }
  throw Error("no matrix factor for " + alg_->monomial_to_string(Monomial{alpha, beta}));
}

BlockMatrix MatrixDecomposition::forward(const NormalElement& x) const {
  BlockMatrix out = zero();
  for (const auto& [m, c] : x.terms()) {
    if (stop_length_ && (m.degree() != 0 || m.real.length() > *stop_length_))
      throw PreconditionError("element " + x.to_string() + " does not lie in D_" + std::to_string(*stop_length_));
    place(out, m.real, m.ghost, c);
  }
  return out;
}

NormalElement MatrixDecomposition::backward(const BlockMatrix& blocks) const {
  NormalElement out = alg_->zero();
  for (std::size_t k = 0; k < factors_.size(); ++k)
    for (std::size_t i = 0; i < factors_[k].size(); ++i)
      for (std::size_t j = 0; j < factors_[k].size(); ++j)
        if (!blocks[k][i][j].is_zero())
          out = out + alg_->monomial(factors_[k].paths[i], factors_[k].paths[j], blocks[k][i][j]);
  return out;
}

BlockMatrix MatrixDecomposition::multiply(const BlockMatrix& a, const BlockMatrix& b) const {
  BlockMatrix out = zero();
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const std::size_t n = factors_[k].size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[k][i][l].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) out[k][i][j] += a[k][i][l] * b[k][l][j];
      }
  }
  return out;
}

std::string MatrixDecomposition::describe() const {
  std::ostringstream out;
  const Graph& g = alg_->graph();
  const std::string r = alg_->ring().to_string();
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto& f = factors_[k];
    if (k) out << " x ";
    out << "M_" << f.size() << "(" << r << ")";
    switch (f.kind) {
      case MatrixFactor::Kind::sink_level:
        out << "[sink " << g.vertex_name(f.vertex) << ", length " << f.level << "]";
        break;
      case MatrixFactor::Kind::top:
        out << "[top " << g.vertex_name(f.vertex) << ", length " << f.level << "]";
        break;
      case MatrixFactor::Kind::sink:
        out << "[sink " << g.vertex_name(f.vertex) << "]";
        break;
    }
  }
  return factors_.empty() ? "0" : out.str();
}

MatrixDecomposition dn_structure(const LeavittAlgebra& alg, std::size_t n) {
  const Graph& g = alg.graph();
  std::vector<MatrixFactor> factors;
  for (std::size_t i = 0; i < n; ++i)
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!g.is_sink(v)) continue;
      auto ps = enumerate_paths(g, i, v);
      if (!ps.empty()) factors.push_back({MatrixFactor::Kind::sink_level, i, v, std::move(ps)});
    }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto ps = enumerate_paths(g, n, v);
    if (!ps.empty()) factors.push_back({MatrixFactor::Kind::top, n, v, std::move(ps)});
  }
  return MatrixDecomposition(alg.shared_from_this(), std::move(factors), n);
}

MatrixDecomposition sink_matrix_model(const LeavittAlgebra& alg) {
  if (!alg.report().acyclic) throw PreconditionError("graph has a cycle: no finite matrix model");
  const Graph& g = alg.graph();
  const auto all = paths_up_to(g, *alg.report().max_path_length);
  std::vector<MatrixFactor> factors;
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (!g.is_sink(w)) continue;
    std::vector<Path> ps;
    for (const auto& p : all)
      if (p.range == w) ps.push_back(p);
    factors.push_back({MatrixFactor::Kind::sink, 0, w, std::move(ps)});
  }
  return MatrixDecomposition(alg.shared_from_this(), std::move(factors), std::nullopt);
}

std::vector<Monomial> dn_basis(const LeavittAlgebra& alg, std::size_t n) {
  return reduced_monomials_of_degree(alg, 0, n);
}

// --- Condition (NE) witnesses ---------------------------------------------------

std::vector<NormalElement> ne_witness_idempotents(const LeavittAlgebra& alg, const ExitWitness& witness,
                                                  std::size_t count) {
  const Graph& g = alg.graph();
  const Path& cycle = witness.cycle;
  if (cycle.is_vertex() || cycle.source != cycle.range) throw PreconditionError("witness cycle is not closed");
  g.make_path(cycle.edges);
  std::vector<VertexId> on_cycle;
  for (EdgeId e : cycle.edges) on_cycle.push_back(g.edge(e).source);
  auto sorted = on_cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("witness cycle is not simple");
  if (witness.exit >= g.edge_count()) throw PreconditionError("witness exit is not an edge");
  const VertexId base = g.edge(witness.exit).source;
  auto gamma = rotate_cycle_to(g, cycle, base);
  if (!gamma) throw PreconditionError("exit edge does not leave the cycle");
  if (gamma->edges.front() == witness.exit) throw PreconditionError("exit edge is the cycle's own edge");
  const Path alpha = g.make_path({witness.exit});
  std::vector<NormalElement> out;
  Path prefix = Path::vertex(base);
  for (std::size_t k = 0; k < count; ++k) {
    Path p = concat(prefix, alpha);
    out.push_back(alg.monomial(p, p));
    prefix = concat(prefix, *gamma);
  }
  return out;
}

// --- trace ------------------------------------------------------------------------

namespace {

void require_finite_support(const LeavittAlgebra& alg) {
  if (!alg.report().acyclic) throw PreconditionError("graph has a cycle: trace undefined (infinite support)");
}

// Formal decomposition sum n_v v + sum n'_alpha alpha alpha* of sum_i epsilon_i.
std::pair<std::vector<BigInt>, std::map<Path, BigInt>> trace_counts(const LeavittAlgebra& alg) {
  const auto l = static_cast<int>(*alg.report().max_path_length);
  std::vector<BigInt> vertices(alg.graph().vertex_count(), 0);
  std::map<Path, BigInt> paths;
  for (int i = -l; i <= l; ++i)
    for (const auto& p : epsilon_paths(alg, i)) {
      if (p.is_vertex())
        vertices[p.source] += 1;
      else
        paths[p] += 1;
    }
  return {vertices, paths};
}

}  // namespace

NormalElement trace_unit(const LeavittAlgebra& alg) {
  require_finite_support(alg);
  const auto l = static_cast<int>(*alg.report().max_path_length);
  NormalElement t = alg.zero();
  for (int i = -l; i <= l; ++i) t = t + epsilon(alg, i).value;
  return t;
}

TraceInverseSystem trace_inverse(const LeavittAlgebra& alg) {
  require_finite_support(alg);
  const RingDescriptor& ring = alg.ring();
  if (!ring_flags(ring).all_nonzero_integers_invertible)
    throw PreconditionError("coefficient ring " + ring.to_string() +
                            " does not invert every nonzero integer: invertibility of the trace is not certified");
  auto [vertex_counts, path_counts] = trace_counts(alg);
  const std::size_t nv = vertex_counts.size();

  std::vector<TraceInverseSystem::PathTerm> terms;
  for (const auto& [p, c] : path_counts) terms.push_back({p, c, p.source});
  // std::map on Path already orders by length first, so prefixes precede extensions
  const std::size_t np = terms.size();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      if (is_prefix(terms[i].alpha, terms[j].alpha))
        triples.push_back({i, j, j});
      else if (is_prefix(terms[j].alpha, terms[i].alpha))
        triples.push_back({i, j, i});
    }

  auto inv = [&](const BigInt& n) {
    auto x = ring.from_integer(n).inverse();
    if (!x) throw Error("integer " + n.str() + " is not invertible");
    return *x;
  };
  std::vector<RingValue> m(nv);
  for (std::size_t v = 0; v < nv; ++v) m[v] = inv(vertex_counts[v]);
  std::vector<RingValue> mp(np, ring.zero());
  for (std::size_t t = 0; t < np; ++t) {
    const auto& term = terms[t];
    BigInt denom = vertex_counts[term.start];
    RingValue rhs = ring.from_integer(term.count) * m[term.start];
    for (std::size_t j = 0; j < t; ++j)
      if (is_prefix(terms[j].alpha, term.alpha)) {
        denom += terms[j].count;
        rhs += ring.from_integer(term.count) * mp[j];
      }
    denom += term.count;  // the pair (t, t)
    mp[t] = -(inv(denom) * rhs);
  }

  NormalElement trace = alg.zero(), inverse = alg.zero();
  for (VertexId v = 0; v < nv; ++v) {
    trace = trace + alg.monomial(Path::vertex(v), Path::vertex(v), ring.from_integer(vertex_counts[v]));
    inverse = inverse + alg.monomial(Path::vertex(v), Path::vertex(v), m[v]);
  }
  for (std::size_t t = 0; t < np; ++t) {
    trace = trace + alg.monomial(terms[t].alpha, terms[t].alpha, ring.from_integer(terms[t].count));
    inverse = inverse + alg.monomial(terms[t].alpha, terms[t].alpha, mp[t]);
  }
  const NormalElement unit = alg.one();
  if (trace * inverse != unit || inverse * trace != unit)
    throw Error("trace inverse verification failed: t t' = " + (trace * inverse).to_string());
  return TraceInverseSystem{std::move(vertex_counts), std::move(terms), std::move(triples), std::move(m),
                            std::move(mp), std::move(trace), std::move(inverse)};
}

GradedAlgebra as_graded_algebra(const LeavittAlgebra& alg) {
  if (!alg.report().acyclic) throw PreconditionError("graph has a cycle: the algebra is infinite dimensional");
  const auto basis = reduced_monomials(alg, *alg.report().max_path_length);
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  std::vector<std::string> names;
  std::vector<GroupElement> degrees;
  for (const auto& m : basis) {
    names.push_back(alg.monomial_to_string(m));
    degrees.push_back(m.degree());
  }
  const std::size_t n = basis.size();
  std::vector<std::vector<std::optional<Coordinates>>> products(n, std::vector<std::optional<Coordinates>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto v = linalg::zero_vector(alg.ring(), n);
      const NormalElement p = as_element(alg, basis[i]) * as_element(alg, basis[j]);
      for (const auto& [m, c] : p.terms()) v[index.at(m)] = c;
      products[i][j] = std::move(v);
    }
  return GradedAlgebra(alg.ring(), Group::integers(), std::move(names), std::move(degrees), std::move(products));
}

}  // namespace leavitt
