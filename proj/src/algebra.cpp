#include "leavitt/algebra.hpp"

#include "leavitt/errors.hpp"

namespace leavitt {

namespace {

void add_term(NormalElement::Terms& out, const Monomial& m, const RingValue& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

Path strip_prefix(const Path& q, std::size_t k, VertexId start) {
  Path out{start, q.range, std::vector<EdgeId>(q.edges.begin() + static_cast<std::ptrdiff_t>(k), q.edges.end())};
  if (out.edges.empty()) out.range = start;
  return out;
}

}  // namespace

Path concat(const Path& alpha, const Path& beta) {
  if (alpha.range != beta.source) throw PreconditionError("paths are not composable");
  if (alpha.is_vertex()) return beta;
  if (beta.is_vertex()) return alpha;
  Path out = alpha;
  out.edges.insert(out.edges.end(), beta.edges.begin(), beta.edges.end());
  out.range = beta.range;
  return out;
}

std::optional<Monomial> multiply_monomials(const Monomial& a, const Monomial& b) {
  // (alpha beta*)(gamma delta*)
  const Path& beta = a.ghost;
  const Path& gamma = b.real;
  if (is_prefix(beta, gamma)) {
    Path rest = strip_prefix(gamma, beta.length(), beta.range);
    return Monomial{concat(a.real, rest), b.ghost};
  }
  if (is_prefix(gamma, beta)) {
    Path rest = strip_prefix(beta, gamma.length(), gamma.range);
    return Monomial{a.real, concat(b.ghost, rest)};
  }
  return std::nullopt;
}

// --- NormalElement ----------------------------------------------------------

NormalElement::NormalElement(std::shared_ptr<const LeavittAlgebra> algebra, Terms terms)
    : algebra_(std::move(algebra)), terms_(std::move(terms)) {}

std::optional<int> NormalElement::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

std::string NormalElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    RingValue coeff = c;
    bool negative = coeff.parts().size() == 1 && coeff.part(0) < 0;
    if (negative) coeff = -coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (!coeff.is_one()) out += coeff.to_string() + "*";
    out += algebra_->monomial_to_string(m);
  }
  return out;
}

namespace {

void require_same_context(const NormalElement& a, const NormalElement& b) {
  if (a.context() != b.context() &&
      !(a.algebra().graph() == b.algebra().graph() && a.algebra().ring() == b.algebra().ring()))
    throw PreconditionError("elements belong to different algebras");
}

}  // namespace

NormalElement NormalElement::operator-() const {
  Terms out;
  for (const auto& [m, c] : terms_) out.emplace(m, -c);
  return NormalElement(algebra_, std::move(out));
}

NormalElement operator+(const NormalElement& a, const NormalElement& b) {
  require_same_context(a, b);
  NormalElement::Terms out = a.terms_;
  for (const auto& [m, c] : b.terms_) add_term(out, m, c);
  return NormalElement(a.algebra_, std::move(out));
}

NormalElement operator-(const NormalElement& a, const NormalElement& b) { return a + (-b); }

NormalElement operator*(const NormalElement& a, const NormalElement& b) { return a.algebra().multiply(a, b); }

NormalElement operator*(const RingValue& c, const NormalElement& a) {
  NormalElement::Terms out;
  for (const auto& [m, x] : a.terms_) add_term(out, m, c * x);
  return NormalElement(a.algebra_, std::move(out));
}

bool operator==(const NormalElement& a, const NormalElement& b) {
  require_same_context(a, b);
  return a.terms_ == b.terms_;
}

// --- LeavittAlgebra ---------------------------------------------------------

LeavittAlgebra::LeavittAlgebra(Graph graph, RingDescriptor ring)
    : graph_(std::move(graph)), ring_(std::move(ring)), report_(analyze(graph_)) {}

std::shared_ptr<const LeavittAlgebra> LeavittAlgebra::create(Graph graph, RingDescriptor ring) {
  return std::shared_ptr<const LeavittAlgebra>(new LeavittAlgebra(std::move(graph), std::move(ring)));
}

NormalElement LeavittAlgebra::zero() const { return NormalElement(shared_from_this(), {}); }

NormalElement LeavittAlgebra::one() const { return scalar(ring_.one()); }

NormalElement LeavittAlgebra::scalar(const RingValue& c) const {
  NormalElement::Terms t;
  for (VertexId v = 0; v < graph_.vertex_count(); ++v) add_term(t, Monomial{Path::vertex(v), Path::vertex(v)}, c);
  return NormalElement(shared_from_this(), std::move(t));
}

NormalElement LeavittAlgebra::vertex(VertexId v) const {
  if (v >= graph_.vertex_count()) throw PreconditionError("unknown vertex id");
  return monomial(Path::vertex(v), Path::vertex(v));
}

NormalElement LeavittAlgebra::edge(EdgeId e) const {
  if (e >= graph_.edge_count()) throw PreconditionError("unknown edge id");
  return monomial(graph_.make_path({e}), Path::vertex(graph_.edge(e).range));
}

NormalElement LeavittAlgebra::ghost(EdgeId e) const {
  if (e >= graph_.edge_count()) throw PreconditionError("unknown edge id");
  return monomial(Path::vertex(graph_.edge(e).range), graph_.make_path({e}));
}

NormalElement LeavittAlgebra::generator(const Generator& g) const {
  switch (g.kind) {
    case Generator::Kind::vertex: return vertex(g.id);
    case Generator::Kind::edge: return edge(g.id);
    case Generator::Kind::ghost: return ghost(g.id);
  }
  throw PreconditionError("bad generator");
}

NormalElement LeavittAlgebra::monomial(const Path& real, const Path& ghost, const RingValue& c) const {
  if (real.range != ghost.range) throw PreconditionError("monomial needs r(alpha) = r(beta)");
  NormalElement::Terms t;
  accumulate(t, real, ghost, c);
  return NormalElement(shared_from_this(), std::move(t));
}

NormalElement LeavittAlgebra::monomial(const Path& real, const Path& ghost) const {
  return monomial(real, ghost, ring_.one());
}

bool LeavittAlgebra::is_reduced(const Monomial& m) const {
  if (m.real.is_vertex() || m.ghost.is_vertex()) return true;
  EdgeId a = m.real.edges.back();
  return a != m.ghost.edges.back() || !graph_.is_special(a);
}

void LeavittAlgebra::accumulate(NormalElement::Terms& out, const Path& real, const Path& ghost,
                                const RingValue& c) const {
  if (c.is_zero()) return;
  Path alpha = real;
  Path beta = ghost;
  // Peel special turns: alpha' e e* beta'* = alpha' beta'* - sum_{f != e} alpha' f f* beta'*.
  while (!alpha.is_vertex() && !beta.is_vertex() && alpha.edges.back() == beta.edges.back() &&
         graph_.is_special(alpha.edges.back())) {
    EdgeId e = alpha.edges.back();
    VertexId v = graph_.edge(e).source;
    alpha.edges.pop_back();
    beta.edges.pop_back();
    alpha.range = beta.range = v;
    if (alpha.edges.empty()) alpha.source = v;
    if (beta.edges.empty()) beta.source = v;
    for (EdgeId f : graph_.out_edges(v)) {
      if (f == e) continue;
      Path af = alpha, bf = beta;
      if (af.is_vertex()) af.source = v;
      if (bf.is_vertex()) bf.source = v;
      af.edges.push_back(f);
      bf.edges.push_back(f);
      af.range = bf.range = graph_.edge(f).range;
      add_term(out, Monomial{std::move(af), std::move(bf)}, -c);
    }
  }
  add_term(out, Monomial{std::move(alpha), std::move(beta)}, c);
}

NormalElement LeavittAlgebra::normal_form(const RawElement& raw) const {
  NormalElement sum = zero();
  for (const auto& term : raw) {
    if (!(term.coefficient.ring() == ring_)) throw PreconditionError("coefficient from a different ring");
    for (const auto& g : term.word) {
      std::size_t limit = g.kind == Generator::Kind::vertex ? graph_.vertex_count() : graph_.edge_count();
      if (g.id >= limit) throw PreconditionError("unknown generator id " + std::to_string(g.id));
    }
    NormalElement product = scalar(term.coefficient);
    for (const auto& g : term.word) product = multiply(product, generator(g));
    sum = sum + product;
  }
  return sum;
}

NormalElement LeavittAlgebra::multiply(const NormalElement& a, const NormalElement& b) const {
  require_same_context(a, b);
  NormalElement::Terms out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto m = multiply_monomials(ma, mb);
      if (!m) continue;
      accumulate(out, m->real, m->ghost, ca * cb);
    }
  return NormalElement(shared_from_this(), std::move(out));
}

std::string LeavittAlgebra::monomial_to_string(const Monomial& m) const {
  if (m.real.is_vertex() && m.ghost.is_vertex()) return graph_.vertex_name(m.real.source);
  std::string out;
  if (!m.real.is_vertex()) out = graph_.path_to_string(m.real);
  for (auto it = m.ghost.edges.rbegin(); it != m.ghost.edges.rend(); ++it) {
    if (!out.empty()) out += ".";
    out += graph_.edge(*it).name + "^*";
  }
  return out;
}

std::map<int, NormalElement> degree_decompose(const NormalElement& x) {
  std::map<int, NormalElement::Terms> parts;
  for (const auto& [m, c] : x.terms()) parts[m.degree()].emplace(m, c);
  std::map<int, NormalElement> out;
  for (auto& [d, t] : parts) out.emplace(d, NormalElement(x.context(), std::move(t)));
  return out;
}

}  // namespace leavitt
