// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact (tolerance 0); random inputs come from fixed seeds.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "leavitt/chainlab.hpp"
#include "leavitt/classify.hpp"
#include "leavitt/errors.hpp"
#include "leavitt/expression.hpp"
#include "leavitt/partial.hpp"
#include "leavitt/structure.hpp"
#include "support/corpus.hpp"

using namespace leavitt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failed expectation.
class Expect {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      failure_ = what;
    }
  }
  Outcome outcome(const std::string& summary) const { return {pass_, pass_ ? summary : "first failure: " + failure_}; }

 private:
  bool pass_ = true;
  std::string failure_;
};

std::shared_ptr<const LeavittAlgebra> make(const std::string& file, const char* ring) {
  return LeavittAlgebra::create(fixtures::load_graph(file), parse_ring(ring));
}

Outcome rewriting_soundness() {
  Expect expect;
  std::mt19937 rng(1);
  std::size_t words = 0, triples = 0;
  for (const auto& [name, g] : fixtures::ten_graph_corpus()) {
    for (const char* ring_text : {"Q", "Z/2"}) {
      auto ring = parse_ring(ring_text);
      auto alg = LeavittAlgebra::create(g, ring);
      fixtures::WordRewriter first(g, ring, 11), second(g, ring, 29);
      for (int i = 0; i < 500; ++i, ++words) {
        auto raw = fixtures::random_word_sum(rng, g, ring, 1, 6);
        auto w = fixtures::as_word_sum(raw);
        auto a = first.reduce(w), b = second.reduce(w);
        expect(a == b, name + " over " + ring_text + ": strategies disagree");
        expect(a == fixtures::as_words(alg->normal_form(raw)), name + " over " + ring_text + ": library normal form differs");
      }
      for (int i = 0; i < 300; ++i, ++triples) {
        auto x = alg->normal_form(fixtures::random_word_sum(rng, g, ring, 2, 4));
        auto y = alg->normal_form(fixtures::random_word_sum(rng, g, ring, 2, 4));
        auto z = alg->normal_form(fixtures::random_word_sum(rng, g, ring, 2, 4));
        expect((x * y) * z == x * (y * z), name + " over " + ring_text + ": associativity");
      }
    }
  }
  return expect.outcome(std::to_string(words) + " words, " + std::to_string(triples) + " triples over 10 graphs x {Q, Z/2}");
}

Outcome dimension_structure() {
  Expect expect;
  std::size_t pairs = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::string file = "a" + std::to_string(n) + ".lpg";
    auto alg = make(file, "Q");
    auto basis = reduced_monomials(*alg, n);
    expect(basis.size() == n * n, file + ": reduced basis size");
    auto model = sink_matrix_model(*alg);
    expect(model.factors().size() == 1 && model.factors()[0].size() == n, file + ": not a single M_n");
    for (const auto& p : basis) {
      auto x = alg->monomial(p.real, p.ghost);
      expect(model.backward(model.forward(x)) == x, file + ": model not injective on basis");
      for (const auto& q : basis) {
        auto y = alg->monomial(q.real, q.ghost);
        expect(model.forward(x * y) == model.multiply(model.forward(x), model.forward(y)), file + ": model not multiplicative");
        ++pairs;
      }
    }
    for (std::size_t level = 0; level <= n; ++level) {
      auto d = dn_structure(*alg, level);
      auto dn = dn_basis(*alg, level);
      expect(d.dimension() == dn.size(), file + ": D_n dimension");
      for (const auto& p : dn)
        for (const auto& q : dn) {
          auto x = alg->monomial(p.real, p.ghost), y = alg->monomial(q.real, q.ghost);
          expect(d.forward(x * y) == d.multiply(d.forward(x), d.forward(y)), file + ": D_n map not multiplicative");
          ++pairs;
        }
    }
    auto d0 = dn_structure(*alg, 0);
    bool all_scalar = d0.factors().size() == alg->graph().vertex_count();
    for (const auto& f : d0.factors()) all_scalar = all_scalar && f.size() == 1;
    expect(all_scalar, file + ": D_0 is not a product of copies of R");
  }
  return expect.outcome("A2, A3, A4 match M_n with n^2 basis elements; " + std::to_string(pairs) + " basis pairs multiplicative; D_0 = R^|E0|");
}

// Spanning monomials per degree: all of them when at most kSpanLimit, else a seeded sample.
constexpr std::size_t kSpanLimit = 3000;

Outcome epsilon_laws() {
  Expect expect;
  std::mt19937 rng(3);
  std::size_t checks = 0;
  for (const auto& [name, g] : fixtures::ten_graph_corpus()) {
    auto alg = LeavittAlgebra::create(g, parse_ring("Q"));
    const bool acyclic = alg->report().acyclic;
    const std::size_t cap = acyclic ? *alg->report().max_path_length : 4;
    const int bound = acyclic ? static_cast<int>(cap) + 1 : 4;
    std::optional<std::size_t> window;
    if (!acyclic) window = 4;
    std::vector<NormalElement> degree_zero;
    for (const auto& m : fixtures::spanning_monomials(*alg, 0, cap, 300, rng)) degree_zero.push_back(alg->monomial(m.real, m.ghost));
    for (int i = -bound; i <= bound; ++i) {
      auto eps = epsilon(*alg, i, window).value;
      auto back = epsilon(*alg, -i, window).value;
      const std::string where = name + " degree " + std::to_string(i);
      expect(eps * eps == eps, where + ": not idempotent");
      for (const auto& m : fixtures::spanning_monomials(*alg, i, cap, kSpanLimit, rng)) {
        auto x = alg->monomial(m.real, m.ghost);
        expect(eps * x == x, where + ": left unit law");
        expect(x * back == x, where + ": right unit law");
        ++checks;
      }
      for (const auto& y : degree_zero) {
        expect(eps * y == y * eps, where + ": not central in degree 0");
        ++checks;
      }
    }
  }
  return expect.outcome(std::to_string(checks) + " unit-law and centrality checks over the 10-graph corpus (paths up to length 4)");
}

Outcome laurent_example() {
  auto r = grading_check(laurent_even_example(4, parse_ring("Q")));
  Expect expect;
  expect(r.symmetric == Verdict::yes, "symmetric");
  expect(r.strong == Verdict::no, "strong");
  expect(r.epsilon_strong == Verdict::yes, "epsilon-strong");
  return expect.outcome("B = 4: symmetric yes, strong no, epsilon-strong yes");
}

Outcome ne_witnesses() {
  auto t = make("toeplitz.lpg", "Q");
  auto w = ne_witness_idempotents(*t, *t->report().ne_witness, 6);
  Expect expect;
  expect(w.size() == 6, "six idempotents");
  for (std::size_t i = 0; i < w.size(); ++i) {
    expect(w[i] * w[i] == w[i], "idempotent " + std::to_string(i));
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (i == j) continue;
      expect(!(w[i] == w[j]), "distinct " + std::to_string(i) + "," + std::to_string(j));
      expect((w[i] * w[j]).is_zero(), "orthogonal " + std::to_string(i) + "," + std::to_string(j));
    }
  }
  return expect.outcome("6 distinct pairwise orthogonal idempotents on T");
}

Outcome trace_inversion() {
  Expect expect;
  auto a2 = make("a2.lpg", "Q");
  auto s = trace_inverse(*a2);
  const auto eps0 = epsilon(*a2, 0).value;
  expect(s.path_solution.size() == 1 && s.path_solution[0] == parse_ring("Q").parse_value("-1/2"), "A2: m' != -1/2");
  expect(s.trace * s.inverse == eps0 && s.inverse * s.trace == eps0, "A2: t t' != epsilon_0");
  std::mt19937 rng(6);
  for (int i = 0; i < 50; ++i) {
    auto alg = LeavittAlgebra::create(fixtures::random_graph(rng, 4, 6, true), parse_ring("Q"));
    auto sys = trace_inverse(*alg);
    auto e0 = epsilon(*alg, 0).value;
    expect(sys.trace * sys.inverse == e0 && sys.inverse * sys.trace == e0, "random graph " + std::to_string(i));
  }
  return expect.outcome("A2: m' = -1/2 and t t' = t' t = epsilon_0; 50 random acyclic graphs exact");
}

Outcome id_n_separation() {
  auto alg = make("a2.lpg", "Z/2");
  FiniteRingInstance s(as_graded_algebra(*alg));
  auto ideals = enumerate_right_ideals(s);
  auto rep = verify_separation(s);
  Expect expect;
  expect(s.size() == 16, "16 elements");
  expect(ideals.size() == 5, "5 right ideals, got " + std::to_string(ideals.size()));
  for (const auto& i : ideals) expect(is_right_ideal(s, i.members), "ideal not closed");
  expect(rep.monotone, "Id_n not monotone");
  expect(rep.leading_ideals_valid, "Id_n not a right ideal");
  expect(!rep.failure, "nested pair not separated");
  return expect.outcome("16 elements, 5 right ideals, " + std::to_string(rep.nested_pairs) +
                        " nested pairs separated (largest discriminating n = " + std::to_string(rep.max_discriminating_n) + ")");
}

Outcome partial_suite() {
  Expect expect;
  auto sys = PartialActionSystem::parse(fixtures::read_data("cubic.pact"));
  auto axioms = check_axioms(sys);
  expect(axioms.all_pass(), "axioms");
  auto a = crossed_product(sys);
  expect(a.dimension() == 5, "dimension " + std::to_string(a.dimension()));
  auto v = validate(a);
  expect(v.degrees_respected && v.associative == Verdict::yes && v.indeterminate_triples == 0, "associativity on basis triples");
  auto g = grading_check(a);
  expect(g.epsilon_strong == Verdict::yes, "epsilon-strong");
  expect(g.strong == Verdict::no, "strong");
  for (GroupElement d : {-1, 0, 1}) {
    // 1_g delta_0 spelled in the crossed-product basis
    Coordinates expected = a.zero();
    const RingValue unit = sys.unit(d);
    for (std::size_t j = 0; j < sys.rank(); ++j)
      if (!unit.part(j).is_zero()) expected[*a.find_basis(sys.basis_name(j) + "_d^0")] = a.ring().one();
    expect(g.epsilon_units.count(d) && g.epsilon_units.at(d) == expected, "epsilon_" + std::to_string(d));
  }
  auto r = classify_crossed(sys);
  expect(r.noetherian_left == Verdict::yes && r.noetherian_right == Verdict::yes, "noetherian");
  expect(r.artinian_left == Verdict::yes && r.artinian_right == Verdict::yes, "artinian");
  bool noeth_rule = false, art_rule = false;
  for (const auto& rule : r.rules) {
    noeth_rule = noeth_rule || rule.id == "crossed-noetherian-iff-coefficients";
    art_rule = art_rule || rule.id == "crossed-artinian-torsion-free";
  }
  expect(noeth_rule && art_rule, "cited rules");
  return expect.outcome("(P1)-(P5) pass; 5-dimensional, associative, epsilon-strong with epsilon_g = 1_g delta_0, not strong; noetherian yes, artinian yes");
}

Outcome induced_grading() {
  auto a = crossed_product(PartialActionSystem::parse(fixtures::read_data("cubic.pact")));
  auto q = grading_check(induce_quotient(a, 2));
  Expect expect;
  expect(q.epsilon_strong == Verdict::yes, "epsilon-strong Z/2 grading");
  return expect.outcome("Z/2 grading induced from the crossed product is epsilon-strong");
}

Outcome truth_table() {
  Expect expect;
  std::istringstream in(fixtures::read_data("classify_golden.txt"));
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string x; words >> x;) w.push_back(x);
    std::string ring = w[1];
    for (std::size_t i = 2; i + 3 < w.size(); ++i) ring += " " + w[i];
    auto r = classify_lpa(fixtures::load_graph(w[0]), parse_ring(ring));
    auto s = [](Verdict v) { return std::string(to_string(v)); };
    const bool ok = s(r.noetherian_left) == w[w.size() - 3] && s(r.noetherian_right) == w[w.size() - 3] &&
                    s(r.artinian_left) == w[w.size() - 2] && s(r.artinian_right) == w[w.size() - 2] &&
                    s(r.semisimple) == w.back();
    expect(ok, w[0] + " over " + ring);
    ++rows;
  }
  expect(rows >= 20, "fewer than 20 golden rows");
  return expect.outcome(std::to_string(rows) + " golden rows match");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"rewriting soundness", rewriting_soundness},
      {"dimension and D_n structure", dimension_structure},
      {"epsilon laws", epsilon_laws},
      {"even Laurent example verdicts", laurent_example},
      {"non-noetherian witness", ne_witnesses},
      {"trace inversion", trace_inversion},
      {"Id_n separation on L_{Z/2}(A2)", id_n_separation},
      {"partial-action suite", partial_suite},
      {"induced Z/2 grading", induced_grading},
      {"classifier truth table", truth_table},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  AC" << i + 1 << " " << criteria[i].first << " [tolerance: exact] "
              << o.detail << " (" << ms << " ms)" << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
