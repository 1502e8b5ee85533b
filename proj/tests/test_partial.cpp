#include "doctest.h"
#include "leavitt/errors.hpp"
#include "leavitt/partial.hpp"
#include "support/corpus.hpp"

using namespace leavitt;

namespace {

PartialActionSystem load(const char* name) { return PartialActionSystem::parse(fixtures::read_data(name)); }

}  // namespace

TEST_CASE("finite-support system on Q^3") {
  auto s = load("cubic.pact");
  CHECK(s.rank() == 3);
  CHECK(s.finite_support());
  CHECK(s.declared_degrees() == std::vector<GroupElement>{-1, 0, 1});
  CHECK(s.unit(1) == s.ring().parse_value("(1,0,0)"));
  CHECK(s.unit(0) == s.ring().one());
  CHECK(s.unit(2).is_zero());
  CHECK(s.apply(1, s.basis_element(1)) == s.basis_element(0));
  CHECK(s.apply(1, s.basis_element(2)).is_zero());
  CHECK(s.twist(1, -1).value == s.unit(1));

  auto axioms = check_axioms(s);
  CHECK(axioms.all_pass());
  for (const char* name : {"P1", "P2", "P3", "P4", "P5"}) CHECK(axioms[name].holds);
}

TEST_CASE("its crossed product") {
  auto s = load("cubic.pact");
  auto a = crossed_product(s);
  CHECK(a.dimension() == 5);
  CHECK(a.ring() == parse_ring("Q"));
  auto v = validate(a);
  CHECK(v.degrees_respected);
  CHECK(v.associative == Verdict::yes);
  CHECK(v.indeterminate_triples == 0);
  auto g = grading_check(a);
  CHECK(g.symmetric == Verdict::yes);
  CHECK(g.epsilon_strong == Verdict::yes);
  CHECK(g.strong == Verdict::no);
  CHECK(g.support == std::set<GroupElement>{-1, 0, 1});
  // epsilon_g = 1_g delta_0
  CHECK(a.render(g.epsilon_units.at(1)) == "e1_d^0");
  CHECK(a.render(g.epsilon_units.at(-1)) == "e2_d^0");
  CHECK(a.render(g.epsilon_units.at(0)) == "e1_d^0 + e2_d^0 + e3_d^0");
  CHECK(a.render(*a.multiply(parse_coordinates(a, "e1_d^1"), parse_coordinates(a, "e2_d^-1"))) == "e1_d^0");
  CHECK(linalg::is_zero(*a.multiply(parse_coordinates(a, "e1_d^1"), parse_coordinates(a, "e1_d^1"))));

  auto mod2 = induce_quotient(a, 2);
  auto q = grading_check(mod2);
  CHECK(q.epsilon_strong == Verdict::yes);
  CHECK(q.strong == Verdict::no);
}

TEST_CASE("classification of the Q^3 system") {
  auto r = classify_crossed(load("cubic.pact"));
  CHECK(r.noetherian_left == Verdict::yes);
  CHECK(r.noetherian_right == Verdict::yes);
  CHECK(r.artinian_left == Verdict::yes);
  CHECK(r.artinian_right == Verdict::yes);
  std::vector<std::string> ids;
  for (const auto& rule : r.rules) ids.push_back(rule.id);
  CHECK(std::find(ids.begin(), ids.end(), "crossed-noetherian-iff-coefficients") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "crossed-artinian-torsion-free") != ids.end());
}

TEST_CASE("a broken system fails (P2)") {
  auto s = load("bad_p2.pact");
  auto axioms = check_axioms(s);
  CHECK_FALSE(axioms.all_pass());
  CHECK_FALSE(axioms["P2"].holds);
  CHECK_FALSE(axioms["P2"].failure.empty());
  CHECK_THROWS_AS(crossed_product(s), PreconditionError);
}

TEST_CASE("a global Z action with infinite support") {
  auto s = load("swap.pact");
  CHECK_FALSE(s.finite_support());
  CHECK(check_axioms(s).all_pass());
  CHECK(s.apply(3, s.basis_element(0)) == s.basis_element(1));
  CHECK(s.apply(-2, s.basis_element(0)) == s.basis_element(0));
  CHECK_THROWS_AS(crossed_product(s), PreconditionError);
  auto r = classify_crossed(s);
  CHECK(r.noetherian_left == Verdict::yes);
  CHECK(r.artinian_left == Verdict::no);
  CHECK(r.semisimple == Verdict::no);
}

TEST_CASE("a twisted global action of Z/2") {
  auto s = load("twisted_z2.pact");
  CHECK(check_axioms(s).all_pass());
  auto a = crossed_product(s);
  CHECK(a.dimension() == 2);
  auto i = parse_coordinates(a, "e1_d^1");
  CHECK(a.render(*a.multiply(i, i)) == "-e1_d^0");
  auto g = grading_check(a);
  CHECK(g.strong == Verdict::yes);
  auto r = classify_crossed(s);
  CHECK(r.noetherian_left == Verdict::yes);
  CHECK(r.artinian_left == Verdict::yes);
}

TEST_CASE("a global action of Z/2 by swapping factors") {
  auto s = PartialActionSystem::parse(
      "ring: Q x Q\ngroup: table\nelements: 0 1\nrow 0: 0 1\nrow 1: 1 0\nunit 1 = 1\nalpha 1: e1 -> e2, e2 -> e1\n");
  CHECK(check_axioms(s).all_pass());
  auto a = crossed_product(s);
  CHECK(a.dimension() == 4);
  CHECK(grading_check(a).strong == Verdict::yes);
}

TEST_CASE("non-multiplicative alpha violates the axioms") {
  auto s = PartialActionSystem::parse(
      "ring: Q x Q\ngroup: table\nelements: 0 1\nrow 0: 0 1\nrow 1: 1 0\nunit 1 = 1\nalpha 1: e1 -> e1 + e2, e2 -> e2\n");
  CHECK_FALSE(check_axioms(s).all_pass());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(PartialActionSystem::parse("group: Z support 0\n"), ParseError);
  CHECK_THROWS_AS(PartialActionSystem::parse("ring: Q\ngroup: Z support 0\nbogus\n"), ParseError);
  CHECK_THROWS_AS(PartialActionSystem::parse("ring: Q x Q\ngroup: Z support 0 1\nunit 1 = e3\n"), ParseError);
  CHECK_THROWS_AS(PartialActionSystem::parse("ring: Q\ngroup: Z support 0 1\nunit 2 = 1\n"), Error);
}
