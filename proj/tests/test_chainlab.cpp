#include <set>

#include "doctest.h"
#include "leavitt/chainlab.hpp"
#include "leavitt/errors.hpp"
#include "leavitt/partial.hpp"
#include "leavitt/structure.hpp"
#include "support/corpus.hpp"

using namespace leavitt;

namespace {

using Element = FiniteRingInstance::Element;

// Every subset that contains 0 and is closed under + and right multiplication.
std::set<ElementSet> brute_force_right_ideals(const FiniteRingInstance& s) {
  const std::size_t n = s.size();
  REQUIRE(n <= 16);
  std::vector<std::vector<Element>> add(n, std::vector<Element>(n)), mul(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      add[a][b] = s.add(a, b);
      mul[a][b] = s.multiply(a, b);
    }
  std::set<ElementSet> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (!(mask & 1ul)) continue;  // element 0 is the zero element
    auto in = [&](Element x) { return (mask >> x) & 1ul; };
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) {
      if (!in(a)) continue;
      for (Element b = 0; b < n && ok; ++b) {
        if (in(b) && !in(add[a][b])) ok = false;
        if (!in(mul[a][b])) ok = false;
      }
    }
    if (!ok) continue;
    ElementSet bits(n);
    for (Element x = 0; x < n; ++x)
      if (in(x)) bits.set(x);
    out.insert(bits);
  }
  return out;
}

void check_against_brute_force(const FiniteRingInstance& s) {
  auto expected = brute_force_right_ideals(s);
  auto found = enumerate_right_ideals(s);
  std::set<ElementSet> got;
  for (const auto& i : found) got.insert(i.members);
  CHECK(got.size() == found.size());
  CHECK(got == expected);
  for (std::size_t i = 1; i < found.size(); ++i) CHECK(found[i - 1].size() <= found[i].size());
}

FiniteRingInstance a2_over_f2() {
  auto alg = LeavittAlgebra::create(fixtures::load_graph("a2.lpg"), parse_ring("Z/2"));
  return FiniteRingInstance(as_graded_algebra(*alg));
}

}  // namespace

TEST_CASE("element encoding") {
  auto s = a2_over_f2();
  CHECK(s.size() == 16);
  for (Element x = 0; x < s.size(); ++x) {
    CHECK(s.encode(s.decode(x)) == x);
    CHECK(s.add(x, x) == s.zero());
  }
  CHECK(s.min_degree() == -1);
}

TEST_CASE("right ideals of small rings match brute force") {
  check_against_brute_force(FiniteRingInstance::trivially_graded(parse_ring("Z/2")));
  check_against_brute_force(FiniteRingInstance::trivially_graded(parse_ring("Z/4")));
  check_against_brute_force(FiniteRingInstance::trivially_graded(parse_ring("Z/2 x Z/2")));
  check_against_brute_force(FiniteRingInstance::trivially_graded(parse_ring("Z/12")));
  check_against_brute_force(a2_over_f2());
}

TEST_CASE("ideal counts") {
  CHECK(enumerate_right_ideals(FiniteRingInstance::trivially_graded(parse_ring("Z/2"))).size() == 2);
  CHECK(enumerate_right_ideals(FiniteRingInstance::trivially_graded(parse_ring("Z/4"))).size() == 3);
  CHECK(enumerate_right_ideals(FiniteRingInstance::trivially_graded(parse_ring("Z/2 x Z/2"))).size() == 4);
  // M_2(F_2): the zero ideal, three row spaces and the whole ring
  CHECK(enumerate_right_ideals(a2_over_f2()).size() == 5);
}

TEST_CASE("every enumerated ideal is a right ideal") {
  auto s = a2_over_f2();
  for (const auto& i : enumerate_right_ideals(s)) CHECK(is_right_ideal(s, i.members));
}

TEST_CASE("leading ideals") {
  auto s = a2_over_f2();
  ElementSet all(s.size());
  all.set();
  ElementSet zero(s.size());
  zero.set(s.zero());
  for (std::size_t n = 1; n <= 3; ++n) {
    auto full = leading_ideal(s, all, n);
    CHECK(full.is_right_ideal);
    CHECK(full.members.count() == 4);  // S_0 = span(v1, v2 = e^*e) over F_2
    CHECK(leading_ideal(s, zero, n).members.count() == 1);
  }
  CHECK_THROWS_AS(leading_ideal(s, all, 0), PreconditionError);
}

TEST_CASE("trivially graded rings have Id_n(I) = I") {
  auto s = FiniteRingInstance::trivially_graded(parse_ring("Z/4"));
  for (const auto& i : enumerate_right_ideals(s)) CHECK(leading_ideal(s, i.members, 1).members == i.members);
  auto rep = verify_separation(s);
  CHECK(rep.pass());
  CHECK(rep.max_discriminating_n == 1);
}

TEST_CASE("separation on graded instances") {
  auto rep = verify_separation(a2_over_f2());
  CHECK(rep.ideal_count == 5);
  CHECK(rep.monotone);
  CHECK(rep.leading_ideals_valid);
  CHECK_FALSE(rep.failure.has_value());
  CHECK(rep.pass());

  auto crossed = crossed_product(PartialActionSystem::parse(fixtures::read_data("cubic_f2.pact")));
  auto cp = verify_separation(FiniteRingInstance(crossed));
  CHECK(cp.pass());
  CHECK(cp.nested_pairs > 0);

  auto a3 = LeavittAlgebra::create(fixtures::load_graph("a3.lpg"), parse_ring("Z/2"));
  CHECK_THROWS_AS(FiniteRingInstance(as_graded_algebra(*a3), 256), CapExceeded);
}

TEST_CASE("instance preconditions") {
  CHECK_THROWS_AS(FiniteRingInstance::trivially_graded(parse_ring("Q")), PreconditionError);
  CHECK_THROWS_AS(FiniteRingInstance(laurent_even_example(2, parse_ring("Z/2"))), PreconditionError);
  auto z2 = parse_graded(fixtures::read_data("z2_group_algebra.grd"));
  CHECK_THROWS_AS(FiniteRingInstance{z2}, PreconditionError);
}
