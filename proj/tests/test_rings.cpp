#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "leavitt/errors.hpp"
#include "leavitt/linalg.hpp"
#include "leavitt/rings.hpp"

using namespace leavitt;

TEST_CASE("ring descriptors parse and render canonically") {
  CHECK(parse_ring("Q").to_string() == "Q");
  CHECK(parse_ring("Z/4").to_string() == "Z/4");
  CHECK(parse_ring("Q x Z/2 x Z").arity() == 3);
  CHECK(parse_ring("Q x Z/2").to_string() == "Q x Z/2");
  CHECK(parse_ring("Z/6") == RingDescriptor::modular(6));
  CHECK_THROWS_AS(parse_ring("Z/1"), Error);
  CHECK_THROWS_AS(parse_ring("R"), ParseError);
  CHECK_THROWS_AS(parse_ring(""), ParseError);
}

TEST_CASE("structural flags") {
  auto q = ring_flags(parse_ring("Q"));
  CHECK(q.noetherian_left);
  CHECK(q.artinian_left);
  CHECK(q.semisimple);
  CHECK(q.all_nonzero_integers_invertible);

  auto z = ring_flags(parse_ring("Z"));
  CHECK(z.noetherian_right);
  CHECK_FALSE(z.artinian_right);
  CHECK_FALSE(z.semisimple);

  auto z4 = ring_flags(parse_ring("Z/4"));
  CHECK(z4.artinian_left);
  CHECK_FALSE(z4.semisimple);
  CHECK_FALSE(z4.all_nonzero_integers_invertible);

  auto z6 = ring_flags(parse_ring("Z/6"));
  CHECK(z6.semisimple);
  CHECK_FALSE(z6.all_nonzero_integers_invertible);

  auto z5 = ring_flags(parse_ring("Z/5"));
  CHECK(z5.semisimple);
  CHECK_FALSE(z5.all_nonzero_integers_invertible);  // 5 = 0

  auto mixed = ring_flags(parse_ring("Q x Z"));
  CHECK(mixed.noetherian_left);
  CHECK_FALSE(mixed.artinian_left);
}

TEST_CASE("squarefree and prime helpers") {
  CHECK(is_squarefree(6));
  CHECK_FALSE(is_squarefree(12));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("values reduce canonically") {
  auto z4 = parse_ring("Z/4");
  CHECK(z4.parse_value("-1").to_string() == "3");
  CHECK(z4.parse_value("1/3") == z4.from_integer(3));
  CHECK_THROWS(z4.parse_value("1/2"));
  CHECK_THROWS(parse_ring("Z").parse_value("1/2"));
  CHECK(parse_ring("Q").parse_value("2/4").to_string() == "1/2");
  auto p = parse_ring("Q x Z/3");
  CHECK(p.parse_value("(1/2,2)") * p.parse_value("(2,2)") == p.one());
  CHECK(p.parse_value("5") == p.parse_value("(5,2)"));
}

TEST_CASE("modular inverses agree with exhaustive search") {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    auto ring = RingDescriptor::modular(n);
    for (std::uint64_t a = 0; a < n; ++a) {
      std::optional<std::uint64_t> expected;
      for (std::uint64_t b = 0; b < n; ++b)
        if (a * b % n == 1 % n) expected = b;
      auto got = ring.from_integer(a).inverse();
      REQUIRE(got.has_value() == expected.has_value());
      if (got) CHECK(*got == ring.from_integer(*expected));
    }
  }
}

TEST_CASE("ring axioms on random values") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  for (const char* text : {"Z", "Q", "Z/6", "Q x Z/4"}) {
    auto ring = parse_ring(text);
    for (int i = 0; i < 200; ++i) {
      auto a = ring.from_integer(d(rng)), b = ring.from_integer(d(rng)), c = ring.from_integer(d(rng));
      if (auto inv = c.inverse(); inv && d(rng) > 0) c = *inv;
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == ring.zero());
      CHECK(a * ring.one() == a);
    }
  }
}

TEST_CASE("solve returns genuine solutions over Q") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  auto q = parse_ring("Q");
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 3, cols = 4;
    linalg::Matrix a(rows, linalg::Vector(cols, q.zero()));
    linalg::Vector x0(cols, q.zero());
    for (auto& row : a)
      for (auto& v : row) v = q.from_integer(d(rng));
    for (auto& v : x0) v = q.from_integer(d(rng));
    linalg::Vector b(rows, q.zero());
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) b[i] += a[i][j] * x0[j];
    auto x = linalg::solve(q, a, b, cols);
    REQUIRE(x);
    for (std::size_t i = 0; i < rows; ++i) {
      RingValue s = q.zero();
      for (std::size_t j = 0; j < cols; ++j) s += a[i][j] * (*x)[j];
      CHECK(s == b[i]);
    }
  }
}

TEST_CASE("span membership over Z/6 and Z/4 matches enumeration") {
  std::mt19937 rng(3);
  for (std::uint64_t n : {4u, 6u}) {
    auto ring = RingDescriptor::modular(n);
    std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<linalg::Vector> gens(2, linalg::Vector(2, ring.zero()));
      for (auto& g : gens)
        for (auto& v : g) v = ring.from_integer(d(rng));
      std::set<std::pair<std::uint64_t, std::uint64_t>> span;
      for (std::uint64_t s = 0; s < n; ++s)
        for (std::uint64_t t = 0; t < n; ++t) {
          auto x = linalg::add(linalg::scale(ring.from_integer(s), gens[0]), linalg::scale(ring.from_integer(t), gens[1]));
          span.insert({static_cast<std::uint64_t>(numerator(x[0].part(0))), static_cast<std::uint64_t>(numerator(x[1].part(0)))});
        }
      for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = 0; b < n; ++b) {
          linalg::Vector target{ring.from_integer(a), ring.from_integer(b)};
          CHECK(linalg::in_span(ring, gens, target) == static_cast<bool>(span.count({a, b})));
        }
    }
  }
}

TEST_CASE("span membership over Z") {
  auto z = parse_ring("Z");
  std::vector<linalg::Vector> gens{{z.from_integer(2), z.from_integer(0)}, {z.from_integer(0), z.from_integer(3)}};
  CHECK(linalg::in_span(z, gens, {z.from_integer(4), z.from_integer(-3)}));
  CHECK_FALSE(linalg::in_span(z, gens, {z.from_integer(1), z.from_integer(0)}));
  std::vector<linalg::Vector> two{{z.from_integer(4)}, {z.from_integer(6)}};
  CHECK(linalg::in_span(z, two, {z.from_integer(2)}));
  CHECK_FALSE(linalg::in_span(z, two, {z.from_integer(3)}));
}

TEST_CASE("rank") {
  using R = Rational;
  CHECK(linalg::rank({{R(1), R(2)}, {R(2), R(4)}}) == 1);
  CHECK(linalg::rank({{R(1), R(0)}, {R(0), R(1)}, {R(1), R(1)}}) == 2);
  CHECK(linalg::rank({}) == 0);
}
