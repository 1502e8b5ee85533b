#include <random>

#include "doctest.h"
#include "leavitt/errors.hpp"
#include "leavitt/graph.hpp"
#include "support/corpus.hpp"

using namespace leavitt;

namespace {

// reach[u][v]: a path of length >= 1 from u to v.
std::vector<std::vector<bool>> reachability(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) reach[e.source][e.range] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  return reach;
}

// A vertex on a cycle with a second outgoing edge is exactly a cycle with an exit.
bool brute_ne(const Graph& g) {
  auto reach = reachability(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (reach[v][v] && g.out_edges(v).size() >= 2) return false;
  return true;
}

bool brute_acyclic(const Graph& g) {
  auto reach = reachability(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (reach[v][v]) return false;
  return true;
}

std::size_t longest_from(const Graph& g, VertexId v) {
  std::size_t best = 0;
  for (EdgeId e : g.out_edges(v)) best = std::max(best, 1 + longest_from(g, g.edge(e).range));
  return best;
}

}  // namespace

TEST_CASE("parse the corpus files") {
  auto a2 = fixtures::load_graph("a2.lpg");
  CHECK(a2.vertex_count() == 2);
  CHECK(a2.edge_count() == 1);
  CHECK(a2.find_edge("e").has_value());
  CHECK(a2.is_sink(1));
  CHECK(a2.special_edge(0) == EdgeId{0});
  CHECK_FALSE(a2.special_edge(1).has_value());
  CHECK(Graph::parse(a2.to_text()) == a2);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    Graph::parse("vertices: a b\nedge e: a -> c\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(Graph::parse("vertices: a a\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse("vertices: a\nedge e: a -> a\nedge e: a -> a\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse("vertices: a\nedge e a -> a\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse("edge e: a -> a\n"), ParseError);
}

TEST_CASE("analysis of the named graphs") {
  auto a3 = analyze(fixtures::load_graph("a3.lpg"));
  CHECK(a3.acyclic);
  CHECK(a3.condition_ne);
  CHECK(a3.max_path_length == std::size_t{2});
  CHECK(a3.sinks == std::vector<VertexId>{2});

  auto r1 = analyze(fixtures::load_graph("rose1.lpg"));
  CHECK_FALSE(r1.acyclic);
  CHECK(r1.condition_ne);
  CHECK_FALSE(r1.max_path_length.has_value());

  auto t = fixtures::load_graph("toeplitz.lpg");
  auto rt = analyze(t);
  CHECK_FALSE(rt.condition_ne);
  REQUIRE(rt.ne_witness);
  CHECK(t.path_to_string(rt.ne_witness->cycle) == "g");
  CHECK(t.edge(rt.ne_witness->exit).name == "a");
}

TEST_CASE("two cycles through one vertex violate (NE)") {
  auto g = Graph::parse("vertices: v\nedge x: v -> v\nedge y: v -> v\n");
  CHECK_FALSE(analyze(g).condition_ne);
  auto two = Graph::parse("vertices: a b\nedge p: a -> b\nedge q: b -> a\n");
  auto r = analyze(two);
  CHECK(r.condition_ne);
  CHECK_FALSE(r.acyclic);
  REQUIRE(r.cycle_witness);
  CHECK(r.cycle_witness->length() == 2);
}

TEST_CASE("random graphs agree with brute-force predicates") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = fixtures::random_graph(rng, 5, 7);
    auto rep = analyze(g);
    CAPTURE(g.to_text());
    CHECK(rep.condition_ne == brute_ne(g));
    CHECK(rep.acyclic == brute_acyclic(g));
    CHECK(rep.condition_ne == !rep.ne_witness.has_value());
    if (rep.ne_witness) {
      const auto& w = *rep.ne_witness;
      CHECK(w.cycle.source == w.cycle.range);
      bool on_cycle = false, is_cycle_edge = false;
      VertexId v = w.cycle.source;
      for (EdgeId e : w.cycle.edges) {
        if (g.edge(w.exit).source == v) on_cycle = true;
        if (e == w.exit) is_cycle_edge = true;
        v = g.edge(e).range;
      }
      CHECK(on_cycle);
      CHECK_FALSE(is_cycle_edge);
    }
    if (rep.acyclic) {
      std::size_t longest = 0;
      for (VertexId u = 0; u < g.vertex_count(); ++u) longest = std::max(longest, longest_from(g, u));
      CHECK(rep.max_path_length == longest);
    }
  }
}

TEST_CASE("path enumeration counts match adjacency powers") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = fixtures::random_graph(rng, 4, 6);
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> power(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    for (std::size_t len = 0; len <= 3; ++len) {
      for (VertexId v = 0; v < n; ++v) {
        std::size_t expected = 0;
        for (std::size_t u = 0; u < n; ++u) expected += power[u][v];
        CHECK(enumerate_paths(g, len, v).size() == expected);
        for (const auto& p : enumerate_paths(g, len, v)) {
          CHECK(p.length() == len);
          CHECK(p.range == v);
        }
      }
      std::vector<std::vector<std::size_t>> next(n, std::vector<std::size_t>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& e : g.edges()) next[i][e.range] += power[i][e.source];
      power = next;
    }
  }
}

TEST_CASE("cycle rotation") {
  auto g = Graph::parse("vertices: b a\nedge p: b -> a\nedge q: a -> b\n");
  auto c = g.make_path({0, 1});
  auto n = normalize_cycle(g, c);
  CHECK(g.vertex_name(n.source) == "a");
  auto r = rotate_cycle_to(g, c, 0);
  REQUIRE(r);
  CHECK(r->edges == std::vector<EdgeId>{0, 1});
  CHECK_THROWS_AS(g.make_path({0, 0}), PreconditionError);
}

TEST_CASE("depths") {
  auto d = depths(fixtures::load_graph("a3.lpg"));
  CHECK(d[0] == std::size_t{0});
  CHECK(d[2] == std::size_t{2});
  auto t = depths(fixtures::load_graph("toeplitz.lpg"));
  CHECK_FALSE(t[1].has_value());
}

TEST_CASE("trailing comments") {
  auto g = Graph::parse("vertices: a b  # two\nedge e: a -> b # one edge\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge(0).name == "e");
}
