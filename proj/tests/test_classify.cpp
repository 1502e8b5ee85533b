#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "leavitt/classify.hpp"
#include "leavitt/errors.hpp"
#include "support/corpus.hpp"

using namespace leavitt;

namespace {

struct GoldenRow {
  std::string graph, ring, noetherian, artinian, semisimple;
};

std::vector<GoldenRow> golden() {
  std::vector<GoldenRow> rows;
  std::istringstream in(fixtures::read_data("classify_golden.txt"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string x; words >> x;) w.push_back(x);
    REQUIRE(w.size() >= 5);
    std::string ring = w[1];
    for (std::size_t i = 2; i + 3 < w.size(); ++i) ring += " " + w[i];
    rows.push_back({w[0], ring, w[w.size() - 3], w[w.size() - 2], w[w.size() - 1]});
  }
  return rows;
}

std::string str(Verdict v) { return std::string(to_string(v)); }

}  // namespace

TEST_CASE("golden truth table") {
  auto rows = golden();
  CHECK(rows.size() >= 20);
  for (const auto& row : rows) {
    CAPTURE(row.graph);
    CAPTURE(row.ring);
    auto r = classify_lpa(fixtures::load_graph(row.graph), parse_ring(row.ring));
    CHECK(str(r.noetherian_left) == row.noetherian);
    CHECK(str(r.noetherian_right) == row.noetherian);
    CHECK(str(r.artinian_left) == row.artinian);
    CHECK(str(r.artinian_right) == row.artinian);
    CHECK(str(r.semisimple) == row.semisimple);
  }
}

TEST_CASE("witnesses for the toeplitz graph") {
  auto r = classify_lpa(fixtures::load_graph("toeplitz.lpg"), parse_ring("Q"));
  CHECK(r.witnesses.ne_cycle == std::string("g"));
  CHECK(r.witnesses.ne_exit == std::string("a"));
  CHECK(r.witnesses.ne_idempotents.size() == kWitnessCount);
  CHECK(r.witnesses.ne_idempotents.front() == "a.a^*");
  CHECK(r.witnesses.infinite_support.has_value());
  bool cites_ne = false;
  for (const auto& rule : r.rules) cites_ne = cites_ne || rule.id == "ne-failure-orthogonal-idempotents";
  CHECK(cites_ne);
}

TEST_CASE("witnesses for acyclic and cyclic NE graphs") {
  auto a2 = classify_lpa(fixtures::load_graph("a2.lpg"), parse_ring("Q"));
  CHECK(a2.witnesses.support_bound == std::size_t{1});
  CHECK(a2.witnesses.trace == std::string("2*v1 + 2*v2"));
  CHECK(a2.witnesses.trace_inverse == std::string("1/2*v1 + 1/2*v2"));

  auto r1 = classify_lpa(fixtures::load_graph("rose1.lpg"), parse_ring("Z"));
  CHECK(r1.noetherian_left == Verdict::yes);
  CHECK(r1.artinian_left == Verdict::no);
  CHECK(r1.witnesses.stabilization_level == std::size_t{0});
  CHECK(r1.witnesses.infinite_support.has_value());

  auto z6 = classify_lpa(fixtures::load_graph("a2.lpg"), parse_ring("Z/6"));
  bool gap = false;
  for (const auto& rule : z6.rules) gap = gap || rule.id == "semisimple-integer-hypothesis-gap";
  CHECK(gap);
}

TEST_CASE("text and JSON agree") {
  for (const char* g : {"a2.lpg", "rose1.lpg", "toeplitz.lpg"})
    for (const char* ring : {"Q", "Z", "Z/6"}) {
      auto r = classify_lpa(fixtures::load_graph(g), parse_ring(ring));
      auto j = nlohmann::json::parse(to_json(r));
      CHECK(j.at("noetherian_left") == str(r.noetherian_left));
      CHECK(j.at("noetherian_right") == str(r.noetherian_right));
      CHECK(j.at("artinian_left") == str(r.artinian_left));
      CHECK(j.at("artinian_right") == str(r.artinian_right));
      CHECK(j.at("semisimple") == str(r.semisimple));
      CHECK(j.at("rules").size() == r.rules.size());
      const std::string text = to_text(r);
      CHECK(text.find("noetherian: " + str(r.noetherian_left)) != std::string::npos);
      CHECK(text.find("semisimple: " + str(r.semisimple)) != std::string::npos);
    }
}

TEST_CASE("rule table") {
  CHECK(rule("lpa-noetherian-iff-ne-and-coefficients").statement.find("noetherian") != std::string::npos);
  CHECK_THROWS(rule("no-such-rule"));
}
