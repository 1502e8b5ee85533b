// leavitt: command-line front end for the library.
//
// Exit codes: 0 success, 1 malformed input, 2 precondition failure,
// 3 size cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leavitt/algebra.hpp"
#include "leavitt/chainlab.hpp"
#include "leavitt/classify.hpp"
#include "leavitt/errors.hpp"
#include "leavitt/expression.hpp"
#include "leavitt/graded.hpp"
#include "leavitt/partial.hpp"
#include "leavitt/structure.hpp"

using namespace leavitt;

namespace {

// Prefixes errors raised while handling one input with its origin.
struct Located : Error {
  int code;
  Located(const std::string& where, const Error& e, int c) : Error(where + ": " + e.what()), code(c) {}
};

int code_of(const Error& e) {
  if (auto l = dynamic_cast<const Located*>(&e)) return l->code;
  if (dynamic_cast<const ParseError*>(&e)) return 1;
  if (dynamic_cast<const CapExceeded*>(&e)) return 3;
  return 2;
}

template <class F>
auto at(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Located&) {
    throw;
  } catch (const Error& e) {
    throw Located(where, e, code_of(e));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Located(path, ParseError("cannot open file"), 1);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::shared_ptr<const LeavittAlgebra> load_algebra(const std::string& graph_path, const std::string& ring_text) {
  Graph g = at(graph_path, [&] { return Graph::parse(read_file(graph_path)); });
  RingDescriptor r = at("ring '" + ring_text + "'", [&] { return parse_ring(ring_text); });
  return LeavittAlgebra::create(std::move(g), std::move(r));
}

NormalElement load_element(const LeavittAlgebra& alg, const std::string& expr) {
  return at("expression '" + expr + "'", [&] { return parse_element(alg, expr); });
}

std::string ends_with_ext(const std::string& path) {
  auto dot = path.rfind('.');
  return dot == std::string::npos ? "" : path.substr(dot);
}

GradedAlgebra with_window(const GradedAlgebra& a, std::optional<std::int64_t> window) {
  if (!window) return a;
  std::vector<std::vector<std::optional<Coordinates>>> products(a.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j) products[i].push_back(a.product(i, j));
  return GradedAlgebra(a.ring(), a.group(), a.basis_names(), a.degrees(), std::move(products), window);
}

void print_validation(const GradedAlgebra& a, const ValidationReport& v) {
  std::cout << "degrees respected: " << (v.degrees_respected ? "yes" : "no") << "\n";
  if (v.degree_failure)
    std::cout << "  failing product: " << a.basis_name(v.degree_failure->first) << " * "
              << a.basis_name(v.degree_failure->second) << "\n";
  std::cout << "associative: " << to_string(v.associative) << "\n";
  if (v.associativity_failure) {
    auto [x, y, z] = *v.associativity_failure;
    std::cout << "  failing triple: " << a.basis_name(x) << ", " << a.basis_name(y) << ", " << a.basis_name(z) << "\n";
  }
  if (v.indeterminate_triples) std::cout << "  triples with unknown products: " << v.indeterminate_triples << "\n";
}

void print_grading(const GradedAlgebra& a, const GradingReport& r) {
  const Group& g = a.group();
  std::cout << "support:";
  for (auto d : r.support) std::cout << " " << g.name(d);
  std::cout << "\nsymmetric: " << to_string(r.symmetric);
  if (r.symmetric_witness) std::cout << " (fails at " << g.name(*r.symmetric_witness) << ")";
  std::cout << "\nstrong: " << to_string(r.strong);
  if (r.strong_witness)
    std::cout << " (S_" << g.name(r.strong_witness->first) << " S_" << g.name(r.strong_witness->second) << " != S_"
              << g.name(g.multiply(r.strong_witness->first, r.strong_witness->second)) << ")";
  std::cout << "\nepsilon-strong: " << to_string(r.epsilon_strong);
  if (r.epsilon_witness) std::cout << " (fails at " << g.name(*r.epsilon_witness) << ")";
  std::cout << "\n";
  for (const auto& [d, u] : r.epsilon_units) std::cout << "  epsilon_" << g.name(d) << " = " << a.render(u) << "\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
}

FiniteRingInstance load_instance(const std::string& path, const std::optional<std::string>& ring, std::size_t cap) {
  const std::string ext = ends_with_ext(path);
  if (ext == ".lpg") {
    if (!ring) throw Located(path, PreconditionError("a graph file needs --ring"), 2);
    auto alg = load_algebra(path, *ring);
    return at(path, [&] { return FiniteRingInstance(as_graded_algebra(*alg), cap); });
  }
  const std::string body = read_file(path);
  if (ext == ".pact")
    return at(path, [&] { return FiniteRingInstance(crossed_product(PartialActionSystem::parse(body)), cap); });
  return at(path, [&] { return FiniteRingInstance(parse_graded(body), cap); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leavitt path algebras, graded rings and partial crossed products"};
  app.require_subcommand(1);

  std::string graph_path, ring_text;
  auto add_lpa = [&](CLI::App* sub) {
    sub->add_option("-g,--graph", graph_path, "graph file (.lpg)")->required();
    sub->add_option("-r,--ring", ring_text, "coefficient ring, e.g. Q, Z, Z/6, Q x Z/2")->required();
  };
  bool json = false;

  auto* classify = app.add_subcommand("classify", "chain-condition verdicts for L_R(E)");
  add_lpa(classify);
  classify->add_flag("--json", json, "machine-readable output");

  std::string expr, expr2;
  auto* nf = app.add_subcommand("nf", "normal form of an element");
  add_lpa(nf);
  nf->add_option("expr", expr)->required();

  auto* mul = app.add_subcommand("mul", "product of two elements");
  add_lpa(mul);
  mul->add_option("lhs", expr)->required();
  mul->add_option("rhs", expr2)->required();

  auto* deg = app.add_subcommand("deg", "degree in the canonical Z-grading");
  add_lpa(deg);
  deg->add_option("expr", expr)->required();

  int eps_degree = 0;
  std::optional<std::int64_t> window;
  auto* eps = app.add_subcommand("epsilon", "the epsilon unit of a degree");
  add_lpa(eps);
  eps->add_option("degree", eps_degree)->required()->allow_extra_args(false);
  eps->add_option("--window", window, "degree bound for graphs with cycles");

  auto* trace = app.add_subcommand("trace-inv", "inverse of the trace unit (acyclic graphs)");
  add_lpa(trace);

  std::size_t level = 0;
  auto* structure = app.add_subcommand("structure", "D_n as a product of matrix rings");
  add_lpa(structure);
  structure->add_option("n", level)->required();

  std::size_t count = kWitnessCount;
  auto* witness = app.add_subcommand("witness-ne", "orthogonal idempotents when Condition (NE) fails");
  add_lpa(witness);
  witness->add_option("n", count)->required();

  std::string file;
  auto* grading = app.add_subcommand("check-grading", "validate a graded algebra and test its grading");
  grading->add_option("file", file)->required();
  grading->add_option("--window", window, "degree bound for Z-gradings");

  auto* crossed = app.add_subcommand("crossed", "unital twisted partial actions");
  crossed->require_subcommand(1);
  auto* c_check = crossed->add_subcommand("check", "axioms (P1)-(P5)");
  c_check->add_option("file", file)->required();
  auto* c_mul = crossed->add_subcommand("mul", "multiply in the crossed product (no operands: full table)");
  c_mul->add_option("file", file)->required();
  c_mul->add_option("lhs", expr);
  c_mul->add_option("rhs", expr2);
  auto* c_classify = crossed->add_subcommand("classify", "chain-condition verdicts");
  c_classify->add_option("file", file)->required();
  c_classify->add_flag("--json", json, "machine-readable output");

  std::optional<std::string> chain_ring;
  std::size_t cap = kDefaultElementCap;
  auto* chain = app.add_subcommand("chainlab", "exhaustive right-ideal checks on a finite graded ring");
  chain->require_subcommand(1);
  auto* ch_ideals = chain->add_subcommand("ideals", "list every right ideal");
  auto* ch_sep = chain->add_subcommand("separation", "check Id_n monotonicity and separation");
  for (auto* sub : {ch_ideals, ch_sep}) {
    sub->add_option("file", file, ".lpg graph (with --ring), .pact partial action or graded-algebra file")->required();
    sub->add_option("-r,--ring", chain_ring, "coefficient ring for a graph file");
    sub->add_option("--cap", cap, "largest ring size enumerated");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*classify) {
      Graph g = at(graph_path, [&] { return Graph::parse(read_file(graph_path)); });
      RingDescriptor r = at("ring '" + ring_text + "'", [&] { return parse_ring(ring_text); });
      auto report = classify_lpa(g, r);
      std::cout << (json ? to_json(report) : to_text(report)) << "\n";
    } else if (*nf) {
      auto alg = load_algebra(graph_path, ring_text);
      std::cout << load_element(*alg, expr).to_string() << "\n";
    } else if (*mul) {
      auto alg = load_algebra(graph_path, ring_text);
      auto a = load_element(*alg, expr);
      auto b = load_element(*alg, expr2);
      std::cout << (a * b).to_string() << "\n";
    } else if (*deg) {
      auto alg = load_algebra(graph_path, ring_text);
      auto x = load_element(*alg, expr);
      if (x.is_zero()) {
        std::cout << "0 is homogeneous of every degree\n";
      } else if (auto d = x.homogeneous_degree()) {
        std::cout << *d << "\n";
      } else {
        std::cout << "not homogeneous; components:\n";
        for (const auto& [d, part] : degree_decompose(x)) std::cout << "  " << d << ": " << part.to_string() << "\n";
      }
    } else if (*eps) {
      auto alg = load_algebra(graph_path, ring_text);
      std::optional<std::size_t> w;
      if (window) {
        if (*window < 0) throw PreconditionError("--window must be nonnegative");
        w = static_cast<std::size_t>(*window);
      }
      std::cout << at("epsilon", [&] { return epsilon(*alg, eps_degree, w); }).value.to_string() << "\n";
    } else if (*trace) {
      auto alg = load_algebra(graph_path, ring_text);
      auto sys = at("trace-inv", [&] { return trace_inverse(*alg); });
      const Graph& g = alg->graph();
      std::cout << "trace: " << sys.trace.to_string() << "\n";
      std::cout << "inverse: " << sys.inverse.to_string() << "\n";
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        std::cout << "  n_" << g.vertex_name(v) << " = " << sys.vertex_counts[v].str() << ", m_" << g.vertex_name(v)
                  << " = " << sys.vertex_solution[v].to_string() << "\n";
      for (std::size_t i = 0; i < sys.paths.size(); ++i)
        std::cout << "  n'_" << g.path_to_string(sys.paths[i].alpha) << " = " << sys.paths[i].count.str() << ", m'_"
                  << g.path_to_string(sys.paths[i].alpha) << " = " << sys.path_solution[i].to_string() << "\n";
    } else if (*structure) {
      auto alg = load_algebra(graph_path, ring_text);
      auto d = at("structure", [&] { return dn_structure(*alg, level); });
      std::cout << "D_" << level << " = " << d.describe() << "\n";
      std::cout << "dimension: " << d.dimension() << "\n";
    } else if (*witness) {
      auto alg = load_algebra(graph_path, ring_text);
      const auto& rep = alg->report();
      if (rep.condition_ne) throw Located("witness-ne", PreconditionError("Condition (NE) holds: no cycle has an exit"), 2);
      const Graph& g = alg->graph();
      std::cout << "cycle: " << g.path_to_string(rep.ne_witness->cycle) << "\n";
      std::cout << "exit: " << g.edge(rep.ne_witness->exit).name << "\n";
      for (const auto& x : ne_witness_idempotents(*alg, *rep.ne_witness, count)) std::cout << x.to_string() << "\n";
    } else if (*grading) {
      auto a = at(file, [&] { return with_window(parse_graded(read_file(file)), window); });
      auto v = validate(a);
      print_validation(a, v);
      if (!v.ok()) throw Located(file, PreconditionError("not a graded algebra"), 2);
      print_grading(a, grading_check(a));
    } else if (*c_check) {
      auto s = at(file, [&] { return PartialActionSystem::parse(read_file(file)); });
      auto rep = check_axioms(s);
      for (const auto& r : rep.results) {
        std::cout << r.name << ": " << (r.holds ? "holds" : "fails");
        if (!r.holds) std::cout << " (" << r.failure << ")";
        std::cout << "\n";
      }
      if (!rep.all_pass()) return 2;
    } else if (*c_mul) {
      auto s = at(file, [&] { return PartialActionSystem::parse(read_file(file)); });
      auto cp = at(file, [&] { return crossed_product(s); });
      if (expr.empty()) {
        for (std::size_t i = 0; i < cp.dimension(); ++i)
          for (std::size_t j = 0; j < cp.dimension(); ++j)
            std::cout << cp.basis_name(i) << " * " << cp.basis_name(j) << " = " << cp.render(*cp.product(i, j)) << "\n";
      } else {
        if (expr2.empty()) throw Located("crossed mul", ParseError("need two operands"), 1);
        auto x = at("expression '" + expr + "'", [&] { return parse_coordinates(cp, expr); });
        auto y = at("expression '" + expr2 + "'", [&] { return parse_coordinates(cp, expr2); });
        std::cout << cp.render(*cp.multiply(x, y)) << "\n";
      }
    } else if (*c_classify) {
      auto s = at(file, [&] { return PartialActionSystem::parse(read_file(file)); });
      auto report = at(file, [&] { return classify_crossed(s); });
      std::cout << (json ? to_json(report) : to_text(report)) << "\n";
    } else if (*ch_ideals) {
      auto inst = load_instance(file, chain_ring, cap);
      auto ideals = enumerate_right_ideals(inst);
      std::cout << "elements: " << inst.size() << "\nright ideals: " << ideals.size() << "\n";
      for (std::size_t i = 0; i < ideals.size(); ++i) {
        std::cout << "  I" << i << " (" << ideals[i].size() << " elements) generated by";
        if (ideals[i].generators.empty()) std::cout << " 0";
        for (std::size_t k = 0; k < ideals[i].generators.size(); ++k)
          std::cout << (k ? ", " : " ") << inst.render(ideals[i].generators[k]);
        std::cout << "\n";
      }
    } else if (*ch_sep) {
      auto inst = load_instance(file, chain_ring, cap);
      auto rep = verify_separation(inst);
      std::cout << "elements: " << inst.size() << "\nright ideals: " << rep.ideal_count
                << "\nnested pairs: " << rep.nested_pairs << "\nwindows examined: 1.." << rep.largest_n
                << "\nlargest discriminating n: " << rep.max_discriminating_n
                << "\nmonotone: " << (rep.monotone ? "yes" : "no")
                << "\nleading ideals are right ideals: " << (rep.leading_ideals_valid ? "yes" : "no")
                << "\nseparation: " << (rep.pass() ? "pass" : "fail") << "\n";
      if (rep.failure) std::cout << "  I" << rep.failure->first << " inside I" << rep.failure->second
                                 << " with equal Id_n for every n\n";
      if (!rep.pass()) return 2;
    }
  } catch (const Error& e) {
    std::cerr << "leavitt: " << e.what() << "\n";
    return code_of(e);
  }
  return 0;
}
