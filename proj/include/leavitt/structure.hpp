#pragma once

// Structure computations on a Leavitt path algebra: epsilon units of the
// canonical Z-grading, the C_m filtration, matrix models of D_n and of the
// whole algebra, the orthogonal idempotents of a cycle with an exit, and
// the trace unit with its inverse.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leavitt/algebra.hpp"
#include "leavitt/graded.hpp"
#include "leavitt/linalg.hpp"

namespace leavitt {

/// Reduced monomials alpha beta* with r(alpha) = r(beta) and both lengths <= cap, in term order.
std::vector<Monomial> reduced_monomials(const LeavittAlgebra& alg, std::size_t cap);
std::vector<Monomial> reduced_monomials_of_degree(const LeavittAlgebra& alg, int degree, std::size_t cap);

struct EpsilonUnit {
  int degree;
  NormalElement value;
};

/// Degree-0 monomials checked for centrality of a freshly built epsilon unit.
inline constexpr std::size_t kEpsilonCentralityBudget = 5000;

/// epsilon_i of the canonical grading. Cyclic graphs need a window with |i| <= window.
/// Before returning, the unit laws are verified for every monomial with path lengths
/// up to the window (or the maximal path length for acyclic graphs), and centrality
/// on the shortest kEpsilonCentralityBudget degree-0 monomials.
EpsilonUnit epsilon(const LeavittAlgebra& alg, int i, std::optional<std::size_t> window = std::nullopt);

/// The same unit found by solving u x = x, y u = y inside span(S_i S_{-i}); acyclic graphs only.
/// nullopt when the linear system has no solution.
std::optional<NormalElement> epsilon_by_linear_solve(const LeavittAlgebra& alg, int i);

/// The closed form of epsilon_i as a list of paths alpha with epsilon_i = sum alpha alpha*.
std::vector<Path> epsilon_paths(const LeavittAlgebra& alg, int i);

struct CmFiltration {
  std::size_t level = 0;  // least k with C_{k+1} inside C_0 + ... + C_k
  std::vector<std::vector<Monomial>> spans;  // spanning monomials of C_0..C_k
};

/// Requires Condition (NE).
CmFiltration cm_filtration(const LeavittAlgebra& alg);

struct MatrixFactor {
  enum class Kind { sink_level, top, sink };
  Kind kind;
  std::size_t level;  // path length for sink_level/top; unused for sink
  VertexId vertex;
  std::vector<Path> paths;  // row/column labels
  std::size_t size() const { return paths.size(); }
};

using Block = linalg::Matrix;
using BlockMatrix = std::vector<Block>;

class MatrixDecomposition {
 public:
  MatrixDecomposition(std::shared_ptr<const LeavittAlgebra> alg, std::vector<MatrixFactor> factors,
                      std::optional<std::size_t> stop_length);

  const std::vector<MatrixFactor>& factors() const { return factors_; }
  /// Sum of the squared factor sizes.
  std::size_t dimension() const;
  /// Image of x. Throws PreconditionError when x lies outside the modelled subalgebra.
  BlockMatrix forward(const NormalElement& x) const;
  NormalElement backward(const BlockMatrix& blocks) const;
  BlockMatrix multiply(const BlockMatrix& a, const BlockMatrix& b) const;
  BlockMatrix zero() const;
  std::string describe() const;

 private:
  void place(BlockMatrix& out, const Path& alpha, const Path& beta, const RingValue& c) const;

  std::shared_ptr<const LeavittAlgebra> alg_;
  std::vector<MatrixFactor> factors_;
  std::optional<std::size_t> stop_length_;
};

/// D_n as a product of matrix rings: a factor M_{|P(i,v)|} per sink v and i < n,
/// and M_{|P(n,v)|} per vertex v; empty factors omitted.
MatrixDecomposition dn_structure(const LeavittAlgebra& alg, std::size_t n);

/// For acyclic graphs, L(E) as the product over sinks w of M_{|paths ending at w|}.
MatrixDecomposition sink_matrix_model(const LeavittAlgebra& alg);

/// The degree-0 reduced monomials of D_n.
std::vector<Monomial> dn_basis(const LeavittAlgebra& alg, std::size_t n);

/// gamma^k alpha alpha* (gamma*)^k for k = 0..count-1, with gamma rotated to start at s(alpha).
std::vector<NormalElement> ne_witness_idempotents(const LeavittAlgebra& alg, const ExitWitness& witness,
                                                  std::size_t count);

struct TraceInverseSystem {
  struct PathTerm {
    Path alpha;
    BigInt count;       // n'_i
    VertexId start;     // f(i)
  };
  std::vector<BigInt> vertex_counts;  // n_v, indexed by vertex
  std::vector<PathTerm> paths;        // sorted by length, then edges
  std::vector<std::array<std::size_t, 3>> prefix_triples;  // (i, j, t), t the longer path
  std::vector<RingValue> vertex_solution;  // m_v
  std::vector<RingValue> path_solution;    // m'_i
  NormalElement trace;
  NormalElement inverse;
};

/// Sum of all epsilon_i; acyclic graphs only.
NormalElement trace_unit(const LeavittAlgebra& alg);

/// Builds and solves the system for the inverse of the trace, then verifies
/// t t' = t' t = epsilon_0. Needs an acyclic graph and all nonzero integers invertible.
TraceInverseSystem trace_inverse(const LeavittAlgebra& alg);

/// The whole algebra as a GradedAlgebra over its reduced basis; acyclic graphs only.
GradedAlgebra as_graded_algebra(const LeavittAlgebra& alg);

}  // namespace leavitt
