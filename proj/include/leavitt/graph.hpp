#pragma once

// Finite directed multigraphs and the predicates the classifier consumes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leavitt {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  std::string name;
  VertexId source;
  VertexId range;
};

/// A path of the graph: a vertex (length 0) or composable edges.
/// For length 0, source == range == the vertex.
struct Path {
  VertexId source = 0;
  VertexId range = 0;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool is_vertex() const { return edges.empty(); }

  static Path vertex(VertexId v) { return Path{v, v, {}}; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) {
    if (auto c = a.edges.size() <=> b.edges.size(); c != 0) return c;
    if (auto c = a.source <=> b.source; c != 0) return c;
    return a.edges <=> b.edges;
  }
};

/// `p` is an initial subpath of `q`.
bool is_prefix(const Path& p, const Path& q);

class Graph {
 public:
  /// Validates names and endpoints; throws ParseError on violations.
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

  /// Reads the `.lpg` text format:
  ///   # comment
  ///   vertices: v1 v2
  ///   edge e: v1 -> v2
  static Graph parse(std::string_view text);
  std::string to_text() const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_[v]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// s^{-1}(v) and r^{-1}(v) in declaration order.
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[v]; }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_[v]; }
  bool is_sink(VertexId v) const { return out_[v].empty(); }
  bool is_regular(VertexId v) const { return !out_[v].empty(); }

  /// The first edge of s^{-1}(v) in declaration order; fixes the normal form.
  std::optional<EdgeId> special_edge(VertexId v) const;
  bool is_special(EdgeId e) const { return out_[edges_[e].source].front() == e; }

  /// Builds a path from edge ids, throwing PreconditionError if not composable.
  Path make_path(const std::vector<EdgeId>& edges) const;
  std::string path_to_string(const Path& p) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// A cycle with an edge leaving it: the Condition (NE) failure witness.
struct ExitWitness {
  Path cycle;
  EdgeId exit;
};

struct GraphReport {
  bool condition_ne = true;
  std::optional<ExitWitness> ne_witness;  // present iff !condition_ne
  bool acyclic = true;
  std::optional<Path> cycle_witness;  // present iff !acyclic
  std::vector<VertexId> sinks;
  std::optional<std::size_t> max_path_length;  // nullopt means infinite
  std::vector<VertexId> regular_vertices;
};

GraphReport analyze(const Graph& g);

/// Rotates a closed path so it starts at the lexicographically least vertex name.
Path normalize_cycle(const Graph& g, const Path& cycle);

/// Rotates a closed path to start at `v`; nullopt if v is not on it.
std::optional<Path> rotate_cycle_to(const Graph& g, const Path& cycle, VertexId v);

/// Paths of length n with range v, in lexicographic edge order.
std::vector<Path> enumerate_paths(const Graph& g, std::size_t n, VertexId v);

/// All paths of length <= max_length (vertices included), by length then lexicographic.
std::vector<Path> paths_up_to(const Graph& g, std::size_t max_length);

/// Longest path length ending at each vertex; nullopt where unbounded (a cycle reaches it).
std::vector<std::optional<std::size_t>> depths(const Graph& g);

}  // namespace leavitt
