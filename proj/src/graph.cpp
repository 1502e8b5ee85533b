#include "leavitt/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include "leavitt/errors.hpp"
#include "text.hpp"

namespace leavitt {

using text::split_ws;
using text::trim;
using text::valid_name;

bool is_prefix(const Path& p, const Path& q) {
  if (p.source != q.source || p.length() > q.length()) return false;
  return std::equal(p.edges.begin(), p.edges.end(), q.edges.begin());
}

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw ParseError("graph has no vertices");
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!valid_name(v)) throw ParseError("invalid vertex name '" + v + "'");
    if (!seen.insert(v).second) throw ParseError("duplicate vertex name '" + v + "'");
  }
  std::set<std::string> edge_names;
  for (const auto& e : edges_) {
    if (!valid_name(e.name)) throw ParseError("invalid edge name '" + e.name + "'");
    if (!edge_names.insert(e.name).second) throw ParseError("duplicate edge name '" + e.name + "'");
    if (e.source >= vertices_.size() || e.range >= vertices_.size())
      throw ParseError("edge '" + e.name + "' has a dangling endpoint");
  }
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    out_[edges_[e].source].push_back(e);
    in_[edges_[e].range].push_back(e);
  }
}

Graph Graph::parse(std::string_view source) {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  bool have_vertices = false;
  auto find_v = [&](const std::string& name) -> std::optional<VertexId> {
    for (VertexId i = 0; i < vertices.size(); ++i)
      if (vertices[i] == name) return i;
    return std::nullopt;
  };
  for (const auto& [line_no, line] : text::content_lines(source)) {
    if (line.starts_with("vertices:")) {
      if (have_vertices) throw ParseError("second 'vertices:' line", line_no);
      have_vertices = true;
      for (auto& name : split_ws(line.substr(9))) {
        if (!valid_name(name)) throw ParseError("invalid vertex name '" + name + "'", line_no);
        if (find_v(name)) throw ParseError("duplicate vertex name '" + name + "'", line_no);
        vertices.push_back(name);
      }
      if (vertices.empty()) throw ParseError("graph has no vertices", line_no);
    } else if (line.starts_with("edge ") || line.starts_with("edge\t")) {
      if (!have_vertices) throw ParseError("edge declared before the 'vertices:' line", line_no);
      std::string_view rest = trim(line.substr(5));
      auto colon = rest.find(':');
      auto arrow = rest.find("->");
      if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon)
        throw ParseError("expected 'edge NAME: SRC -> DST'", line_no);
      std::string name(trim(rest.substr(0, colon)));
      std::string src(trim(rest.substr(colon + 1, arrow - colon - 1)));
      std::string dst(trim(rest.substr(arrow + 2)));
      if (!valid_name(name)) throw ParseError("invalid edge name '" + name + "'", line_no);
      for (const auto& e : edges)
        if (e.name == name) throw ParseError("duplicate edge name '" + name + "'", line_no);
      auto s = find_v(src);
      auto r = find_v(dst);
      if (!s) throw ParseError("edge '" + name + "' has unknown source '" + src + "'", line_no);
      if (!r) throw ParseError("edge '" + name + "' has unknown range '" + dst + "'", line_no);
      edges.push_back(Edge{name, *s, *r});
    } else {
      throw ParseError("unrecognized line '" + std::string(line) + "'", line_no);
    }
  }
  if (!have_vertices) throw ParseError("missing 'vertices:' line");
  return Graph(std::move(vertices), std::move(edges));
}

std::string Graph::to_text() const {
  std::string out = "vertices:";
  for (const auto& v : vertices_) out += " " + v;
  out += "\n";
  for (const auto& e : edges_) out += "edge " + e.name + ": " + vertices_[e.source] + " -> " + vertices_[e.range] + "\n";
  return out;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  for (VertexId i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return i;
  return std::nullopt;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  for (EdgeId i = 0; i < edges_.size(); ++i)
    if (edges_[i].name == name) return i;
  return std::nullopt;
}

std::optional<EdgeId> Graph::special_edge(VertexId v) const {
  if (out_[v].empty()) return std::nullopt;
  return out_[v].front();
}

Path Graph::make_path(const std::vector<EdgeId>& edges) const {
  if (edges.empty()) throw PreconditionError("make_path needs at least one edge");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (edges_[edges[i]].range != edges_[edges[i + 1]].source)
      throw PreconditionError("edges '" + edges_[edges[i]].name + "' and '" + edges_[edges[i + 1]].name +
                              "' are not composable");
  return Path{edges_[edges.front()].source, edges_[edges.back()].range, edges};
}

std::string Graph::path_to_string(const Path& p) const {
  if (p.is_vertex()) return vertices_[p.source];
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ".";
    out += edges_[p.edges[i]].name;
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto &x = a.edges_[i], &y = b.edges_[i];
    if (x.name != y.name || x.source != y.source || x.range != y.range) return false;
  }
  return true;
}

// --- analysis ---------------------------------------------------------------

namespace {

// Tarjan's algorithm; returns the component index of each vertex.
std::vector<std::size_t> strongly_connected_components(const Graph& g, std::size_t& count) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), comp(n, SIZE_MAX);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::size_t next = 0;
  count = 0;
  std::function<void(VertexId)> visit = [&](VertexId v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on_stack[v] = true;
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.edge(e).range;
      if (index[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      VertexId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = count;
      } while (w != v);
      ++count;
    }
  };
  for (VertexId v = 0; v < n; ++v)
    if (index[v] == SIZE_MAX) visit(v);
  return comp;
}

std::vector<bool> vertices_on_cycles(const Graph& g) {
  std::size_t count = 0;
  auto comp = strongly_connected_components(g, count);
  std::vector<std::size_t> size(count, 0);
  for (auto c : comp) ++size[c];
  std::vector<bool> on(g.vertex_count(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (size[comp[v]] > 1) on[v] = true;
    for (EdgeId e : g.out_edges(v))
      if (g.edge(e).range == v) on[v] = true;
  }
  return on;
}

// Shortest closed path through v (BFS over edges in declaration order).
Path cycle_through(const Graph& g, VertexId v) {
  std::vector<std::optional<EdgeId>> via(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<VertexId> q;
  for (EdgeId e : g.out_edges(v)) {
    VertexId w = g.edge(e).range;
    if (w == v) return g.make_path({e});
    if (!seen[w]) {
      seen[w] = true;
      via[w] = e;
      q.push(w);
    }
  }
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (EdgeId e : g.out_edges(u)) {
      VertexId w = g.edge(e).range;
      if (w == v) {
        std::vector<EdgeId> rev{e};
        for (VertexId x = u; x != v; x = g.edge(*via[x]).source) rev.push_back(*via[x]);
        std::reverse(rev.begin(), rev.end());
        return g.make_path(rev);
      }
      if (!seen[w]) {
        seen[w] = true;
        via[w] = e;
        q.push(w);
      }
    }
  }
  throw PreconditionError("vertex '" + g.vertex_name(v) + "' is not on a cycle");
}

}  // namespace

Path normalize_cycle(const Graph& g, const Path& cycle) {
  const std::size_t n = cycle.length();
  std::optional<std::vector<EdgeId>> best;
  std::string best_name;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<EdgeId> rot(cycle.edges.begin() + k, cycle.edges.end());
    rot.insert(rot.end(), cycle.edges.begin(), cycle.edges.begin() + k);
    const std::string& name = g.vertex_name(g.edge(rot.front()).source);
    if (!best || name < best_name || (name == best_name && rot < *best)) {
      best = rot;
      best_name = name;
    }
  }
  return g.make_path(*best);
}

std::optional<Path> rotate_cycle_to(const Graph& g, const Path& cycle, VertexId v) {
  for (std::size_t k = 0; k < cycle.length(); ++k) {
    if (g.edge(cycle.edges[k]).source != v) continue;
    std::vector<EdgeId> rot(cycle.edges.begin() + k, cycle.edges.end());
    rot.insert(rot.end(), cycle.edges.begin(), cycle.edges.begin() + k);
    return g.make_path(rot);
  }
  return std::nullopt;
}

GraphReport analyze(const Graph& g) {
  GraphReport report;
  auto on_cycle = vertices_on_cycles(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v))
      report.sinks.push_back(v);
    else
      report.regular_vertices.push_back(v);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!on_cycle[v]) continue;
    if (report.acyclic) {
      report.acyclic = false;
      report.cycle_witness = normalize_cycle(g, cycle_through(g, v));
    }
    if (report.condition_ne && g.out_edges(v).size() > 1) {
      report.condition_ne = false;
      Path cycle = cycle_through(g, v);
      EdgeId own = cycle.edges.front();
      EdgeId exit = own;
      for (EdgeId e : g.out_edges(v))
        if (e != own) {
          exit = e;
          break;
        }
      report.ne_witness = ExitWitness{normalize_cycle(g, cycle), exit};
    }
  }
  if (report.acyclic) {
    std::size_t longest = 0;
    for (const auto& d : depths(g)) longest = std::max(longest, *d);
    report.max_path_length = longest;
  }
  return report;
}

std::vector<std::optional<std::size_t>> depths(const Graph& g) {
  const std::size_t n = g.vertex_count();
  auto on_cycle = vertices_on_cycles(g);
  // Unbounded: reachable from a vertex on a cycle.
  std::vector<bool> unbounded(n, false);
  std::queue<VertexId> q;
  for (VertexId v = 0; v < n; ++v)
    if (on_cycle[v]) {
      unbounded[v] = true;
      q.push(v);
    }
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (EdgeId e : g.out_edges(u)) {
      VertexId w = g.edge(e).range;
      if (!unbounded[w]) {
        unbounded[w] = true;
        q.push(w);
      }
    }
  }
  std::vector<std::optional<std::size_t>> depth(n);
  std::function<std::size_t(VertexId)> longest_into = [&](VertexId v) -> std::size_t {
    if (depth[v]) return *depth[v];
    std::size_t best = 0;
    for (EdgeId e : g.in_edges(v)) best = std::max(best, longest_into(g.edge(e).source) + 1);
    depth[v] = best;
    return best;
  };
  for (VertexId v = 0; v < n; ++v)
    if (!unbounded[v]) longest_into(v);
  for (VertexId v = 0; v < n; ++v)
    if (unbounded[v]) depth[v].reset();
  return depth;
}

std::vector<Path> enumerate_paths(const Graph& g, std::size_t n, VertexId v) {
  if (n == 0) return {Path::vertex(v)};
  std::vector<Path> out;
  std::vector<EdgeId> rev;
  std::function<void(VertexId, std::size_t)> walk = [&](VertexId at, std::size_t remaining) {
    if (remaining == 0) {
      std::vector<EdgeId> edges(rev.rbegin(), rev.rend());
      out.push_back(g.make_path(edges));
      return;
    }
    for (EdgeId e : g.in_edges(at)) {
      rev.push_back(e);
      walk(g.edge(e).source, remaining - 1);
      rev.pop_back();
    }
  };
  walk(v, n);
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) { return a.edges < b.edges; });
  return out;
}

std::vector<Path> paths_up_to(const Graph& g, std::size_t max_length) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (VertexId v = 0; v < g.vertex_count(); ++v) frontier.push_back(Path::vertex(v));
  out = frontier;
  for (std::size_t len = 1; len <= max_length && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (EdgeId e : g.out_edges(p.range)) {
        Path q = p;
        if (q.is_vertex()) q.source = g.edge(e).source;
        q.edges.push_back(e);
        q.range = g.edge(e).range;
        next.push_back(std::move(q));
      }
    std::sort(next.begin(), next.end(), [](const Path& a, const Path& b) { return a.edges < b.edges; });
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace leavitt
