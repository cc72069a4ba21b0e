#pragma once

// Multigraphs with loops and parallel edges, plus the structural predicates
// used by the search: bridges, series/parallel classes and extendability.

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mwsp {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  bool joins(VertexId a, VertexId b) const {
    return (u == a && v == b) || (u == b && v == a);
  }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected multigraph on vertices 0..n-1. Edge ids are positions in the
/// edge list; removing an edge shifts the ids above it down by one.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int num_vertices) : n_(num_vertices) {
    if (num_vertices < 0) throw GraphError("negative vertex count");
  }
  Multigraph(int num_vertices, std::vector<Edge> edges)
      : Multigraph(num_vertices) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(EdgeId e) const { return e >= 0 && e < num_edges(); }
  bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }

  const Edge& edge(EdgeId e) const {
    check_edge(e);
    return edges_[static_cast<std::size_t>(e)];
  }

  void check_edge(EdgeId e) const {
    if (!has_edge(e)) throw GraphError("unknown edge id " + std::to_string(e));
  }

  VertexId add_vertex() { return n_++; }

  EdgeId add_edge(VertexId u, VertexId v) {
    if (!has_vertex(u) || !has_vertex(v)) {
      throw GraphError("edge endpoint out of range: " + std::to_string(u) +
                       " " + std::to_string(v));
    }
    edges_.push_back({u, v});
    return num_edges() - 1;
  }

  int degree(VertexId v) const {
    int d = 0;
    for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
  }

  int loop_count() const {
    return static_cast<int>(
        std::count_if(edges_.begin(), edges_.end(),
                      [](const Edge& e) { return e.is_loop(); }));
  }

  Multigraph without_edge(EdgeId e) const {
    check_edge(e);
    Multigraph out = *this;
    out.edges_.erase(out.edges_.begin() + e);
    return out;
  }

  /// Merges the endpoints of e and drops e. Other edges parallel to e become
  /// loops. Vertex ids above the removed endpoint shift down by one.
  Multigraph contract_edge(EdgeId e) const {
    const Edge c = edge(e);
    if (c.is_loop()) return without_edge(e);
    const VertexId keep = std::min(c.u, c.v);
    const VertexId gone = std::max(c.u, c.v);
    auto relabel = [&](VertexId x) {
      if (x == gone) return keep;
      return x > gone ? x - 1 : x;
    };
    Multigraph out(n_ - 1);
    out.edges_.reserve(edges_.size() - 1);
    for (EdgeId i = 0; i < num_edges(); ++i) {
      if (i == e) continue;
      const Edge& f = edges_[static_cast<std::size_t>(i)];
      out.edges_.push_back({relabel(f.u), relabel(f.v)});
    }
    return out;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// A multigraph with distinct source and sink.
class TwoTerminalGraph {
 public:
  TwoTerminalGraph(Multigraph graph, VertexId source, VertexId sink)
      : graph_(std::move(graph)), source_(source), sink_(sink) {
    if (!graph_.has_vertex(source_) || !graph_.has_vertex(sink_)) {
      throw GraphError("terminal is not a vertex");
    }
    if (source_ == sink_) throw GraphError("source and sink coincide");
  }

  const Multigraph& graph() const { return graph_; }
  VertexId source() const { return source_; }
  VertexId sink() const { return sink_; }

  TwoTerminalGraph reversed() const { return {graph_, sink_, source_}; }

  /// The graph with one extra source-sink edge appended (its id is the last).
  Multigraph with_terminal_edge() const {
    Multigraph g = graph_;
    g.add_edge(source_, sink_);
    return g;
  }

  bool is_terminal_edge(EdgeId e) const {
    return graph_.edge(e).joins(source_, sink_);
  }

  friend bool operator==(const TwoTerminalGraph&,
                         const TwoTerminalGraph&) = default;

 private:
  Multigraph graph_;
  VertexId source_;
  VertexId sink_;
};

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
    components_ = n;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    --components_;
    return true;
  }
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  int components_ = 0;
};

inline int component_count(const Multigraph& g) {
  DisjointSets ds(g.num_vertices());
  for (const Edge& e : g.edges()) ds.unite(e.u, e.v);
  return ds.components();
}

inline bool is_connected(const Multigraph& g) {
  return component_count(g) <= 1;
}

/// Bridge flags for every edge, computed by a lowlink DFS. When `skip` is set
/// that edge is treated as deleted and reported as not a bridge.
inline std::vector<bool> bridge_mask(const Multigraph& g,
                                     std::optional<EdgeId> skip = {}) {
  const int n = g.num_vertices();
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(
      static_cast<std::size_t>(n));
  for (EdgeId i = 0; i < g.num_edges(); ++i) {
    if (skip && *skip == i) continue;
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    if (e.is_loop()) continue;
    adj[e.u].push_back({e.v, i});
    adj[e.v].push_back({e.u, i});
  }
  std::vector<bool> bridge(static_cast<std::size_t>(g.num_edges()), false);
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  int clock = 0;

  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    order[root] = low[root] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, id] = adj[f.v][f.next++];
        if (id == f.via) continue;
        if (order[w] < 0) {
          order[w] = low[w] = clock++;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > order[parent]) bridge[done.via] = true;
        }
      }
    }
  }
  return bridge;
}

inline bool is_bridge(const Multigraph& g, EdgeId e) {
  g.check_edge(e);
  return bridge_mask(g)[static_cast<std::size_t>(e)];
}

/// Edges in series with e: for a non-bridge e, the non-bridges of g that
/// become bridges once e is deleted. A bridge is alone in its class.
inline std::vector<EdgeId> series_class(const Multigraph& g, EdgeId e) {
  g.check_edge(e);
  const std::vector<bool> before = bridge_mask(g);
  if (before[e]) return {e};
  const std::vector<bool> after = bridge_mask(g, e);
  std::vector<EdgeId> out;
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (f == e || (!before[f] && after[f])) out.push_back(f);
  }
  return out;
}

/// Edges in parallel with e: the non-loop edges sharing its endpoints.
inline std::vector<EdgeId> parallel_class(const Multigraph& g, EdgeId e) {
  const Edge c = g.edge(e);
  if (c.is_loop()) return {e};
  std::vector<EdgeId> out;
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (g.edges()[f].joins(c.u, c.v)) out.push_back(f);
  }
  return out;
}

namespace detail {
inline bool small_class(std::size_t size) { return size == 2 || size == 3; }

inline bool edge_in_small_class(const Multigraph& g, EdgeId e) {
  return small_class(series_class(g, e).size()) ||
         small_class(parallel_class(g, e).size());
}
}  // namespace detail

/// True when every edge of g lies in a series or parallel class of size two
/// or three.
inline bool every_edge_in_small_class(const Multigraph& g) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!detail::edge_in_small_class(g, e)) return false;
  }
  return true;
}

/// Whether g can sit inside a minimal counterexample, judged from g alone.
///
/// The surrounding graph attaches only at the terminals, so it behaves like
/// an extra source-sink edge. Classes are therefore taken in g + st. Two
/// kinds of edges are exempt because the surroundings may still grow their
/// classes: edges joining the terminals (parallel class) and bridges of g
/// (series class). Every other edge needs a class of size two or three.
inline bool is_extendable(const TwoTerminalGraph& g) {
  const Multigraph& base = g.graph();
  const Multigraph closed = g.with_terminal_edge();
  const std::vector<bool> bridges = bridge_mask(base);
  for (EdgeId e = 0; e < base.num_edges(); ++e) {
    if (g.is_terminal_edge(e) || bridges[e]) continue;
    if (!detail::edge_in_small_class(closed, e)) return false;
  }
  return true;
}

/// A cycle whose i-th link is a bundle of multiplicities[i] parallel edges.
inline Multigraph cycle_of_bundles(std::span<const int> multiplicities) {
  const int n = static_cast<int>(multiplicities.size());
  if (n < 2) throw GraphError("a cycle of bundles needs at least two links");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) {
    if (multiplicities[i] < 1) throw GraphError("empty bundle");
    for (int k = 0; k < multiplicities[i]; ++k) g.add_edge(i, (i + 1) % n);
  }
  return g;
}

/// n-2 digons and two single edges arranged around an n-cycle, with the
/// single edges adjacent.
inline Multigraph thomassen_graph(int n) {
  if (n < 4) throw GraphError("thomassen_graph needs n >= 4");
  std::vector<int> links(static_cast<std::size_t>(n), 2);
  links[0] = links[1] = 1;
  return cycle_of_bundles(links);
}

}  // namespace mwsp
