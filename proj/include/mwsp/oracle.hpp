#pragma once

// Brute-force ground truth: edge-subset enumeration for trees and 2-forests,
// orientation enumeration for the four orientation counts.

#include "bigint.hpp"
#include "graph.hpp"
#include "param_vec.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwsp {

inline constexpr int kMaxOrientationEdges = 16;
inline constexpr int kMaxSubsetEdges = 20;

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void guard(const Multigraph& g, int limit, const char* what) {
  if (g.num_edges() > limit) {
    throw GuardError(std::string(what) + ": " + std::to_string(g.num_edges()) +
                     " edges exceeds the limit of " + std::to_string(limit));
  }
  if (g.num_vertices() > 32) throw GuardError("too many vertices");
}

// Counts acyclic subsets of exactly k edges, optionally requiring that a and b
// end up in different components.
inline BigInt count_forests(const Multigraph& g, int k, VertexId a = -1,
                            VertexId b = -1) {
  const int m = g.num_edges();
  if (k < 0 || k > m) return 0;
  std::uint64_t count = 0;
  auto test = [&](std::uint32_t mask) {
    DisjointSets ds(g.num_vertices());
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1u)) continue;
      const Edge& e = g.edges()[i];
      if (!ds.unite(e.u, e.v)) return false;
    }
    return a < 0 || ds.find(a) != ds.find(b);
  };
  if (k == 0) return test(0) ? 1 : 0;
  // Gosper's hack over k-subsets.
  std::uint32_t mask = (1u << k) - 1;
  const std::uint32_t limit = 1u << m;
  while (mask < limit) {
    if (test(mask)) ++count;
    const std::uint32_t c = mask & (~mask + 1);
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return count;
}

}  // namespace detail

inline BigInt brute_spanning_trees(const Multigraph& g) {
  detail::guard(g, kMaxSubsetEdges, "brute_spanning_trees");
  if (g.num_vertices() == 0) return 1;
  return detail::count_forests(g, g.num_vertices() - 1);
}

inline BigInt brute_two_forests(const TwoTerminalGraph& g) {
  detail::guard(g.graph(), kMaxSubsetEdges, "brute_two_forests");
  return detail::count_forests(g.graph(), g.graph().num_vertices() - 2,
                               g.source(), g.sink());
}

/// Tallies over all 2^m orientations. Bit i set means edge i runs v -> u.
/// A loop is enumerated in both directions; it always lies on a directed
/// cycle.
struct OrientationCounts {
  BigInt acyclic;
  BigInt very_acyclic;
  BigInt totally_cyclic;
  BigInt almost_totally_cyclic;
};

inline OrientationCounts count_orientations(const Multigraph& g,
                                            VertexId source = -1,
                                            VertexId sink = -1) {
  detail::guard(g, kMaxOrientationEdges, "orientation enumeration");
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const bool terminals = source >= 0;
  std::uint64_t acyclic = 0, very = 0, total = 0, almost = 0;
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n));
  std::vector<std::uint32_t> reach(static_cast<std::size_t>(n));
  std::vector<int> tail(static_cast<std::size_t>(m)), head(tail);

  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::fill(out.begin(), out.end(), 0u);
    for (int i = 0; i < m; ++i) {
      const Edge& e = g.edges()[i];
      tail[i] = (mask >> i & 1u) ? e.v : e.u;
      head[i] = (mask >> i & 1u) ? e.u : e.v;
      out[tail[i]] |= 1u << head[i];
    }
    for (int v = 0; v < n; ++v) {
      std::uint32_t seen = 1u << v, frontier = seen;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) {
          next |= out[std::countr_zero(f)];
        }
        frontier = next & ~seen;
        seen |= next;
      }
      reach[v] = seen;
    }
    bool any_cyclic = false, all_cyclic = true, all_covered = true;
    for (int i = 0; i < m; ++i) {
      const int a = tail[i], b = head[i];
      const bool on_cycle = reach[b] >> a & 1u;
      any_cyclic |= on_cycle;
      all_cyclic &= on_cycle;
      if (terminals && !on_cycle) {
        const bool forward = (reach[source] >> a & 1u) && (reach[b] >> sink & 1u);
        const bool backward = (reach[sink] >> a & 1u) && (reach[b] >> source & 1u);
        all_covered &= forward || backward;
      }
    }
    if (!any_cyclic) {
      ++acyclic;
      if (terminals && !(reach[source] >> sink & 1u) &&
          !(reach[sink] >> source & 1u)) {
        ++very;
      }
    }
    if (all_cyclic) ++total;
    if (terminals && all_covered) ++almost;
  }
  return {acyclic, very, total, almost};
}

inline BigInt brute_acyclic(const Multigraph& g) {
  return count_orientations(g).acyclic;
}
inline BigInt brute_totally_cyclic(const Multigraph& g) {
  return count_orientations(g).totally_cyclic;
}
inline BigInt brute_very_acyclic(const TwoTerminalGraph& g) {
  return count_orientations(g.graph(), g.source(), g.sink()).very_acyclic;
}
inline BigInt brute_almost_totally_cyclic(const TwoTerminalGraph& g) {
  return count_orientations(g.graph(), g.source(), g.sink())
      .almost_totally_cyclic;
}

inline ParamVec brute_param_vec(const TwoTerminalGraph& g) {
  const OrientationCounts o =
      count_orientations(g.graph(), g.source(), g.sink());
  return {brute_spanning_trees(g.graph()), brute_two_forests(g),
          o.acyclic,                       o.very_acyclic,
          o.almost_totally_cyclic,         o.totally_cyclic};
}

/// (tau, alpha, alpha*) by enumeration.
struct BasicCounts {
  BigInt tau;
  BigInt alpha;
  BigInt alphastar;
  friend bool operator==(const BasicCounts&, const BasicCounts&) = default;
};

inline BasicCounts brute_basic_counts(const Multigraph& g) {
  const OrientationCounts o = count_orientations(g);
  return {brute_spanning_trees(g), o.acyclic, o.totally_cyclic};
}

/// Outcome of growing a class of e by two edges and re-counting.
struct ExtensionReport {
  Multigraph extended;
  BasicCounts before;
  BasicCounts after;
  bool growth_ok = false;     // the doubled-up count grew at least fourfold
  bool unchanged_ok = false;  // the other orientation count is unchanged
  bool tree_bound_ok = false; // tau at most doubles
  bool conclusion_ok = false; // multiplicative inequality carries over

  bool passed() const {
    return growth_ok && unchanged_ok && tree_bound_ok && conclusion_ok;
  }
};

namespace detail {
inline bool multiplicative(const BasicCounts& c) {
  return c.alpha * c.alphastar >= c.tau * c.tau;
}

inline ExtensionReport finish_report(Multigraph extended,
                                     const Multigraph& g, bool parallel) {
  ExtensionReport r;
  r.before = brute_basic_counts(g);
  r.after = brute_basic_counts(extended);
  r.extended = std::move(extended);
  const BigInt& grown_before = parallel ? r.before.alphastar : r.before.alpha;
  const BigInt& grown_after = parallel ? r.after.alphastar : r.after.alpha;
  const BigInt& kept_before = parallel ? r.before.alpha : r.before.alphastar;
  const BigInt& kept_after = parallel ? r.after.alpha : r.after.alphastar;
  r.growth_ok = grown_after >= 4 * grown_before;
  r.unchanged_ok = kept_after == kept_before;
  r.tree_bound_ok = r.after.tau <= 2 * r.before.tau;
  r.conclusion_ok = !multiplicative(r.before) || multiplicative(r.after);
  return r;
}
}  // namespace detail

/// Adds two edges parallel to e (which must already have a parallel partner).
inline ExtensionReport verify_parallel_extension(const Multigraph& g,
                                                 EdgeId e) {
  if (parallel_class(g, e).size() < 2) {
    throw std::invalid_argument("edge has a trivial parallel class");
  }
  Multigraph plus = g;
  const Edge c = g.edge(e);
  plus.add_edge(c.u, c.v);
  plus.add_edge(c.u, c.v);
  return detail::finish_report(std::move(plus), g, true);
}

/// Subdivides e twice, putting two new edges in series with it (e must
/// already have a series partner).
inline ExtensionReport verify_series_extension(const Multigraph& g, EdgeId e) {
  if (series_class(g, e).size() < 2) {
    throw std::invalid_argument("edge has a trivial series class");
  }
  const Edge c = g.edge(e);
  std::vector<Edge> edges = g.edges();
  Multigraph plus(g.num_vertices());
  const VertexId a = plus.add_vertex();
  const VertexId b = plus.add_vertex();
  edges[e] = {c.u, a};
  for (const Edge& f : edges) plus.add_edge(f.u, f.v);
  plus.add_edge(a, b);
  plus.add_edge(b, c.v);
  return detail::finish_report(std::move(plus), g, false);
}

}  // namespace mwsp
