#pragma once

// Multigraph isomorphism by backtracking, and a canonical labeling by
// individualization/refinement for use as a cache key.

#include "graph.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace mwsp {

namespace detail {

struct AdjacencyCounts {
  int n = 0;
  std::vector<int> mult;  // n*n edge multiplicities, loops on the diagonal
  std::vector<int> degree;

  explicit AdjacencyCounts(const Multigraph& g)
      : n(g.num_vertices()),
        mult(static_cast<std::size_t>(n * n), 0),
        degree(static_cast<std::size_t>(n), 0) {
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) {
        ++at(e.u, e.u);
      } else {
        ++at(e.u, e.v);
        ++at(e.v, e.u);
      }
      ++degree[e.u];
      ++degree[e.v];
    }
  }
  int& at(int a, int b) { return mult[static_cast<std::size_t>(a * n + b)]; }
  int at(int a, int b) const {
    return mult[static_cast<std::size_t>(a * n + b)];
  }
};

class IsoMatcher {
 public:
  IsoMatcher(const Multigraph& g, const Multigraph& h) : g_(g), h_(h) {}

  bool quick_reject() const {
    if (g_.n != h_.n) return true;
    auto dg = g_.degree, dh = h_.degree;
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    return dg != dh;
  }

  /// Searches for a bijection extending the given partial map (g -> h).
  bool extend(std::vector<int> fixed) {
    map_ = std::move(fixed);
    map_.resize(static_cast<std::size_t>(g_.n), -1);
    used_.assign(static_cast<std::size_t>(h_.n), false);
    for (int v = 0; v < g_.n; ++v) {
      if (map_[v] < 0) continue;
      if (used_[map_[v]] || !compatible(v, map_[v])) return false;
      used_[map_[v]] = true;
    }
    order_.clear();
    build_order();
    return search(0);
  }

 private:
  // Mapped-first, then breadth-first from high degree so constraints bite early.
  void build_order() {
    std::vector<bool> placed(static_cast<std::size_t>(g_.n), false);
    for (int v = 0; v < g_.n; ++v) {
      if (map_[v] >= 0) placed[v] = true;
    }
    std::vector<int> queue;
    for (int v = 0; v < g_.n; ++v) {
      if (placed[v]) queue.push_back(v);
    }
    std::size_t head = 0;
    while (true) {
      while (head < queue.size()) {
        int v = queue[head++];
        if (map_[v] < 0) order_.push_back(v);
        for (int w = 0; w < g_.n; ++w) {
          if (!placed[w] && w != v && g_.at(v, w) > 0) {
            placed[w] = true;
            queue.push_back(w);
          }
        }
      }
      int best = -1;
      for (int v = 0; v < g_.n; ++v) {
        if (!placed[v] && (best < 0 || g_.degree[v] > g_.degree[best])) {
          best = v;
        }
      }
      if (best < 0) break;
      placed[best] = true;
      queue.push_back(best);
    }
  }

  bool compatible(int v, int w) const {
    if (g_.degree[v] != h_.degree[w] || g_.at(v, v) != h_.at(w, w)) {
      return false;
    }
    for (int u = 0; u < g_.n; ++u) {
      if (u != v && map_[u] >= 0 && g_.at(v, u) != h_.at(w, map_[u])) {
        return false;
      }
    }
    return true;
  }

  bool search(std::size_t k) {
    if (k == order_.size()) return true;
    const int v = order_[k];
    for (int w = 0; w < h_.n; ++w) {
      if (used_[w] || !compatible(v, w)) continue;
      map_[v] = w;
      used_[w] = true;
      if (search(k + 1)) return true;
      used_[w] = false;
      map_[v] = -1;
    }
    return false;
  }

  AdjacencyCounts g_;
  AdjacencyCounts h_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> order_;
};

}  // namespace detail

inline bool graph_isomorphic(const Multigraph& g, const Multigraph& h) {
  if (g.num_edges() != h.num_edges()) return false;
  detail::IsoMatcher m(g, h);
  if (m.quick_reject()) return false;
  return m.extend({});
}

/// Isomorphism sending source to source and sink to sink.
inline bool two_terminal_isomorphic_oriented(const TwoTerminalGraph& g,
                                             const TwoTerminalGraph& h) {
  if (g.graph().num_edges() != h.graph().num_edges()) return false;
  detail::IsoMatcher m(g.graph(), h.graph());
  if (m.quick_reject()) return false;
  std::vector<int> fixed(static_cast<std::size_t>(g.graph().num_vertices()),
                         -1);
  fixed[g.source()] = h.source();
  fixed[g.sink()] = h.sink();
  return m.extend(std::move(fixed));
}

/// Isomorphism mapping the terminal pair onto the terminal pair, allowing
/// source and sink to swap.
inline bool two_terminal_isomorphic(const TwoTerminalGraph& g,
                                    const TwoTerminalGraph& h) {
  return two_terminal_isomorphic_oriented(g, h) ||
         two_terminal_isomorphic_oriented(g, h.reversed());
}

/// Isomorphism-invariant encoding of a multigraph: vertex count plus the
/// multiplicity matrix under the lexicographically least labeling found by
/// individualization/refinement.
struct CanonicalForm {
  int vertices = 0;
  std::vector<int> cells;  // row-major upper triangle including diagonal

  friend auto operator<=>(const CanonicalForm&,
                          const CanonicalForm&) = default;
};

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const Multigraph& g) : adj_(g) {}

  CanonicalForm run() {
    std::vector<int> colors(static_cast<std::size_t>(adj_.n), 0);
    for (int v = 0; v < adj_.n; ++v) colors[v] = 0;
    colors = refine(std::move(colors));
    best_.reset();
    explore(colors);
    return *best_;
  }

 private:
  // Equitable refinement; colors are dense ranks ordered by signature.
  std::vector<int> refine(std::vector<int> colors) const {
    const int n = adj_.n;
    while (true) {
      std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.push_back(colors[v]);
        s.push_back(adj_.at(v, v));
        std::vector<std::pair<int, int>> nb;
        for (int w = 0; w < n; ++w) {
          if (w != v && adj_.at(v, w) > 0) {
            nb.push_back({colors[w], adj_.at(v, w)});
          }
        }
        std::sort(nb.begin(), nb.end());
        for (auto [c, m] : nb) {
          s.push_back(c);
          s.push_back(m);
        }
      }
      std::map<std::vector<int>, int> rank;
      for (const auto& s : sig) rank.emplace(s, 0);
      int next = 0;
      for (auto& [s, r] : rank) r = next++;
      std::vector<int> refined(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) refined[v] = rank.at(sig[v]);
      const int before =
          n == 0 ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
      colors = std::move(refined);
      if (next == before) return colors;
    }
  }

  void explore(const std::vector<int>& colors) {
    const int n = adj_.n;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      record(colors);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      // Individualize v: it keeps rank `target`, its cellmates move up one.
      std::vector<int> next(colors);
      for (int w = 0; w < n; ++w) {
        if (next[w] > target || (next[w] == target && w != v)) ++next[w];
      }
      explore(refine(std::move(next)));
    }
  }

  void record(const std::vector<int>& position) {
    const int n = adj_.n;
    std::vector<int> vertex_at(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) vertex_at[position[v]] = v;
    CanonicalForm form;
    form.vertices = n;
    form.cells.reserve(static_cast<std::size_t>(n * (n + 1) / 2));
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        form.cells.push_back(adj_.at(vertex_at[i], vertex_at[j]));
      }
    }
    if (!best_ || form < *best_) best_ = std::move(form);
  }

  AdjacencyCounts adj_;
  std::optional<CanonicalForm> best_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Multigraph& g) {
  return detail::Canonizer(g).run();
}

}  // namespace mwsp
