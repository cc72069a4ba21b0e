#pragma once

// Tutte polynomial evaluation at integer points by deletion-contraction:
//   no edges -> 1;  loop e -> y T(G-e);  bridge e -> x T(G/e);
//   otherwise T(G-e) + T(G/e).

#include "bigint.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace mwsp {

struct TutteOptions {
  bool memoize = true;
  // Remove a whole parallel bundle per step: T(G-B) + (1+y+...+y^(k-1)) T(G/B),
  // or (x+y+...+y^(k-1)) T(G/B) when the bundle separates the graph.
  bool bundle_reduction = false;
};

/// Deletion-contraction evaluator at a fixed point (x, y). The cache is keyed
/// by canonical form, so isomorphic minors share one entry. Not thread-safe;
/// use one instance per thread.
class TutteEvaluator {
 public:
  TutteEvaluator(BigInt x, BigInt y, TutteOptions opts = {})
      : x_(std::move(x)), y_(std::move(y)), opts_(opts) {}

  /// Disconnected inputs are evaluated per component and multiplied.
  BigInt evaluate(const Multigraph& g) {
    if (is_connected(g)) return eval_connected(g);
    BigInt product = 1;
    for (const Multigraph& c : components(g)) product *= eval_connected(c);
    return product;
  }

  std::size_t cache_size() const { return cache_.size(); }
  std::size_t steps() const { return steps_; }

 private:
  static std::vector<Multigraph> components(const Multigraph& g) {
    DisjointSets ds(g.num_vertices());
    for (const Edge& e : g.edges()) ds.unite(e.u, e.v);
    std::map<int, std::pair<std::vector<VertexId>, std::vector<Edge>>> parts;
    std::vector<int> local(static_cast<std::size_t>(g.num_vertices()));
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      auto& verts = parts[ds.find(v)].first;
      local[v] = static_cast<int>(verts.size());
      verts.push_back(v);
    }
    for (const Edge& e : g.edges()) {
      parts[ds.find(e.u)].second.push_back({local[e.u], local[e.v]});
    }
    std::vector<Multigraph> out;
    for (auto& [root, part] : parts) {
      out.emplace_back(static_cast<int>(part.first.size()),
                       std::move(part.second));
    }
    return out;
  }

  BigInt eval_connected(const Multigraph& g) {
    if (g.num_edges() == 0) return 1;
    ++steps_;
    CanonicalForm key;
    if (opts_.memoize) {
      key = canonical_form(g);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    BigInt value = step(g);
    if (opts_.memoize) cache_.emplace(std::move(key), value);
    return value;
  }

  BigInt step(const Multigraph& g) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (g.edges()[e].is_loop()) return y_ * eval_connected(g.without_edge(e));
    }
    const std::vector<bool> bridges = bridge_mask(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (bridges[e]) return x_ * eval_connected(g.contract_edge(e));
    }
    const EdgeId e = widest_bundle(g);
    if (opts_.bundle_reduction) return bundle_step(g, e);
    return eval_connected(g.without_edge(e)) +
           eval_connected(g.contract_edge(e));
  }

  // Edge whose parallel bundle is largest; ties go to the lowest id.
  static EdgeId widest_bundle(const Multigraph& g) {
    EdgeId best = 0;
    std::size_t best_size = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const std::size_t k = parallel_class(g, e).size();
      if (k > best_size) {
        best = e;
        best_size = k;
      }
    }
    return best;
  }

  BigInt bundle_step(const Multigraph& g, EdgeId e) {
    const Edge c = g.edge(e);
    Multigraph rest(g.num_vertices());
    int k = 0;
    for (const Edge& f : g.edges()) {
      if (f.joins(c.u, c.v)) {
        ++k;
      } else {
        rest.add_edge(f.u, f.v);
      }
    }
    rest.add_edge(c.u, c.v);
    const Multigraph merged = rest.contract_edge(rest.num_edges() - 1);
    rest = rest.without_edge(rest.num_edges() - 1);

    BigInt geometric = 0;  // 1 + y + ... + y^(k-1)
    BigInt power = 1;
    for (int i = 0; i < k; ++i) {
      geometric += power;
      power *= y_;
    }
    if (!is_connected(rest)) {
      return (geometric - 1 + x_) * eval_connected(merged);
    }
    return eval_connected(rest) + geometric * eval_connected(merged);
  }

  BigInt x_;
  BigInt y_;
  TutteOptions opts_;
  std::map<CanonicalForm, BigInt> cache_;
  std::size_t steps_ = 0;
};

inline BigInt tutte_eval(const Multigraph& g, const BigInt& x, const BigInt& y,
                         TutteOptions opts = {}) {
  return TutteEvaluator(x, y, opts).evaluate(g);
}

/// tau = T(1,1)
inline BigInt count_spanning_trees(const Multigraph& g) {
  return tutte_eval(g, 1, 1);
}
/// alpha = T(2,0)
inline BigInt count_acyclic(const Multigraph& g) { return tutte_eval(g, 2, 0); }
/// alpha* = T(0,2)
inline BigInt count_totally_cyclic(const Multigraph& g) {
  return tutte_eval(g, 0, 2);
}

/// A shared evaluator behind a lock, for callers spread over threads.
class SharedTutteEvaluator {
 public:
  SharedTutteEvaluator(BigInt x, BigInt y, TutteOptions opts = {})
      : inner_(std::move(x), std::move(y), opts) {}
  BigInt evaluate(const Multigraph& g) {
    std::lock_guard lock(mutex_);
    return inner_.evaluate(g);
  }

 private:
  std::mutex mutex_;
  TutteEvaluator inner_;
};

}  // namespace mwsp
