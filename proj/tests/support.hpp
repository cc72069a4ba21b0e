#pragma once

#include "mwsp/mwsp.hpp"

#include <functional>
#include <vector>

namespace mwsp::testing {

/// Every multigraph on n labelled vertices with at most max_edges edges,
/// edges drawn as a multiset from the vertex pairs (and loops if allowed).
inline void for_each_multigraph(int n, int max_edges, bool loops,
                                const std::function<void(const Multigraph&)>& fn) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = loops ? u : u + 1; v < n; ++v) slots.push_back({u, v});
  }
  std::vector<Edge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    fn(Multigraph(n, chosen));
    if (static_cast<int>(chosen.size()) == max_edges) return;
    for (std::size_t i = from; i < slots.size(); ++i) {
      chosen.push_back(slots[i]);
      rec(i);
      chosen.pop_back();
    }
  };
  rec(0);
}

/// The small-graph corpus: n <= 4 with loops, n = 5 loopless, <= 6 edges.
inline void for_each_small_graph(const std::function<void(const Multigraph&)>& fn) {
  for (int n = 1; n <= 4; ++n) for_each_multigraph(n, 6, true, fn);
  for_each_multigraph(5, 6, false, fn);
}

inline std::vector<DecompTree> trees_up_to(int max_edges) {
  std::vector<DecompTree> out;
  for (int m = 1; m <= max_edges; ++m) {
    for (DecompTree& t : enumerate_trees(m)) out.push_back(std::move(t));
  }
  return out;
}

inline const std::vector<Survivor>& reference_survivors() {
  static const std::vector<Survivor> s = [] {
    auto found = enumerate_survivors();
    return renumber(found, reference::match_numbering(found).value());
  }();
  return s;
}

inline ParamVec P(std::string_view expr) { return eval_tree(parse_expr(expr)); }

}  // namespace mwsp::testing
