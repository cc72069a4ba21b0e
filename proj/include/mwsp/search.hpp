#pragma once

// Enumeration of extendable, irreducible two-terminal series-parallel graphs
// by increasing edge count, stopping at the fixed point.

#include "decomp_tree.hpp"
#include "isomorphism.hpp"
#include "oracle.hpp"
#include "param_vec.hpp"
#include "reducibility.hpp"
#include "tutte.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace mwsp {

enum class Connection { Series, Parallel };

inline DecompTree connect(Connection op, const DecompTree& a,
                          const DecompTree& b) {
  return canonical(op == Connection::Series ? DecompTree::series({a, b})
                                            : DecompTree::parallel({a, b}));
}

inline ParamVec connect(Connection op, const ParamVec& a, const ParamVec& b) {
  return op == Connection::Series ? ser(a, b) : par(a, b);
}

struct Build {
  Connection op = Connection::Series;
  int left = 0;
  int right = 0;
  friend bool operator==(const Build&, const Build&) = default;
};

struct Survivor {
  int index = 0;
  DecompTree tree;
  ParamVec params;
  int edges = 1;
  std::optional<Build> build;   // empty for K2
  std::optional<int> sp_dual;   // index of the survivor whose tree is the dual
};

// Two-terminal isomorphic (terminals possibly swapped) to survivor `index`.
struct InTable {
  int index = 0;
  friend bool operator==(const InTable&, const InTable&) = default;
};
struct NonExtendable {
  friend bool operator==(const NonExtendable&, const NonExtendable&) = default;
};
// Replaceable by the smaller survivor `target`.
struct Reducible {
  int target = 0;
  friend bool operator==(const Reducible&, const Reducible&) = default;
};
// None of the above: the combination would be a new survivor.
struct Unresolved {
  friend bool operator==(const Unresolved&, const Unresolved&) = default;
};

using Classification =
    std::variant<InTable, NonExtendable, Reducible, Unresolved>;

/// Table cell text: "=x", "N", "x", or "?" for unresolved.
inline std::string cell_text(const Classification& c) {
  if (auto* t = std::get_if<InTable>(&c)) return "=" + std::to_string(t->index);
  if (std::holds_alternative<NonExtendable>(c)) return "N";
  if (auto* r = std::get_if<Reducible>(&c)) return std::to_string(r->target);
  return "?";
}

/// Everything learned about one combination.
struct CellReport {
  DecompTree tree;
  ParamVec params;
  Classification classification;
  // Set when an in-table graph is also reducible.
  std::optional<int> also_reducible_to;
  // Set when the graph matches a survivor as a plain graph but not as a
  // two-terminal graph.
  std::optional<int> graph_isomorphic_to;
  // Set for unresolved graphs whose parameters equal a survivor's.
  std::optional<int> same_params_as;
};

namespace detail {

inline std::optional<int> first_reduction(const ParamVec& params, int edges,
                                          std::span<const Survivor> pool) {
  for (const Survivor& s : pool) {
    if (s.edges < edges && replaces(params, s.params)) return s.index;
  }
  return std::nullopt;
}

}  // namespace detail

/// Classifies a combination against the survivors: in-table first, then
/// extendability, then reducibility by the lowest-index smaller survivor.
inline CellReport examine(const DecompTree& tree,
                          std::span<const Survivor> survivors) {
  CellReport r{canonical(tree), eval_tree(tree), Unresolved{}, {}, {}, {}};
  const int edges = r.tree.leaf_count();
  const TwoTerminalGraph g = realize(r.tree);

  for (const Survivor& s : survivors) {
    if (s.edges != edges || s.params != r.params) continue;
    if (s.tree == r.tree || two_terminal_isomorphic(g, realize(s.tree))) {
      r.classification = InTable{s.index};
      r.also_reducible_to = detail::first_reduction(r.params, edges, survivors);
      return r;
    }
  }
  for (const Survivor& s : survivors) {
    if (s.edges == edges && graph_isomorphic(g.graph(), realize(s.tree).graph())) {
      r.graph_isomorphic_to = s.index;
      break;
    }
  }
  if (!is_extendable(g)) {
    r.classification = NonExtendable{};
    return r;
  }
  if (auto target = detail::first_reduction(r.params, edges, survivors)) {
    r.classification = Reducible{*target};
    return r;
  }
  for (const Survivor& s : survivors) {
    if (s.params == r.params) {
      r.same_params_as = s.index;
      break;
    }
  }
  return r;
}

inline Classification classify_combination(const DecompTree& tree,
                                           std::span<const Survivor> survivors) {
  return examine(tree, survivors).classification;
}

inline const Survivor& survivor_at(std::span<const Survivor> survivors, int i) {
  if (i < 0 || i >= static_cast<int>(survivors.size())) {
    throw std::out_of_range("invalid survivor index " + std::to_string(i));
  }
  return survivors[static_cast<std::size_t>(i)];
}

inline CellReport examine_pair(std::span<const Survivor> survivors, int i,
                               int j, Connection op) {
  return examine(connect(op, survivor_at(survivors, i).tree,
                         survivor_at(survivors, j).tree),
                 survivors);
}

inline Classification classify_pair(std::span<const Survivor> survivors, int i,
                                    int j, Connection op) {
  return examine_pair(survivors, i, j, op).classification;
}

/// Sets each survivor's sp_dual to the survivor whose tree is its dual.
inline void assign_sp_duals(std::vector<Survivor>& survivors) {
  for (Survivor& s : survivors) {
    const DecompTree d = canonical(dual_tree(s.tree));
    s.sp_dual.reset();
    for (const Survivor& t : survivors) {
      if (t.tree == d) s.sp_dual = t.index;
    }
  }
}

struct SearchOptions {
  int max_edges = 8;
  // Tie-breaking among pairs with equal total edge count. The default is
  // (smaller index, larger index) ascending, series before parallel.
  bool parallel_first = false;
  bool reverse_ties = false;
  std::optional<std::uint64_t> shuffle_seed = std::nullopt;
};

inline Survivor make_survivor(int index, DecompTree tree,
                              std::optional<Build> build) {
  Survivor s;
  s.index = index;
  s.tree = canonical(tree);
  s.params = eval_tree(s.tree);
  s.edges = s.tree.leaf_count();
  s.build = build;
  return s;
}

/// Starts from K2 and repeatedly combines the unprocessed pair with the
/// fewest total edges, keeping only combinations that are new, extendable and
/// not reducible. Survivors are numbered in discovery order.
inline std::vector<Survivor> enumerate_survivors(const SearchOptions& opts = {}) {
  if (opts.max_edges < 1) throw std::invalid_argument("max_edges must be >= 1");
  std::vector<Survivor> survivors{make_survivor(0, DecompTree::leaf(), {})};
  std::set<std::pair<int, int>> processed;
  std::mt19937_64 rng(opts.shuffle_seed.value_or(0));

  while (true) {
    std::vector<std::pair<int, int>> ready;
    int best = opts.max_edges + 1;
    const int n = static_cast<int>(survivors.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        if (processed.contains({i, j})) continue;
        const int total = survivors[i].edges + survivors[j].edges;
        if (total > opts.max_edges || total > best) continue;
        if (total < best) {
          best = total;
          ready.clear();
        }
        ready.push_back({i, j});
      }
    }
    if (ready.empty()) break;
    std::pair<int, int> pick = ready.front();
    if (opts.shuffle_seed) {
      pick = ready[std::uniform_int_distribution<std::size_t>(
          0, ready.size() - 1)(rng)];
    } else if (opts.reverse_ties) {
      pick = ready.back();
    }
    processed.insert(pick);

    std::vector<Connection> ops{Connection::Series, Connection::Parallel};
    if (opts.parallel_first) std::swap(ops[0], ops[1]);
    if (opts.shuffle_seed && (rng() & 1)) std::swap(ops[0], ops[1]);
    for (Connection op : ops) {
      const auto [i, j] = pick;
      const DecompTree combined =
          connect(op, survivors[i].tree, survivors[j].tree);
      if (std::holds_alternative<Unresolved>(
              classify_combination(combined, survivors))) {
        survivors.push_back(make_survivor(static_cast<int>(survivors.size()),
                                          combined, Build{op, i, j}));
      }
    }
  }
  assign_sp_duals(survivors);
  return survivors;
}

/// Renumbers survivors: old index i becomes new_index[i]. Builds and duals
/// are rewritten; a build keeps its smaller operand on the left for parallel
/// connections.
inline std::vector<Survivor> renumber(const std::vector<Survivor>& survivors,
                                      const std::vector<int>& new_index) {
  if (new_index.size() != survivors.size()) {
    throw std::invalid_argument("renumber: permutation size mismatch");
  }
  std::vector<Survivor> out(survivors.size());
  for (const Survivor& s : survivors) {
    Survivor t = s;
    t.index = new_index.at(static_cast<std::size_t>(s.index));
    if (t.build) {
      t.build->left = new_index.at(static_cast<std::size_t>(s.build->left));
      t.build->right = new_index.at(static_cast<std::size_t>(s.build->right));
      if (t.build->op == Connection::Parallel &&
          t.build->left > t.build->right) {
        std::swap(t.build->left, t.build->right);
      }
    }
    if (t.sp_dual) t.sp_dual = new_index.at(static_cast<std::size_t>(*s.sp_dual));
    out.at(static_cast<std::size_t>(t.index)) = std::move(t);
  }
  return out;
}

inline std::set<DecompTree> survivor_trees(std::span<const Survivor> survivors) {
  std::set<DecompTree> out;
  for (const Survivor& s : survivors) out.insert(s.tree);
  return out;
}

struct Table1Row {
  int index = 0;
  int edges = 0;
  std::optional<int> sp_dual;
  std::optional<Build> build;
  ParamVec params;
};

/// Table 2 puts series connections above the diagonal (row < column) and
/// parallel connections below it. Table 3 holds self-combinations.
struct Tables {
  std::vector<Table1Row> table1;
  std::vector<std::vector<std::optional<Classification>>> table2;
  std::vector<Classification> self_series;
  std::vector<Classification> self_parallel;
};

namespace detail {

struct CellJob {
  int row;
  int col;
  Connection op;
};

template <typename Fn>
void run_jobs(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) fn(k);
    });
  }
}

}  // namespace detail

/// Every table cell with its full report, in row-major order; self
/// combinations follow (series row, then parallel row).
struct CellReports {
  std::vector<std::vector<std::optional<CellReport>>> table2;
  std::vector<CellReport> self_series;
  std::vector<CellReport> self_parallel;
};

inline CellReports examine_all(std::span<const Survivor> survivors,
                               unsigned threads = 1) {
  const int n = static_cast<int>(survivors.size());
  std::vector<detail::CellJob> jobs;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r != c) {
        jobs.push_back({r, c, r < c ? Connection::Series : Connection::Parallel});
      }
    }
  }
  for (int k = 0; k < n; ++k) jobs.push_back({k, k, Connection::Series});
  for (int k = 0; k < n; ++k) jobs.push_back({k, k, Connection::Parallel});

  std::vector<std::optional<CellReport>> results(jobs.size());
  detail::run_jobs(jobs.size(), threads, [&](std::size_t k) {
    const auto& j = jobs[k];
    results[k] = examine_pair(survivors, j.row, j.col, j.op);
  });

  CellReports out;
  out.table2.assign(static_cast<std::size_t>(n),
                    std::vector<std::optional<CellReport>>(
                        static_cast<std::size_t>(n)));
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const auto& j = jobs[k];
    if (j.row != j.col) {
      out.table2[j.row][j.col] = std::move(results[k]);
    } else if (j.op == Connection::Series) {
      out.self_series.push_back(std::move(*results[k]));
    } else {
      out.self_parallel.push_back(std::move(*results[k]));
    }
  }
  return out;
}

inline Tables emit_tables(std::span<const Survivor> survivors,
                          const CellReports& cells) {
  Tables t;
  for (const Survivor& s : survivors) {
    t.table1.push_back({s.index, s.edges, s.sp_dual, s.build, s.params});
  }
  for (const auto& row : cells.table2) {
    auto& out = t.table2.emplace_back();
    for (const auto& cell : row) {
      if (cell) {
        out.push_back(cell->classification);
      } else {
        out.push_back(std::nullopt);
      }
    }
  }
  for (const auto& c : cells.self_series) t.self_series.push_back(c.classification);
  for (const auto& c : cells.self_parallel) {
    t.self_parallel.push_back(c.classification);
  }
  return t;
}

inline Tables emit_tables(std::span<const Survivor> survivors,
                          unsigned threads = 1) {
  return emit_tables(survivors, examine_all(survivors, threads));
}

struct Violation {
  int left = 0;
  int right = 0;
  Connection op = Connection::Series;
  CellReport report;
};

struct FixedPointReport {
  // Table cells (and self-combinations) that are neither in the table,
  // non-extendable nor reducible.
  std::vector<Violation> violations;
  // Series connections taken in the opposite order (column before row).
  // These are not table cells; unresolved ones are listed here with the
  // survivor sharing their parameters, if any.
  std::vector<Violation> reversed_series_unresolved;
  // Reducible cells whose target fails an independent replaces() re-check.
  std::vector<Violation> bad_reductions;
  // In-table cells that are also reducible.
  std::vector<Violation> in_table_and_reducible;

  bool closed() const { return violations.empty() && bad_reductions.empty(); }
};

inline FixedPointReport verify_fixed_point(std::span<const Survivor> survivors,
                                           unsigned threads = 1) {
  const CellReports cells = examine_all(survivors, threads);
  FixedPointReport rep;
  auto check = [&](int r, int c, Connection op, const CellReport& cell) {
    if (std::holds_alternative<Unresolved>(cell.classification)) {
      rep.violations.push_back({r, c, op, cell});
    }
    if (auto* red = std::get_if<Reducible>(&cell.classification)) {
      const Survivor& target = survivor_at(survivors, red->target);
      if (target.edges >= cell.tree.leaf_count() ||
          !replaces(cell.params, target.params)) {
        rep.bad_reductions.push_back({r, c, op, cell});
      }
    }
    if (cell.also_reducible_to) {
      rep.in_table_and_reducible.push_back({r, c, op, cell});
    }
  };
  const int n = static_cast<int>(survivors.size());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r != c) check(r, c, r < c ? Connection::Series : Connection::Parallel,
                        *cells.table2[r][c]);
    }
  }
  for (int k = 0; k < n; ++k) {
    check(k, k, Connection::Series, cells.self_series[k]);
    check(k, k, Connection::Parallel, cells.self_parallel[k]);
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < r; ++c) {
      CellReport cell = examine_pair(survivors, r, c, Connection::Series);
      if (std::holds_alternative<Unresolved>(cell.classification)) {
        rep.reversed_series_unresolved.push_back(
            {r, c, Connection::Series, std::move(cell)});
      }
    }
  }
  return rep;
}

struct ClosureRow {
  int index = 0;
  BasicCounts tutte;    // of G + st
  BasicCounts oracle;   // of G + st, by enumeration
  bool holds = false;   // alpha * alpha* >= tau^2
  bool equality = false;
  bool agrees() const { return tutte == oracle; }
};

struct ClosureReport {
  std::vector<ClosureRow> rows;
  bool passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const ClosureRow& r) {
      return r.holds && r.agrees();
    });
  }
};

/// Adds a source-sink edge to every survivor and checks the multiplicative
/// inequality on the result.
inline ClosureReport theorem_closure_check(std::span<const Survivor> survivors) {
  ClosureReport rep;
  TutteEvaluator trees(1, 1), acyclic(2, 0), cyclic(0, 2);
  for (const Survivor& s : survivors) {
    const Multigraph closed = realize(s.tree).with_terminal_edge();
    ClosureRow row;
    row.index = s.index;
    row.tutte = {trees.evaluate(closed), acyclic.evaluate(closed),
                 cyclic.evaluate(closed)};
    row.oracle = brute_basic_counts(closed);
    const BigInt lhs = row.tutte.alpha * row.tutte.alphastar;
    const BigInt rhs = row.tutte.tau * row.tutte.tau;
    row.holds = lhs >= rhs;
    row.equality = lhs == rhs;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace mwsp
