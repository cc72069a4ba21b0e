// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fail.

#include "mwsp/mwsp.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace mwsp;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::vector<Survivor> reference_numbered(const SearchOptions& opts = {}) {
  auto found = enumerate_survivors(opts);
  if (auto m = reference::match_numbering(found)) return renumber(found, *m);
  return found;
}

std::vector<DecompTree> trees_up_to(int m) {
  std::vector<DecompTree> out;
  for (int k = 1; k <= m; ++k) {
    for (auto& t : enumerate_trees(k)) out.push_back(std::move(t));
  }
  return out;
}

Outcome table1_reproduction() {
  Outcome o;
  const auto found = enumerate_survivors();
  o.require(found.size() == 19, "expected 19 survivors, got " +
                                    std::to_string(found.size()));
  const auto mapping = reference::match_numbering(found);
  o.require(mapping.has_value(), "survivors do not match the reference graphs");
  if (!o.ok) return o;
  const auto survivors = renumber(found, *mapping);
  const Tables t = emit_tables(survivors);
  const auto& rows = reference::table1();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Table1Row& r = t.table1[i];
    o.require(r.edges == rows[i].edges && r.sp_dual == rows[i].sp_dual &&
                  r.params == reference::params_of(rows[i]),
              "row " + std::to_string(i) + " differs");
  }
  o.detail = o.ok ? "19 rows match" : o.detail;
  return o;
}

Outcome tables23_reproduction() {
  Outcome o;
  const auto survivors = reference_numbered();
  const Tables t = emit_tables(survivors);
  const reference::Diff d = reference::compare(survivors, t);
  for (const auto& m : d.mismatches) o.require(false, m);
  std::size_t plain = 0;
  const auto& ref2 = reference::table2();
  for (int r = 0; r < 19; ++r) {
    for (int c = 0; c < 19; ++c) {
      if (r == c) continue;
      const auto cell = reference::parse_cell(ref2[r][c]);
      if (const auto* red = std::get_if<Reducible>(&*cell)) {
        ++plain;
        const ParamVec combo =
            connect(r < c ? Connection::Series : Connection::Parallel,
                    survivors[r].params, survivors[c].params);
        o.require(replaces(combo, survivors[red->target].params),
                  "cell " + std::to_string(r) + "," + std::to_string(c));
      }
    }
  }
  for (int k = 0; k < 19; ++k) {
    for (auto [op, text] : {std::pair{Connection::Series, reference::self_series()[k]},
                            std::pair{Connection::Parallel, reference::self_parallel()[k]}}) {
      const auto cell = reference::parse_cell(text);
      if (const auto* red = std::get_if<Reducible>(&*cell)) {
        ++plain;
        o.require(replaces(connect(op, survivors[k].params, survivors[k].params),
                           survivors[red->target].params),
                  "self cell " + std::to_string(k));
      }
    }
  }
  if (o.ok) {
    o.detail = "all 380 cells match the reference; " + std::to_string(plain) +
               " reductions re-verified; " + std::to_string(d.notes.size()) +
               " notes";
  }
  return o;
}

Outcome theorem_closure() {
  Outcome o;
  const ClosureReport r = theorem_closure_check(reference_numbered());
  o.require(r.rows.size() == 19, "expected 19 rows");
  for (const ClosureRow& row : r.rows) {
    o.require(row.agrees(), "engine and oracle disagree on row " +
                                std::to_string(row.index));
    o.require(row.holds, "inequality fails on row " + std::to_string(row.index));
  }
  o.require(!r.rows.empty() && r.rows[0].equality &&
                r.rows[0].tutte == BasicCounts{2, 2, 2},
            "digon is not an equality case");
  if (o.ok) o.detail = "19 graphs with source-sink edge; digon gives equality";
  return o;
}

Outcome algebra_vs_brute() {
  Outcome o;
  const auto trees = trees_up_to(7);
  for (const DecompTree& t : trees) {
    o.require(eval_tree(t) == brute_param_vec(realize(t)), to_expr(t));
  }
  if (o.ok) o.detail = std::to_string(trees.size()) + " trees with <= 7 edges";
  return o;
}

Outcome tutte_vs_brute() {
  Outcome o;
  std::size_t graphs = 0;
  TutteEvaluator t11(1, 1), t20(2, 0), t02(0, 2);
  auto cross = [&](const Multigraph& g, const std::string& name) {
    const BasicCounts b = brute_basic_counts(g);
    o.require(b == BasicCounts{t11.evaluate(g), t20.evaluate(g), t02.evaluate(g)},
              name);
    ++graphs;
  };
  for (const DecompTree& t : trees_up_to(7)) {
    const TwoTerminalGraph g = realize(t);
    cross(g.graph(), to_expr(t));
    cross(g.with_terminal_edge(), to_expr(t) + " + st");
  }
  for (int n = 4; n <= 8; ++n) cross(thomassen_graph(n), "family n=" + std::to_string(n));
  for (int n = 4; n <= 12; ++n) {
    const Multigraph g = thomassen_graph(n);
    const BasicCounts closed = cli::thomassen_closed_form(n);
    const BasicCounts engine{t11.evaluate(g), t20.evaluate(g), t02.evaluate(g)};
    o.require(engine == closed, "closed form n=" + std::to_string(n));
    o.require((engine.alpha < engine.tau) == (n >= 6),
              "alpha vs tau at n=" + std::to_string(n));
  }
  if (o.ok) {
    o.detail = std::to_string(graphs) +
               " graphs cross-checked; closed forms hold for n=4..12";
  }
  return o;
}

Outcome recipe_parity() {
  Outcome o;
  // The reference construction recipe.
  std::vector<ParamVec> g(19);
  g[0] = k2_params();
  g[1] = par(g[0], g[0]); g[2] = ser(g[0], g[0]);
  g[3] = par(g[0], g[2]); g[4] = ser(g[0], g[1]);
  g[5] = par(g[0], g[1]); g[6] = ser(g[0], g[2]);
  g[7] = ser(g[1], g[1]); g[8] = par(g[2], g[2]);
  g[9] = par(g[1], g[2]); g[10] = ser(g[1], g[2]);
  g[11] = ser(g[1], g[5]); g[12] = par(g[2], g[6]);
  g[13] = par(g[2], g[8]); g[14] = ser(g[1], g[7]);
  g[15] = ser(g[5], g[8]); g[16] = par(g[6], g[7]);
  g[17] = par(g[2], g[12]); g[18] = ser(g[1], g[11]);
  const auto& rows = reference::table1();
  for (int i = 0; i < 19; ++i) {
    o.require(g[i] == reference::params_of(rows[i]), "recipe row " + std::to_string(i));
    o.require(spdual(g[i]) == g[rows[i].sp_dual], "spdual row " + std::to_string(i));
  }
  o.require(replaces(ser(g[1], g[6]), g[6]), "replaces(ser(g1,g6),g6)");
  o.require(replaces(g[0], g[0]) && !replaces(g[0], g[1]), "trivial replaces cases");
  const auto survivors = reference_numbered();
  for (int i = 0; i < 19; ++i) {
    o.require(eval_tree(survivors[i].tree) == g[i], "tree parity " + std::to_string(i));
  }
  if (o.ok) o.detail = "ser, par, spdual and replaces agree with the reference recipe";
  return o;
}

Outcome property_suite() {
  Outcome o;
  std::size_t checks = 0;
  for (const DecompTree& t : trees_up_to(7)) {
    o.require(eval_tree(dual_tree(t)) == spdual(eval_tree(t)), "dual " + to_expr(t));
    o.require(well_formed(eval_tree(t)), "parity " + to_expr(t));
    checks += 2;
  }
  auto each = [&](int n, bool loops) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u) {
      for (int v = loops ? u : u + 1; v < n; ++v) slots.push_back({u, v});
    }
    std::vector<Edge> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      const Multigraph g(n, chosen);
      if (is_connected(g)) {
        const BasicCounts b = brute_basic_counts(g);
        o.require(b == BasicCounts{count_spanning_trees(g), count_acyclic(g),
                                   count_totally_cyclic(g)},
                  "deletion-contraction");
        ++checks;
      }
      if (chosen.size() == 6) return;
      for (std::size_t i = from; i < slots.size(); ++i) {
        chosen.push_back(slots[i]);
        rec(i);
        chosen.pop_back();
      }
    };
    rec(0);
  };
  for (int n = 1; n <= 4; ++n) each(n, true);
  each(5, false);
  for (const Survivor& s : reference_numbered()) {
    const Multigraph g = realize(s.tree).graph();
    const auto bridges = bridge_mask(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (parallel_class(g, e).size() >= 2) {
        const ExtensionReport r = verify_parallel_extension(g, e);
        o.require(r.after.alpha == r.before.alpha && r.tree_bound_ok,
                  "parallel extension, graph " + std::to_string(s.index));
        ++checks;
      }
      if (!bridges[e] && series_class(g, e).size() >= 2) {
        const ExtensionReport r = verify_series_extension(g, e);
        o.require(r.after.alphastar == r.before.alphastar && r.tree_bound_ok,
                  "series extension, graph " + std::to_string(s.index));
        ++checks;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " checks";
  return o;
}

Outcome fixed_point_stability() {
  Outcome o;
  const auto base = survivor_trees(enumerate_survivors());
  o.require(verify_fixed_point(reference_numbered()).closed(), "not closed at 8");
  for (int bound : {9, 10}) {
    const auto s = enumerate_survivors({.max_edges = bound});
    o.require(survivor_trees(s) == base, "differs at max_edges " + std::to_string(bound));
  }
  std::vector<SearchOptions> orders{{.parallel_first = true}, {.reverse_ties = true}};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    orders.push_back({.max_edges = 9, .shuffle_seed = seed});
  }
  for (const SearchOptions& opts : orders) {
    o.require(survivor_trees(enumerate_survivors(opts)) == base, "order-dependent");
  }
  if (o.ok) o.detail = "same 19 graphs at max_edges 9, 10 and under 12 orders";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "table 1 reproduction", 10, table1_reproduction},
      {2, "tables 2 and 3 reproduction", 60, tables23_reproduction},
      {3, "closure with source-sink edge", 10, theorem_closure},
      {4, "algebra vs brute force on all trees <= 7 edges", 300, algebra_vs_brute},
      {5, "Tutte engine vs brute force and closed forms", 0, tutte_vs_brute},
      {6, "parity with the reference recipe", 0, recipe_parity},
      {7, "property suite", 0, property_suite},
      {8, "fixed-point stability", 0, fixed_point_stability},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.ok = false;
      o.detail += " (over the time limit)";
    }
    all = all && o.ok;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": "
              << c.name << " [" << t.str() << "s] " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
