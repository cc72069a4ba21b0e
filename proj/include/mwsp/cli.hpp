#pragma once

// Subcommand implementations. Each returns an exit code:
// 0 success/true, 1 check failure/false, 2 usage or input error.

#include "graph_io.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "reducibility.hpp"
#include "table_format.hpp"
#include "tutte.hpp"

#include <filesystem>
#include <functional>
#include <fstream>
#include <ostream>
#include <string>

namespace mwsp::cli {

inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

inline constexpr int kMaxSearchEdges = 12;
inline constexpr int kMaxThomassen = 24;

enum class Format { Csv, Json, Text };

struct TablesConfig {
  Format format = Format::Text;
  int max_edges = 8;
  std::optional<std::filesystem::path> out_dir;
  unsigned threads = default_threads();
};

inline std::string_view op_symbol(Connection op) {
  return op == Connection::Series ? "S" : "P";
}

inline void print_violations(std::ostream& os, std::string_view label,
                             const std::vector<Violation>& vs) {
  for (const Violation& v : vs) {
    os << label << ": " << v.left << ' ' << op_symbol(v.op) << ' ' << v.right
       << " = " << to_expr(v.report.tree) << ' ' << v.report.params;
    if (v.report.same_params_as) {
      os << " (same parameters as " << *v.report.same_params_as << ")";
    }
    os << '\n';
  }
}

inline void print_summary(std::ostream& os, const PipelineResult& r) {
  const auto pass = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  os << "survivors: " << r.survivors.size() << '\n';
  os << "fixed point: " << pass(r.fixed_point.closed()) << '\n';
  print_violations(os, "  unresolved", r.fixed_point.violations);
  print_violations(os, "  bad reduction", r.fixed_point.bad_reductions);
  print_violations(os, "  reversed series, unresolved",
                   r.fixed_point.reversed_series_unresolved);
  os << "closure with source-sink edge: " << pass(r.closure.passed()) << '\n';
  if (r.reference_numbering) {
    os << "reference tables: " << pass(r.diff.ok()) << '\n';
    for (const auto& m : r.diff.mismatches) os << "  mismatch: " << m << '\n';
    for (const auto& n : r.diff.notes) os << "  note: " << n << '\n';
  } else {
    os << "reference tables: skipped (survivor set differs)\n";
  }
}

inline bool write_file(const std::filesystem::path& path,
                       const std::function<void(std::ostream&)>& body,
                       std::ostream& err) {
  std::ofstream f(path);
  if (!f) {
    err << "cannot write " << path.string() << '\n';
    return false;
  }
  body(f);
  return static_cast<bool>(f);
}

inline int cmd_tables(const TablesConfig& cfg, std::ostream& out,
                      std::ostream& err) {
  if (cfg.max_edges < 1 || cfg.max_edges > kMaxSearchEdges) {
    err << "--max-edges must be in 1.." << kMaxSearchEdges << '\n';
    return kUsage;
  }
  SearchOptions opts;
  opts.max_edges = cfg.max_edges;
  const PipelineResult r = run_pipeline(opts, cfg.threads);
  const Tables& t = r.tables;

  std::error_code ec;
  if (cfg.out_dir) std::filesystem::create_directories(*cfg.out_dir, ec);
  const auto dir = cfg.out_dir.value_or(".");
  bool written = true;
  switch (cfg.format) {
    case Format::Csv:
      written = write_file(dir / "table1.csv",
                           [&](std::ostream& o) { write_table1_csv(o, t); }, err) &&
                write_file(dir / "table2.csv",
                           [&](std::ostream& o) { write_table2_csv(o, t); }, err) &&
                write_file(dir / "table3.csv",
                           [&](std::ostream& o) { write_table3_csv(o, t); }, err);
      if (written) out << "wrote table1.csv, table2.csv, table3.csv to "
                       << dir.string() << '\n';
      break;
    case Format::Json:
      if (cfg.out_dir) {
        written = write_file(dir / "tables.json", [&](std::ostream& o) {
          o << tables_to_json(t).dump(2) << '\n';
        }, err);
      } else {
        out << tables_to_json(t).dump(2) << '\n';
      }
      break;
    case Format::Text:
      if (cfg.out_dir) {
        written = write_file(dir / "tables.txt",
                             [&](std::ostream& o) { write_tables_text(o, t); },
                             err);
      } else {
        write_tables_text(out, t);
        out << '\n';
      }
      break;
  }
  // Keep stdout parseable when it carries JSON.
  std::ostream& summary =
      cfg.format == Format::Json && !cfg.out_dir ? err : out;
  print_summary(summary, r);
  const bool ok = written && r.fixed_point.closed() && r.closure.passed() &&
                  (!r.reference_numbering || r.diff.ok());
  summary << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kFail;
}

inline int cmd_eval(const std::string& expr, std::ostream& out,
                    std::ostream& err) {
  DecompTree tree;
  try {
    tree = parse_expr(expr);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  }
  const ParamVec algebra = eval_tree(tree);
  out << "tree: " << to_expr(tree) << '\n'
      << "edges: " << tree.leaf_count() << '\n'
      << "params: " << algebra << '\n';
  const TwoTerminalGraph g = realize(tree);
  if (g.graph().num_edges() > kMaxOrientationEdges) {
    out << "oracle: skipped (" << g.graph().num_edges() << " edges, limit "
        << kMaxOrientationEdges << ")\n";
    return kOk;
  }
  const ParamVec brute = brute_param_vec(g);
  out << "oracle: " << brute << '\n'
      << "agree: " << (brute == algebra ? "yes" : "no") << '\n';
  return brute == algebra ? kOk : kFail;
}

inline void print_status(std::ostream& out, const MWStatus& s) {
  const auto holds = [](bool b, const BigInt& l, const BigInt& r) {
    return std::string(b ? "holds" : "fails") + (l == r ? " (equality)" : "");
  };
  out << "tau: " << s.tau << '\n'
      << "alpha: " << s.alpha << '\n'
      << "alpha*: " << s.alphastar << '\n'
      << (s.alpha < s.tau ? "alpha < tau" : "alpha >= tau") << '\n'
      << "max(alpha, alpha*) >= tau: "
      << holds(s.holds_max, std::max(s.alpha, s.alphastar), s.tau) << '\n'
      << "alpha + alpha* >= 2 tau: "
      << holds(s.holds_additive, s.alpha + s.alphastar, 2 * s.tau) << '\n'
      << "alpha * alpha* >= tau^2: "
      << holds(s.holds_multiplicative, s.alpha * s.alphastar, s.tau * s.tau)
      << '\n';
}

/// Exit 1 only for a loopless bridgeless graph failing an inequality.
inline int check_graph(const Multigraph& g, std::ostream& out,
                       std::ostream& err) {
  if (!is_connected(g)) {
    err << "graph is not connected\n";
    return kUsage;
  }
  const BigInt tau = count_spanning_trees(g);
  const BigInt alpha = count_acyclic(g);
  const BigInt alphastar = count_totally_cyclic(g);
  const MWStatus s = mw_status(tau, alpha, alphastar);
  print_status(out, s);
  const bool loops = g.loop_count() > 0;
  const auto bridges = bridge_mask(g);
  const bool has_bridge =
      std::find(bridges.begin(), bridges.end(), true) != bridges.end();
  if (loops) out << "warning: graph has loops, alpha = 0\n";
  if (has_bridge) out << "warning: graph has bridges, alpha* = 0\n";
  const bool all = s.holds_max && s.holds_additive && s.holds_multiplicative;
  return (loops || has_bridge || all) ? kOk : kFail;
}

inline int cmd_check(const std::string& path, std::ostream& out,
                     std::ostream& err) {
  std::ifstream f(path);
  if (!f) {
    err << "cannot read " << path << '\n';
    return kUsage;
  }
  Multigraph g;
  try {
    g = read_graph(f);
  } catch (const GraphError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return check_graph(g, out, err);
}

inline int cmd_replaces(const std::string& g_expr, const std::string& h_expr,
                        std::ostream& out, std::ostream& err) {
  ParamVec g, h;
  try {
    g = eval_tree(parse_expr(g_expr));
    h = eval_tree(parse_expr(h_expr));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  }
  ReplaceTest r;
  try {
    r = replace_test(g, h);
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  out << "g: " << g << '\n'
      << "h: " << h << '\n'
      << "t1: " << to_string(r.t1) << '\n'
      << "t2: " << to_string(r.t2) << '\n'
      << "t3: " << to_string(r.t3) << '\n'
      << "replaces: " << (r.replaceable ? "true" : "false") << '\n';
  return r.replaceable ? kOk : kFail;
}

/// Closed forms for the digon-cycle family.
inline BasicCounts thomassen_closed_form(int n) {
  const BigInt two_n = BigInt(1) << n;
  BigInt three = 1;
  for (int i = 0; i < n - 2; ++i) three *= 3;
  return {(two_n >> 1) + BigInt(n - 2) * (two_n >> 3), two_n - 2, 2 * three};
}

inline int cmd_thomassen(int n, std::ostream& out, std::ostream& err) {
  if (n < 4 || n > kMaxThomassen) {
    err << "n must be in 4.." << kMaxThomassen << '\n';
    return kUsage;
  }
  const Multigraph g = thomassen_graph(n);
  const BasicCounts closed = thomassen_closed_form(n);
  const BasicCounts tutte{count_spanning_trees(g), count_acyclic(g),
                          count_totally_cyclic(g)};
  const auto row = [&](std::string_view name, const BasicCounts& c) {
    out << name << ": tau=" << c.tau << " alpha=" << c.alpha
        << " alpha*=" << c.alphastar << '\n';
  };
  out << "n: " << n << '\n' << "edges: " << g.num_edges() << '\n';
  row("closed form", closed);
  row("tutte", tutte);
  bool agree = closed == tutte;
  if (g.num_edges() <= kMaxOrientationEdges) {
    const BasicCounts brute = brute_basic_counts(g);
    row("oracle", brute);
    agree = agree && brute == closed;
  } else {
    out << "oracle: skipped (" << g.num_edges() << " edges, limit "
        << kMaxOrientationEdges << ")\n";
  }
  out << "agree: " << (agree ? "yes" : "no") << '\n';
  print_status(out, mw_status(tutte.tau, tutte.alpha, tutte.alphastar));
  return agree ? kOk : kFail;
}

}  // namespace mwsp::cli
