#pragma once

// Reference survivor list and combination tables, used to diff a fresh
// enumeration and to present survivors in the reference numbering.

#include "search.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mwsp::reference {

struct Row {
  int edges;
  int sp_dual;
  std::optional<Build> build;
  std::array<int, 6> params;
};

inline const std::vector<Row>& table1() {
  using enum Connection;
  static const std::vector<Row> rows = {
      {1, 0, std::nullopt, {1, 1, 2, 0, 2, 0}},
      {2, 2, Build{Parallel, 0, 0}, {2, 1, 2, 0, 4, 2}},
      {2, 1, Build{Series, 0, 0}, {1, 2, 4, 2, 2, 0}},
      {3, 4, Build{Parallel, 0, 2}, {3, 2, 6, 0, 4, 2}},
      {3, 3, Build{Series, 0, 1}, {2, 3, 4, 2, 6, 0}},
      {3, 6, Build{Parallel, 0, 1}, {3, 1, 2, 0, 8, 6}},
      {3, 5, Build{Series, 0, 2}, {1, 3, 8, 6, 2, 0}},
      {4, 8, Build{Series, 1, 1}, {4, 4, 4, 2, 14, 4}},
      {4, 7, Build{Parallel, 2, 2}, {4, 4, 14, 4, 4, 2}},
      {4, 10, Build{Parallel, 1, 2}, {5, 2, 6, 0, 8, 6}},
      {4, 9, Build{Series, 1, 2}, {2, 5, 8, 6, 6, 0}},
      {5, 12, Build{Series, 1, 5}, {6, 5, 4, 2, 30, 12}},
      {5, 11, Build{Parallel, 2, 6}, {5, 6, 30, 12, 4, 2}},
      {6, 14, Build{Parallel, 2, 8}, {12, 8, 46, 8, 8, 6}},
      {6, 13, Build{Series, 1, 7}, {8, 12, 8, 6, 46, 8}},
      {7, 16, Build{Series, 5, 8}, {12, 16, 28, 18, 30, 12}},
      {7, 15, Build{Parallel, 6, 7}, {16, 12, 30, 12, 28, 18}},
      {7, 18, Build{Parallel, 2, 12}, {16, 12, 102, 24, 8, 6}},
      {7, 17, Build{Series, 1, 11}, {12, 16, 8, 6, 102, 24}},
  };
  return rows;
}

// Row r, column c: series connection when r < c, parallel when r > c.
inline const std::vector<std::vector<std::string_view>>& table2() {
  static const std::vector<std::vector<std::string_view>> cells = {
      {"-", "=4", "=6", "N", "=10", "4", "2", "2", "2", "4", "6", "2", "2", "2", "2", "2", "2", "2", "2"},
      {"=5", "-", "=10", "N", "2", "=11", "6", "=14", "4", "7", "2", "=18", "2", "7", "2", "2", "7", "7", "2"},
      {"=3", "=9", "-", "N", "6", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2"},
      {"=9", "5", "1", "-", "N", "N", "N", "N", "N", "N", "N", "N", "N", "N", "N", "N", "N", "N", "N"},
      {"N", "N", "N", "N", "-", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2"},
      {"1", "1", "5", "1", "N", "-", "2", "=18", "=15", "3", "2", "0", "2", "0", "2", "2", "0", "0", "2"},
      {"3", "1", "=12", "1", "N", "1", "-", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2"},
      {"1", "1", "3", "1", "N", "1", "=16", "-", "2", "4", "2", "2", "2", "2", "2", "2", "2", "2", "2"},
      {"1", "1", "=13", "1", "N", "1", "=17", "1", "-", "4", "2", "2", "2", "2", "2", "2", "2", "2", "2"},
      {"5", "1", "1", "1", "N", "1", "1", "1", "1", "-", "2", "7", "2", "0", "2", "2", "0", "0", "2"},
      {"3", "1", "8", "1", "N", "1", "4", "3", "3", "1", "-", "2", "2", "2", "2", "2", "2", "2", "2"},
      {"1", "1", "1", "1", "N", "1", "1", "1", "1", "1", "1", "-", "2", "4", "2", "2", "2", "2", "2"},
      {"1", "1", "=17", "1", "N", "1", "0", "1", "1", "1", "8", "1", "-", "2", "2", "2", "2", "2", "2"},
      {"1", "1", "1", "1", "N", "1", "1", "1", "1", "1", "1", "1", "1", "-", "2", "2", "2", "4", "2"},
      {"1", "1", "8", "1", "N", "1", "0", "1", "1", "1", "0", "1", "3", "1", "-", "2", "2", "2", "2"},
      {"1", "1", "8", "1", "N", "1", "0", "1", "1", "1", "0", "1", "1", "1", "1", "-", "2", "2", "2"},
      {"1", "1", "1", "1", "N", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "-", "0", "2"},
      {"1", "1", "1", "1", "N", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "-", "2"},
      {"1", "1", "8", "1", "N", "1", "0", "1", "1", "1", "0", "1", "1", "1", "3", "0", "1", "1", "-"},
  };
  return cells;
}

inline const std::vector<std::string_view>& self_series() {
  static const std::vector<std::string_view> cells = {
      "=2", "=7", "2", "N", "2", "3", "2", "2", "2", "7",
      "2", "2", "2", "4", "2", "2", "0", "0", "2"};
  return cells;
}

inline const std::vector<std::string_view>& self_parallel() {
  static const std::vector<std::string_view> cells = {
      "=1", "1", "=8", "1", "N", "1", "4", "1", "1", "1",
      "7", "1", "1", "1", "3", "0", "1", "1", "0"};
  return cells;
}

/// Parses a cell ("N", "x", "=x"); "-" and anything else give nullopt.
inline std::optional<Classification> parse_cell(std::string_view text) {
  if (text == "N") return NonExtendable{};
  if (text == "?") return Unresolved{};
  bool in_table = !text.empty() && text.front() == '=';
  if (in_table) text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  int value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return std::nullopt;
    value = value * 10 + (ch - '0');
  }
  if (in_table) return InTable{value};
  return Reducible{value};
}

inline ParamVec params_of(const Row& row) {
  ParamVec p;
  auto a = p.to_array();
  for (std::size_t i = 0; i < 6; ++i) a[i] = row.params[i];
  return ParamVec::from_array(a);
}

/// Trees obtained by replaying the reference build column.
inline std::vector<DecompTree> trees() {
  std::vector<DecompTree> out;
  for (const Row& row : table1()) {
    if (!row.build) {
      out.push_back(DecompTree::leaf());
      continue;
    }
    out.push_back(connect(row.build->op, out.at(row.build->left),
                          out.at(row.build->right)));
  }
  return out;
}

/// Maps each survivor (by its current index) to the reference row realizing
/// an isomorphic two-terminal graph. Empty unless the match is a bijection.
inline std::optional<std::vector<int>> match_numbering(
    std::span<const Survivor> survivors) {
  const std::vector<DecompTree> ref = trees();
  if (survivors.size() != ref.size()) return std::nullopt;
  std::vector<int> mapping(survivors.size(), -1);
  std::vector<bool> taken(ref.size(), false);
  for (const Survivor& s : survivors) {
    for (std::size_t r = 0; r < ref.size(); ++r) {
      if (!taken[r] && (ref[r] == s.tree ||
                        two_terminal_isomorphic(realize(ref[r]),
                                                realize(s.tree)))) {
        mapping.at(static_cast<std::size_t>(s.index)) = static_cast<int>(r);
        taken[r] = true;
        break;
      }
    }
    if (mapping.at(static_cast<std::size_t>(s.index)) < 0) return std::nullopt;
  }
  return mapping;
}

/// One line per disagreement between computed tables and the reference.
/// Reducible cells agree when both sides say reducible and the reference
/// target passes replaces() for the combined graph.
struct Diff {
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;  // differences that are not failures
  bool ok() const { return mismatches.empty(); }
};

inline Diff compare(std::span<const Survivor> survivors, const Tables& tables) {
  Diff d;
  const auto& rows = table1();
  if (tables.table1.size() != rows.size()) {
    d.mismatches.push_back("table1: " + std::to_string(tables.table1.size()) +
                           " rows, expected " + std::to_string(rows.size()));
    return d;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Table1Row& got = tables.table1[i];
    const std::string at = "table1 row " + std::to_string(i) + ": ";
    if (got.edges != rows[i].edges) d.mismatches.push_back(at + "edge count");
    if (got.sp_dual != rows[i].sp_dual) d.mismatches.push_back(at + "sp-dual");
    if (got.params != params_of(rows[i])) {
      d.mismatches.push_back(at + "parameters " + to_string(got.params) +
                             " expected " + to_string(params_of(rows[i])));
    }
    if (got.build != rows[i].build) {
      d.notes.push_back(at + "built from a different pair");
    }
  }

  auto cell = [&](std::string where, const Classification& got,
                  std::string_view want, int r, int c, Connection op) {
    const auto expected = parse_cell(want);
    if (!expected) {
      d.mismatches.push_back(where + ": unreadable reference cell");
      return;
    }
    if (std::holds_alternative<Reducible>(*expected)) {
      const int target = std::get<Reducible>(*expected).target;
      if (!std::holds_alternative<Reducible>(got)) {
        d.mismatches.push_back(where + ": got " + cell_text(got) +
                               " expected " + std::string(want));
        return;
      }
      const ParamVec combo = connect(op, survivor_at(survivors, r).params,
                                     survivor_at(survivors, c).params);
      if (!replaces(combo, survivor_at(survivors, target).params)) {
        d.mismatches.push_back(where + ": reference target " +
                               std::to_string(target) + " fails replaces()");
      }
      if (std::get<Reducible>(got).target != target) {
        d.notes.push_back(where + ": reduced to " + cell_text(got) +
                          ", reference uses " + std::string(want));
      }
      return;
    }
    if (got != *expected) {
      d.mismatches.push_back(where + ": got " + cell_text(got) + " expected " +
                             std::string(want));
    }
  };

  const auto& t2 = table2();
  for (int r = 0; r < static_cast<int>(t2.size()); ++r) {
    for (int c = 0; c < static_cast<int>(t2.size()); ++c) {
      if (r == c) continue;
      const auto& got = tables.table2.at(r).at(c);
      const std::string where =
          "table2[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      if (!got) {
        d.mismatches.push_back(where + ": missing");
        continue;
      }
      cell(where, *got, t2[r][c], r, c,
           r < c ? Connection::Series : Connection::Parallel);
    }
  }
  for (int k = 0; k < static_cast<int>(self_series().size()); ++k) {
    cell("table3 series[" + std::to_string(k) + "]", tables.self_series.at(k),
         self_series()[k], k, k, Connection::Series);
    cell("table3 parallel[" + std::to_string(k) + "]",
         tables.self_parallel.at(k), self_parallel()[k], k, k,
         Connection::Parallel);
  }
  return d;
}

}  // namespace mwsp::reference
