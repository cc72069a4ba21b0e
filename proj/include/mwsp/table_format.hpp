#pragma once

// CSV, JSON and plain-text renderings of the survivor tables.

#include "reference_tables.hpp"
#include "search.hpp"

#include <json.hpp>

#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace mwsp {

inline std::string build_text(const std::optional<Build>& b) {
  if (!b) return "---";
  return std::to_string(b->left) +
         (b->op == Connection::Series ? " ⊕_S " : " ⊕_P ") +
         std::to_string(b->right);
}

inline std::string optional_text(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "-";
}

inline std::string table2_text(const std::optional<Classification>& c) {
  return c ? cell_text(*c) : "-";
}

inline nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

/// ParamVec as [tau, tau2, alpha, alpha2, alpha2star, alphastar].
inline nlohmann::json params_to_json(const ParamVec& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const BigInt& v : p.to_array()) out.push_back(bigint_to_json(v));
  return out;
}

inline ParamVec params_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 6) {
    throw std::invalid_argument("parameter vector must have six entries");
  }
  std::array<BigInt, 6> a;
  for (std::size_t i = 0; i < 6; ++i) a[i] = bigint_from_json(j[i]);
  return ParamVec::from_array(a);
}

// Schema:
// { "table1": [ {"no", "edges", "sp_dual" (int|null),
//                "built" ({"op": "S"|"P", "left", "right"}|null),
//                "params": [6 ints]} ],
//   "table2": [[cell text]], "table3": {"series": [...], "parallel": [...]} }
inline nlohmann::json tables_to_json(const Tables& t) {
  nlohmann::json out;
  out["table1"] = nlohmann::json::array();
  for (const Table1Row& r : t.table1) {
    nlohmann::json row{{"no", r.index}, {"edges", r.edges}};
    row["sp_dual"] = r.sp_dual ? nlohmann::json(*r.sp_dual) : nlohmann::json();
    if (r.build) {
      row["built"] = {{"op", r.build->op == Connection::Series ? "S" : "P"},
                      {"left", r.build->left},
                      {"right", r.build->right}};
    } else {
      row["built"] = nullptr;
    }
    row["params"] = params_to_json(r.params);
    out["table1"].push_back(row);
  }
  out["table2"] = nlohmann::json::array();
  for (const auto& row : t.table2) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : row) cells.push_back(table2_text(c));
    out["table2"].push_back(cells);
  }
  nlohmann::json series = nlohmann::json::array(), parallel = series;
  for (const auto& c : t.self_series) series.push_back(cell_text(c));
  for (const auto& c : t.self_parallel) parallel.push_back(cell_text(c));
  out["table3"] = {{"series", series}, {"parallel", parallel}};
  return out;
}

inline Tables tables_from_json(const nlohmann::json& j) {
  Tables t;
  for (const auto& row : j.at("table1")) {
    Table1Row r;
    r.index = row.at("no").get<int>();
    r.edges = row.at("edges").get<int>();
    if (!row.at("sp_dual").is_null()) r.sp_dual = row.at("sp_dual").get<int>();
    if (const auto& b = row.at("built"); !b.is_null()) {
      r.build = Build{b.at("op").get<std::string>() == "S" ? Connection::Series
                                                           : Connection::Parallel,
                      b.at("left").get<int>(), b.at("right").get<int>()};
    }
    r.params = params_from_json(row.at("params"));
    t.table1.push_back(std::move(r));
  }
  auto cell = [](const nlohmann::json& c) {
    auto parsed = reference::parse_cell(c.get<std::string>());
    if (!parsed) throw std::invalid_argument("bad table cell");
    return *parsed;
  };
  for (const auto& row : j.at("table2")) {
    auto& out = t.table2.emplace_back();
    for (const auto& c : row) {
      if (c.get<std::string>() == "-") {
        out.push_back(std::nullopt);
      } else {
        out.push_back(cell(c));
      }
    }
  }
  for (const auto& c : j.at("table3").at("series")) t.self_series.push_back(cell(c));
  for (const auto& c : j.at("table3").at("parallel")) {
    t.self_parallel.push_back(cell(c));
  }
  return t;
}

inline void write_table1_csv(std::ostream& os, const Tables& t) {
  os << "no,edges,sp_dual,built,tau,tau2,alpha,alpha2,alpha2star,alphastar\n";
  for (const Table1Row& r : t.table1) {
    os << r.index << ',' << r.edges << ',' << optional_text(r.sp_dual) << ','
       << build_text(r.build);
    for (const BigInt& v : r.params.to_array()) os << ',' << v;
    os << '\n';
  }
}

inline void write_table2_csv(std::ostream& os, const Tables& t) {
  for (std::size_t c = 0; c < t.table2.size(); ++c) os << ',' << c;
  os << '\n';
  for (std::size_t r = 0; r < t.table2.size(); ++r) {
    os << r;
    for (const auto& c : t.table2[r]) os << ',' << table2_text(c);
    os << '\n';
  }
}

inline void write_table3_csv(std::ostream& os, const Tables& t) {
  os << "G";
  for (std::size_t c = 0; c < t.self_series.size(); ++c) os << ',' << c;
  os << "\nseries";
  for (const auto& c : t.self_series) os << ',' << cell_text(c);
  os << "\nparallel";
  for (const auto& c : t.self_parallel) os << ',' << cell_text(c);
  os << '\n';
}

inline void write_tables_text(std::ostream& os, const Tables& t) {
  os << "Survivors\n";
  os << std::setw(4) << "No." << std::setw(7) << "Edges" << std::setw(9)
     << "sp-dual" << std::setw(12) << "Built";
  for (const char* h : {"tau", "tau2", "alpha", "alpha2", "alpha2*", "alpha*"}) {
    os << std::setw(9) << h;
  }
  os << '\n';
  for (const Table1Row& r : t.table1) {
    // "⊕" is three bytes but one column wide.
    const std::string built = build_text(r.build);
    const int pad = r.build ? 12 + 2 : 12;
    os << std::setw(4) << r.index << std::setw(7) << r.edges << std::setw(9)
       << optional_text(r.sp_dual) << std::setw(pad) << built;
    for (const BigInt& v : r.params.to_array()) os << std::setw(9) << v;
    os << '\n';
  }

  os << "\nPairs (series above the diagonal, parallel below)\n    ";
  for (std::size_t c = 0; c < t.table2.size(); ++c) os << std::setw(4) << c;
  os << '\n';
  for (std::size_t r = 0; r < t.table2.size(); ++r) {
    os << std::setw(4) << r;
    for (const auto& c : t.table2[r]) os << std::setw(4) << table2_text(c);
    os << '\n';
  }

  os << "\nSelf-combinations\n" << std::setw(8) << "G";
  for (std::size_t c = 0; c < t.self_series.size(); ++c) os << std::setw(4) << c;
  os << '\n' << std::setw(8) << "G+S G";
  for (const auto& c : t.self_series) os << std::setw(4) << cell_text(c);
  os << '\n' << std::setw(8) << "G+P G";
  for (const auto& c : t.self_parallel) os << std::setw(4) << cell_text(c);
  os << '\n';
}

}  // namespace mwsp
