#include "support.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace mwsp {
namespace {

const Tables& tables() {
  static const Tables t = emit_tables(testing::reference_survivors());
  return t;
}

TEST(Cells, TextForms) {
  EXPECT_EQ(cell_text(InTable{14}), "=14");
  EXPECT_EQ(cell_text(NonExtendable{}), "N");
  EXPECT_EQ(cell_text(Reducible{6}), "6");
  EXPECT_EQ(cell_text(Unresolved{}), "?");
  for (std::string_view s : {"=14", "N", "6", "?"}) {
    EXPECT_EQ(cell_text(*reference::parse_cell(s)), s);
  }
  EXPECT_FALSE(reference::parse_cell("x").has_value());
  EXPECT_FALSE(reference::parse_cell("=").has_value());
}

TEST(Json, RoundTrip) {
  const nlohmann::json j = tables_to_json(tables());
  const Tables back = tables_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(tables_to_json(back), j);
  EXPECT_EQ(j["table1"].size(), 19u);
  EXPECT_EQ(j["table1"][18]["params"], nlohmann::json::parse("[12,16,8,6,102,24]"));
  EXPECT_EQ(j["table2"][0][0], "-");
}

TEST(Json, LargeNumbersAsStrings) {
  const BigInt big = BigInt(1) << 80;
  const nlohmann::json j = bigint_to_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(bigint_from_json(j), big);
  EXPECT_THROW(params_from_json(nlohmann::json::array({1, 2})),
               std::invalid_argument);
}

TEST(Csv, Shapes) {
  std::ostringstream t1, t2, t3;
  write_table1_csv(t1, tables());
  write_table2_csv(t2, tables());
  write_table3_csv(t3, tables());
  const auto lines = [](const std::string& s) {
    return std::count(s.begin(), s.end(), '\n');
  };
  EXPECT_EQ(lines(t1.str()), 20);
  EXPECT_EQ(lines(t2.str()), 20);
  EXPECT_EQ(lines(t3.str()), 3);
  EXPECT_NE(t1.str().find("18,7,17,1 ⊕_S 11,12,16,8,6,102,24"), std::string::npos);
}

TEST(Text, UsesTableCellSyntax) {
  std::ostringstream os;
  write_tables_text(os, tables());
  const std::string s = os.str();
  EXPECT_NE(s.find(" N"), std::string::npos);
  EXPECT_NE(s.find("=14"), std::string::npos);
  EXPECT_EQ(s.find('?'), std::string::npos);
}

}  // namespace
}  // namespace mwsp
