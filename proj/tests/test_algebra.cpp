#include "support.hpp"

#include <gtest/gtest.h>

namespace mwsp {
namespace {

using testing::P;

TEST(ParamVec, K2) {
  EXPECT_EQ(k2_params(), (ParamVec{1, 1, 2, 0, 2, 0}));
  EXPECT_TRUE(well_formed(k2_params()));
  EXPECT_EQ(to_string(k2_params()), "(1,1,2,0,2,0)");
}

TEST(ParamVec, SeriesAndParallelOfK2) {
  EXPECT_EQ(par(k2_params(), k2_params()), (ParamVec{2, 1, 2, 0, 4, 2}));
  EXPECT_EQ(ser(k2_params(), k2_params()), (ParamVec{1, 2, 4, 2, 2, 0}));
}

TEST(ParamVec, TableRowsFromConstructionRecipe) {
  const ParamVec g0 = k2_params();
  const ParamVec g1 = par(g0, g0), g2 = ser(g0, g0);
  const ParamVec g7 = ser(g1, g1);
  const ParamVec g5 = par(g0, g1);
  const ParamVec g11 = ser(g1, g5);
  const ParamVec g18 = ser(g1, g11);
  EXPECT_EQ(g7, (ParamVec{4, 4, 4, 2, 14, 4}));
  EXPECT_EQ(g18, (ParamVec{12, 16, 8, 6, 102, 24}));
  EXPECT_EQ(par(g2, g2), (ParamVec{4, 4, 14, 4, 4, 2}));
}

TEST(ParamVec, OddDifferenceThrows) {
  EXPECT_THROW(exact_half(BigInt(3)), std::domain_error);
  EXPECT_EQ(exact_half(BigInt(-4)), -2);
  const ParamVec odd{2, 1, 2, 0, 4, 2};
  const ParamVec bad{2, 1, 3, 0, 4, 2};
  EXPECT_FALSE(well_formed(bad));
  EXPECT_TRUE(well_formed(odd));
  EXPECT_THROW(ser(bad, ParamVec{2, 1, 3, 0, 4, 2}), std::domain_error);
}

TEST(ParamVec, SpDualSwapsFields) {
  EXPECT_EQ(spdual(ParamVec{1, 2, 3, 4, 5, 6}), (ParamVec{2, 1, 5, 6, 3, 4}));
  EXPECT_EQ(spdual(spdual(ParamVec{1, 2, 3, 4, 5, 6})), (ParamVec{1, 2, 3, 4, 5, 6}));
}

TEST(Parser, AcceptsGrammar) {
  EXPECT_EQ(parse_expr("K"), DecompTree::leaf());
  EXPECT_EQ(to_expr(parse_expr(" S( K , P(K,K) ) ")), "S(K,P(K,K))");
  EXPECT_EQ(parse_expr("P(K,K,K)").children().size(), 3u);
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_expr("K("), ParseError);
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("X"), ParseError);
  EXPECT_THROW(parse_expr("S(K,K"), ParseError);
  try {
    parse_expr("S(P(K),K)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Tree, EvalMatchesTableRows) {
  EXPECT_EQ(P("P(K,K)"), (ParamVec{2, 1, 2, 0, 4, 2}));
  EXPECT_EQ(P("S(P(K,K),P(K,K))"), (ParamVec{4, 4, 4, 2, 14, 4}));
  // Flattened and nested forms agree.
  EXPECT_EQ(P("S(K,K,K)"), P("S(K,S(K,K))"));
}

TEST(Tree, RealizeShape) {
  const TwoTerminalGraph g = realize(parse_expr("S(K,P(K,K))"));
  EXPECT_EQ(g.graph().num_edges(), 3);
  EXPECT_EQ(g.graph().num_vertices(), 3);
  EXPECT_EQ(g.source(), 0);
  EXPECT_EQ(g.sink(), 1);
}

TEST(Tree, DualAndReverseAreInvolutions) {
  for (const DecompTree& t : testing::trees_up_to(6)) {
    EXPECT_EQ(canonical(dual_tree(dual_tree(t))), t);
    EXPECT_EQ(canonical(reverse_tree(reverse_tree(t))), t);
    EXPECT_EQ(eval_tree(reverse_tree(t)), eval_tree(t));
  }
}

TEST(Tree, EnumerationCountsAndUniqueness) {
  // Two-terminal series-parallel networks up to reversal, counted by brute
  // isomorphism testing below for small sizes.
  for (int m = 1; m <= 5; ++m) {
    const auto trees = enumerate_trees(m);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      EXPECT_EQ(trees[i].leaf_count(), m);
      EXPECT_EQ(canonical(trees[i]), trees[i]);
      for (std::size_t j = i + 1; j < trees.size(); ++j) {
        EXPECT_FALSE(two_terminal_isomorphic(realize(trees[i]), realize(trees[j])))
            << to_expr(trees[i]) << " vs " << to_expr(trees[j]);
      }
    }
  }
  EXPECT_EQ(enumerate_trees(1).size(), 1u);
  EXPECT_EQ(enumerate_trees(2).size(), 2u);
}

TEST(Tree, CanonicalIdentifiesIsomorphicRealizations) {
  // The pair that one-node-at-a-time reversal would conflate.
  const DecompTree a = parse_expr("P(S(P(K,K),K),S(P(K,K),K))");
  const DecompTree b = parse_expr("P(S(P(K,K),K),S(K,P(K,K)))");
  EXPECT_NE(canonical(a), canonical(b));
  EXPECT_FALSE(two_terminal_isomorphic(realize(a), realize(b)));
  EXPECT_EQ(canonical(a), canonical(reverse_tree(a)));
}

}  // namespace
}  // namespace mwsp
