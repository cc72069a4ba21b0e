#include "support.hpp"

#include <gtest/gtest.h>

namespace mwsp {
namespace {

using testing::P;

TEST(MWStatus, DigonHoldsWithEquality) {
  const MWStatus s = mw_status(2, 2, 2);
  EXPECT_TRUE(s.holds_max);
  EXPECT_TRUE(s.holds_additive);
  EXPECT_TRUE(s.holds_multiplicative);
  EXPECT_TRUE(discriminant_nonpositive(2, 2, 2));
}

TEST(MWStatus, ThomassenSix) {
  const MWStatus s = mw_status(64, 62, 162);
  EXPECT_TRUE(s.holds_max);
  EXPECT_TRUE(s.holds_multiplicative);
  EXPECT_LT(s.alpha, s.tau);
}

TEST(MWStatus, VariantsAreNested) {
  for (int t = 0; t <= 12; ++t) {
    for (int a = 0; a <= 12; ++a) {
      for (int b = 0; b <= 12; ++b) {
        const MWStatus s = mw_status(t, a, b);
        if (s.holds_multiplicative) {
          EXPECT_TRUE(s.holds_additive);
        }
        if (s.holds_additive) {
          EXPECT_TRUE(s.holds_max);
        }
        EXPECT_EQ(s.holds_multiplicative, discriminant_nonpositive(t, a, b));
      }
    }
  }
  EXPECT_THROW(mw_status(-1, 0, 0), std::domain_error);
}

TEST(Replaces, K2ByDigonFails) {
  EXPECT_FALSE(replaces(k2_params(), P("P(K,K)")));
  const ReplaceTest r = replace_test(k2_params(), P("P(K,K)"));
  EXPECT_EQ(r.t1, Rational(1));
  EXPECT_EQ(r.t3, Rational(0));
}

TEST(Replaces, SelfReplacement) {
  EXPECT_TRUE(replaces(k2_params(), k2_params()));
  for (const Survivor& s : testing::reference_survivors()) {
    EXPECT_TRUE(replaces(s.params, s.params)) << s.index;
  }
}

TEST(Replaces, WorkedExample) {
  // G1 = P(K,K), G6 = S(K,K,K).
  const ReplaceTest r = replace_test(ser(P("P(K,K)"), P("S(K,K,K)")), P("S(K,K,K)"));
  EXPECT_TRUE(r.replaceable);
  EXPECT_EQ(r.t1, Rational(7, 3));
  EXPECT_EQ(r.t2, Rational(2));
  EXPECT_EQ(r.t3, Rational(3));
}

TEST(Replaces, ZeroRatiosAreSkipped) {
  // alpha2(h) = 0 and alpha*(h) = 0 for K2: only alpha and alpha2* count.
  const ReplaceTest r = replace_test(P("S(K,K)"), k2_params());
  EXPECT_EQ(r.t2, Rational(2));
  EXPECT_EQ(r.t3, Rational(1));
}

TEST(Replaces, ZeroDenominatorThrows) {
  EXPECT_THROW(replace_test(k2_params(), ParamVec{1, 0, 2, 0, 2, 0}),
               std::domain_error);
}

}  // namespace
}  // namespace mwsp
