#pragma once

// The three inequality variants and the sufficient test for replaceability,
// all in exact arithmetic.

#include "bigint.hpp"
#include "param_vec.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwsp {

struct MWStatus {
  BigInt tau;
  BigInt alpha;
  BigInt alphastar;
  bool holds_multiplicative = false;  // alpha * alpha* >= tau^2
  bool holds_additive = false;        // alpha + alpha* >= 2 tau
  bool holds_max = false;             // max(alpha, alpha*) >= tau
};

inline MWStatus mw_status(const BigInt& tau, const BigInt& alpha,
                          const BigInt& alphastar) {
  if (tau < 0 || alpha < 0 || alphastar < 0) {
    throw std::domain_error("mw_status: negative count");
  }
  MWStatus s{tau, alpha, alphastar};
  s.holds_multiplicative = alpha * alphastar >= tau * tau;
  s.holds_additive = alpha + alphastar >= 2 * tau;
  s.holds_max = std::max(alpha, alphastar) >= tau;
  return s;
}

/// alpha l^2 - 2 tau l + alpha* >= 0 for all real l, via its discriminant.
inline bool discriminant_nonpositive(const BigInt& tau, const BigInt& alpha,
                                     const BigInt& alphastar) {
  if (tau < 0 || alpha < 0 || alphastar < 0) {
    throw std::domain_error("discriminant_nonpositive: negative count");
  }
  return 4 * tau * tau - 4 * alpha * alphastar <= 0;
}

struct ReplaceTest {
  Rational t1;  // worst growth of the tree counts
  Rational t2;  // least growth of the acyclic counts
  Rational t3;  // least growth of the cyclic counts
  bool replaceable = false;
};

/// Checks t1^2 <= t2 * t3 where g is the graph to replace and h the
/// replacement. The alpha2 ratio is skipped when alpha2(h) = 0 and the
/// alpha* ratio when alpha*(h) = 0.
inline ReplaceTest replace_test(const ParamVec& g, const ParamVec& h) {
  if (h.tau < 1 || h.tau2 < 1 || h.alpha < 1 || h.alpha2star < 1) {
    throw std::domain_error("replaces: replacement has a zero denominator");
  }
  ReplaceTest r;
  r.t1 = std::max(Rational(g.tau, h.tau), Rational(g.tau2, h.tau2));
  r.t2 = Rational(g.alpha, h.alpha);
  if (h.alpha2 != 0) r.t2 = std::min(r.t2, Rational(g.alpha2, h.alpha2));
  r.t3 = Rational(g.alpha2star, h.alpha2star);
  if (h.alphastar != 0) {
    r.t3 = std::min(r.t3, Rational(g.alphastar, h.alphastar));
  }
  r.replaceable = r.t1 * r.t1 <= r.t2 * r.t3;
  return r;
}

inline bool replaces(const ParamVec& g, const ParamVec& h) {
  return replace_test(g, h).replaceable;
}

}  // namespace mwsp
