#pragma once

// The six counts carried through series and parallel connection:
//   tau        spanning trees
//   tau2       2-forests separating source from sink
//   alpha      acyclic orientations
//   alpha2     acyclic orientations with no directed terminal-to-terminal path
//   alpha2star orientations where every edge is on a directed cycle or on a
//              directed path between the terminals
//   alphastar  totally cyclic orientations

#include "bigint.hpp"

#include <array>
#include <ostream>
#include <string>

namespace mwsp {

struct ParamVec {
  BigInt tau;
  BigInt tau2;
  BigInt alpha;
  BigInt alpha2;
  BigInt alpha2star;
  BigInt alphastar;

  std::array<BigInt, 6> to_array() const {
    return {tau, tau2, alpha, alpha2, alpha2star, alphastar};
  }
  static ParamVec from_array(const std::array<BigInt, 6>& a) {
    return {a[0], a[1], a[2], a[3], a[4], a[5]};
  }

  friend bool operator==(const ParamVec&, const ParamVec&) = default;
};

inline std::string to_string(const ParamVec& p) {
  std::string out = "(";
  const auto a = p.to_array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += a[i].str();
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const ParamVec& p) {
  return os << to_string(p);
}

/// Invariants every vector produced by the algebra satisfies.
inline bool well_formed(const ParamVec& p) {
  for (const BigInt& v : p.to_array()) {
    if (v < 0) return false;
  }
  const BigInt da = p.alpha - p.alpha2;
  const BigInt dc = p.alpha2star - p.alphastar;
  return da >= 0 && dc >= 0 && da % 2 == 0 && dc % 2 == 0;
}

inline ParamVec k2_params() { return {1, 1, 2, 0, 2, 0}; }

namespace detail {
// x*y - (x-x2)(y-y2)/2, the count shared by the series and parallel rules.
inline BigInt merged_count(const BigInt& x, const BigInt& x2, const BigInt& y,
                           const BigInt& y2) {
  return x * y - exact_half((x - x2) * (y - y2));
}
}  // namespace detail

/// Parameters of the series connection (sink of a glued to source of b).
inline ParamVec ser(const ParamVec& a, const ParamVec& b) {
  return {
      a.tau * b.tau,
      a.tau * b.tau2 + a.tau2 * b.tau,
      a.alpha * b.alpha,
      detail::merged_count(a.alpha, a.alpha2, b.alpha, b.alpha2),
      detail::merged_count(a.alpha2star, a.alphastar, b.alpha2star,
                           b.alphastar),
      a.alphastar * b.alphastar,
  };
}

/// Parameters of the parallel connection (terminals identified pairwise).
inline ParamVec par(const ParamVec& a, const ParamVec& b) {
  return {
      a.tau * b.tau2 + a.tau2 * b.tau,
      a.tau2 * b.tau2,
      detail::merged_count(a.alpha, a.alpha2, b.alpha, b.alpha2),
      a.alpha2 * b.alpha2,
      a.alpha2star * b.alpha2star,
      detail::merged_count(a.alpha2star, a.alphastar, b.alpha2star,
                           b.alphastar),
  };
}

/// Parameters of the sp-dual (series and parallel nodes exchanged).
inline ParamVec spdual(const ParamVec& a) {
  return {a.tau2, a.tau, a.alpha2star, a.alphastar, a.alpha, a.alpha2};
}

}  // namespace mwsp
