#pragma once

#include "qfconv/poly.hpp"

#include <string>
#include <vector>

namespace qfconv::laurent {

using qfconv::Poly;
using qfconv::Rat;

// Truncated Laurent series in the regulator eps, coefficients in Q[L].
//
// A series knows its coefficients exactly for every exponent <= truncation();
// everything above is an unresolved O(eps^{truncation+1}) tail. Series built
// from constants, monomials or pole projections carry no tail at all and
// report truncation() == kExact. Binary operations propagate the window
// pessimistically, so a coefficient can be read back iff it is genuinely
// determined by the inputs.
class LaurentSeries {
 public:
  static constexpr int kExact = 1 << 20;

  LaurentSeries() = default;  // exact zero
  explicit LaurentSeries(const Rat& c) : LaurentSeries(Poly(c), 0) {}
  explicit LaurentSeries(const Poly& c) : LaurentSeries(c, 0) {}
  LaurentSeries(const Poly& c, int exponent, int trunc = kExact);

  static LaurentSeries one() { return LaurentSeries(Rat(1)); }
  static LaurentSeries monomial(const Poly& c, int exponent,
                                int trunc = kExact) {
    return LaurentSeries(c, exponent, trunc);
  }
  // The zero series known only up to eps^trunc.
  static LaurentSeries zero_truncated(int trunc);

  int truncation() const { return trunc_; }
  bool is_exact() const { return trunc_ == kExact; }
  // True when every *known* coefficient vanishes.
  bool known_zero() const { return coeffs_.empty(); }
  // Valuation of the known part; throws when known_zero().
  int lowest() const;

  // Exact coefficient of eps^e; throws std::out_of_range beyond truncation().
  Poly coeff(int e) const;
  // All strictly negative exponents carry a zero coefficient.
  bool pole_free() const;

  // Keeps exponents < 0 only (the minimal-subtraction projector T).
  LaurentSeries pole_part() const;
  // Substitutes a rational value for the formal symbol L.
  LaurentSeries eval_scale_log(const Rat& value) const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) {
    return a += b;
  }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) {
    return a -= b;
  }
  friend LaurentSeries operator-(LaurentSeries a);
  friend LaurentSeries operator*(const LaurentSeries& a,
                                 const LaurentSeries& b);
  friend LaurentSeries operator*(const Rat& s, const LaurentSeries& a);
  friend LaurentSeries operator*(const LaurentSeries& a, const Rat& s) {
    return s * a;
  }

  // Coefficient-wise equality on the common window [-inf, min truncation].
  bool agrees_with(const LaurentSeries& o) const;
  // Strict: identical known coefficients and identical truncation.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  // "(-1/2)*eps^-2 + 1/2*L^2 + O(eps^3)"
  std::string str() const;
  // {"truncation": 3 | "exact", "terms": {"-2": {"0": "-1/2"}, ...}}
  std::string json() const;

 private:
  int lo_ = 0;                // exponent of coeffs_[0]
  std::vector<Poly> coeffs_;  // exponents lo_ .. lo_+size-1
  int trunc_ = kExact;

  void normalize();
  // Valuation used for window propagation: trunc_+1 when nothing is known to
  // be nonzero.
  int window_valuation() const;
};

// Minimal-subtraction projector as a free function (x -> pole part of x).
inline LaurentSeries pole_part(const LaurentSeries& x) { return x.pole_part(); }

// sum_{k=0..order} (c*L*eps)^k / k! — the expansion of a^{c*eps} with
// L = ln a kept formal. Truncation is `order`.
LaurentSeries exp_eps_log(const Rat& c, int order);

}  // namespace qfconv::laurent
