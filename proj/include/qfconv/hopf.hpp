#pragma once

#include "qfconv/rational.hpp"
#include "qfconv/tree.hpp"

#include <map>
#include <utility>

namespace qfconv::hopf {

// Finite Q-linear combination of forests. Zero coefficients are never stored.
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(const Forest& f, const Rat& c = 1) { add(f, c); }

  static LinComb unit() { return LinComb(Forest()); }

  void add(const Forest& f, const Rat& c);
  Rat coefficient(const Forest& f) const;
  const std::map<Forest, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LinComb& operator+=(const LinComb& o);
  LinComb& operator-=(const LinComb& o);
  LinComb& operator*=(const Rat& s);
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rat& s, LinComb a) { return a *= s; }
  // Bilinear extension of the forest product.
  friend LinComb operator*(const LinComb& a, const LinComb& b);
  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  std::map<Forest, Rat> terms_;
};

// Element of H (x) H with rational coefficients.
class TensorLinComb {
 public:
  TensorLinComb() = default;

  void add(const Forest& left, const Forest& right, const Rat& c);
  Rat coefficient(const Forest& left, const Forest& right) const;
  const std::map<std::pair<Forest, Forest>, Rat>& terms() const {
    return terms_;
  }

  TensorLinComb& operator+=(const TensorLinComb& o);
  // Componentwise product (a(x)b)(c(x)d) = ac (x) bd, bilinear.
  friend TensorLinComb operator*(const TensorLinComb& a,
                                 const TensorLinComb& b);
  friend bool operator==(const TensorLinComb& a, const TensorLinComb& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<std::pair<Forest, Forest>, Rat> terms_;
};

// Coproduct on rooted forests via admissible cuts,
//   D(t) = t(x)1 + 1(x)t + sum over proper cuts  (cut branches)(x)(trunk),
// extended multiplicatively to forests.
TensorLinComb coproduct(const Tree& t);
TensorLinComb coproduct(const Forest& f);

// Coefficient of the empty forest.
Rat counit(const LinComb& x);
inline Rat counit(const Forest& f) { return f.empty() ? 1 : 0; }

// Antipode: S(1) = 1 and S(x) = -x - sum S(branches) * trunk over the
// reduced coproduct. Multiplicative on forests.
LinComb antipode(const Forest& f);
inline LinComb antipode(const Tree& t) { return antipode(Forest(t)); }

// Convolution f * g evaluated at x: sum over D(x) of f(left) * g(right).
// A must be a commutative algebra with Rat scalar action (Rat itself,
// LinComb, or laurent::LaurentSeries).
template <typename A, typename F, typename G>
A convolve(F&& f, G&& g, const Forest& x) {
  A acc{};
  for (const auto& [pair, c] : coproduct(x).terms())
    acc += c * (f(pair.first) * g(pair.second));
  return acc;
}

}  // namespace qfconv::hopf
