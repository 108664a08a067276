#pragma once

#include "qfconv/rational.hpp"

#include <string>
#include <vector>

namespace qfconv {

// Polynomial in the formal scale logarithm L with exact rational
// coefficients. Carrying L symbolically keeps every finiteness statement a
// statement about exact polynomials instead of floats.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c) {  // NOLINT: implicit by design, constants embed
    if (c != 0) c_.push_back(c);
  }
  Poly(int c) : Poly(Rat(c)) {}  // NOLINT

  static Poly variable() { return monomial(1, 1); }
  static Poly monomial(const Rat& c, int power) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(power) + 1, Rat(0));
    p.c_.back() = c;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(k)];
  }
  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  Rat constant_term() const { return coeff(0); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  friend Poly operator*(const Rat& s, Poly p) { return p *= s; }
  friend Poly operator*(Poly p, const Rat& s) { return p *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // "0", "1/2", "-L", "1/2*L^2 + L"; highest power first.
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rat c = coeff(k);
      if (c == 0) continue;
      const bool neg = c < 0;
      const Rat a = neg ? Rat(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const bool unit = a == 1 && k > 0;
      if (!unit) out += rat_str(a);
      if (k > 0) {
        if (!unit) out += "*";
        out += "L";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  std::vector<Rat> c_;  // c_[k] multiplies L^k; no trailing zeros

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

}  // namespace qfconv
