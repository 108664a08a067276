#include "qfconv/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qfconv::laurent {

namespace {

// Shifted truncation with kExact acting as +infinity.
int sat_add(int t, int shift) {
  if (t >= LaurentSeries::kExact || shift >= LaurentSeries::kExact)
    return LaurentSeries::kExact;
  return t + shift;
}

}  // namespace

LaurentSeries::LaurentSeries(const Poly& c, int exponent, int trunc)
    : lo_(exponent), trunc_(trunc) {
  if (trunc_ < exponent && !c.is_zero())
    throw std::domain_error("laurent: term beyond its own truncation");
  if (!c.is_zero()) coeffs_.push_back(c);
  normalize();
}

LaurentSeries LaurentSeries::zero_truncated(int trunc) {
  LaurentSeries s;
  s.trunc_ = trunc;
  return s;
}

void LaurentSeries::normalize() {
  // Anything recorded above the truncation is not actually known.
  while (!coeffs_.empty() &&
         lo_ + static_cast<int>(coeffs_.size()) - 1 > trunc_)
    coeffs_.pop_back();
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  while (!coeffs_.empty() && coeffs_.front().is_zero()) {
    coeffs_.erase(coeffs_.begin());
    ++lo_;
  }
  if (coeffs_.empty()) lo_ = 0;
}

int LaurentSeries::lowest() const {
  if (coeffs_.empty())
    throw std::logic_error("laurent: valuation of a zero series");
  return lo_;
}

int LaurentSeries::window_valuation() const {
  return coeffs_.empty() ? sat_add(trunc_, 1) : lo_;
}

Poly LaurentSeries::coeff(int e) const {
  if (e > trunc_)
    throw std::out_of_range("laurent: coefficient beyond truncation window");
  if (coeffs_.empty() || e < lo_ ||
      e >= lo_ + static_cast<int>(coeffs_.size()))
    return Poly();
  return coeffs_[static_cast<std::size_t>(e - lo_)];
}

bool LaurentSeries::pole_free() const {
  if (trunc_ < -1)
    throw std::out_of_range("laurent: poles not fully resolved");
  for (int e = lo_; e < 0 && e < lo_ + static_cast<int>(coeffs_.size()); ++e)
    if (!coeffs_[static_cast<std::size_t>(e - lo_)].is_zero()) return false;
  return true;
}

LaurentSeries LaurentSeries::pole_part() const {
  LaurentSeries r;
  // Exponents >= 0 of the projection are exactly zero, so the result is
  // exact once every pole coefficient is resolved.
  r.trunc_ = trunc_ >= -1 ? kExact : trunc_;
  for (int e = lo_; e < 0 && e < lo_ + static_cast<int>(coeffs_.size()); ++e) {
    if (r.coeffs_.empty()) r.lo_ = e;
    r.coeffs_.push_back(coeffs_[static_cast<std::size_t>(e - lo_)]);
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::eval_scale_log(const Rat& value) const {
  LaurentSeries r;
  r.lo_ = lo_;
  r.trunc_ = trunc_;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(Poly(c.eval(value)));
  r.normalize();
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  const int trunc = std::min(trunc_, o.trunc_);
  LaurentSeries r;
  r.trunc_ = trunc;
  if (!coeffs_.empty() || !o.coeffs_.empty()) {
    int lo = std::min(window_valuation(), o.window_valuation());
    int hi = lo - 1;
    if (!coeffs_.empty())
      hi = std::max(hi, lo_ + static_cast<int>(coeffs_.size()) - 1);
    if (!o.coeffs_.empty())
      hi = std::max(hi, o.lo_ + static_cast<int>(o.coeffs_.size()) - 1);
    hi = std::min(hi, trunc);
    if (hi >= lo) {
      r.lo_ = lo;
      r.coeffs_.assign(static_cast<std::size_t>(hi - lo) + 1, Poly());
      auto accumulate = [&](const LaurentSeries& s) {
        for (int e = s.lo_;
             e < s.lo_ + static_cast<int>(s.coeffs_.size()) && e <= hi; ++e)
          r.coeffs_[static_cast<std::size_t>(e - lo)] +=
              s.coeffs_[static_cast<std::size_t>(e - s.lo_)];
      };
      accumulate(*this);
      accumulate(o);
    }
  }
  r.normalize();
  return *this = r;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
  return *this += -o;
}

LaurentSeries operator-(LaurentSeries a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const int va = a.window_valuation();
  const int vb = b.window_valuation();
  const int trunc = std::min(sat_add(a.trunc_, vb), sat_add(b.trunc_, va));
  LaurentSeries r;
  r.trunc_ = trunc;
  if (a.coeffs_.empty() || b.coeffs_.empty()) {
    // Product of a known-zero with anything stays known-zero on the window;
    // when the window collapses entirely there is nothing to represent.
    return r;
  }
  const int lo = va + vb;
  if (trunc < lo)
    throw std::domain_error("laurent: empty truncation window in product");
  const int hi =
      std::min(trunc, lo + static_cast<int>(a.coeffs_.size()) +
                          static_cast<int>(b.coeffs_.size()) - 2);
  r.lo_ = lo;
  r.coeffs_.assign(static_cast<std::size_t>(hi - lo) + 1, Poly());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      const int e = a.lo_ + static_cast<int>(i) + b.lo_ + static_cast<int>(j);
      if (e <= hi)
        r.coeffs_[static_cast<std::size_t>(e - lo)] +=
            a.coeffs_[i] * b.coeffs_[j];
    }
  r.normalize();
  return r;
}

LaurentSeries operator*(const Rat& s, const LaurentSeries& a) {
  LaurentSeries r = a;
  for (auto& c : r.coeffs_) c *= s;
  r.normalize();
  return r;
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
  const int trunc = std::min(trunc_, o.trunc_);
  if (coeffs_.empty() && o.coeffs_.empty()) return true;
  int lo = std::min(window_valuation(), o.window_valuation());
  int hi = lo - 1;
  if (!coeffs_.empty())
    hi = std::max(hi, lo_ + static_cast<int>(coeffs_.size()) - 1);
  if (!o.coeffs_.empty())
    hi = std::max(hi, o.lo_ + static_cast<int>(o.coeffs_.size()) - 1);
  hi = std::min(hi, trunc);
  for (int e = lo; e <= hi; ++e)
    if (!(coeff(e) == o.coeff(e))) return false;
  return true;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.trunc_ == b.trunc_ && a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int e = lo_; e < lo_ + static_cast<int>(coeffs_.size()); ++e) {
    const Poly& c = coeffs_[static_cast<std::size_t>(e - lo_)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string cs = c.str();
    if (e == 0) {
      os << cs;
    } else {
      if (cs == "1") {
      } else if (cs.find(' ') != std::string::npos || cs[0] == '-') {
        os << "(" << cs << ")*";
      } else {
        os << cs << "*";
      }
      os << "eps";
      if (e != 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  if (trunc_ != kExact) os << " + O(eps^" << trunc_ + 1 << ")";
  return os.str();
}

std::string LaurentSeries::json() const {
  std::ostringstream os;
  os << "{\"truncation\":";
  if (trunc_ == kExact)
    os << "\"exact\"";
  else
    os << trunc_;
  os << ",\"terms\":{";
  bool first = true;
  for (int e = lo_; e < lo_ + static_cast<int>(coeffs_.size()); ++e) {
    const Poly& c = coeffs_[static_cast<std::size_t>(e - lo_)];
    if (c.is_zero()) continue;
    if (!first) os << ",";
    first = false;
    os << "\"" << e << "\":{";
    bool f2 = true;
    for (int k = 0; k <= c.degree(); ++k) {
      if (c.coeff(k) == 0) continue;
      if (!f2) os << ",";
      f2 = false;
      os << "\"" << k << "\":\"" << rat_str(c.coeff(k)) << "\"";
    }
    os << "}";
  }
  os << "}}";
  return os.str();
}

LaurentSeries exp_eps_log(const Rat& c, int order) {
  if (order < 0) throw std::invalid_argument("exp_eps_log: negative order");
  LaurentSeries r = LaurentSeries::zero_truncated(order);
  Rat ck = 1;        // c^k
  BigInt kfact = 1;  // k!
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      ck *= c;
      kfact *= k;
    }
    r += LaurentSeries(Poly::monomial(ck / Rat(kfact), k), k, order);
  }
  return r;
}

}  // namespace qfconv::laurent
