#include "qfconv/hopf.hpp"

#include <sstream>

namespace qfconv::hopf {

void LinComb::add(const Forest& f, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat LinComb::coefficient(const Forest& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? Rat(0) : it->second;
}

LinComb& LinComb::operator+=(const LinComb& o) {
  for (const auto& [f, c] : o.terms_) add(f, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
  for (const auto& [f, c] : o.terms_) add(f, -c);
  return *this;
}

LinComb& LinComb::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, c] : terms_) c *= s;
  return *this;
}

LinComb operator*(const LinComb& a, const LinComb& b) {
  LinComb r;
  for (const auto& [fa, ca] : a.terms_)
    for (const auto& [fb, cb] : b.terms_)
      r.add(forest_mul(fa, fb), ca * cb);
  return r;
}

std::string LinComb::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1 || f.empty()) os << rat_str(c) << "*";
    if (!f.empty()) os << f.encoding();
    else if (c == 1) os << "1";
  }
  return os.str();
}

void TensorLinComb::add(const Forest& left, const Forest& right,
                        const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(left, right);
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat TensorLinComb::coefficient(const Forest& left, const Forest& right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? Rat(0) : it->second;
}

TensorLinComb& TensorLinComb::operator+=(const TensorLinComb& o) {
  for (const auto& [p, c] : o.terms_) add(p.first, p.second, c);
  return *this;
}

TensorLinComb operator*(const TensorLinComb& a, const TensorLinComb& b) {
  TensorLinComb r;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_)
      r.add(forest_mul(pa.first, pb.first), forest_mul(pa.second, pb.second),
            ca * cb);
  return r;
}

TensorLinComb coproduct(const Tree& t) {
  // D(B+(c1..ck)) = B+(c1..ck)(x)1 + (id(x)B+)(prod_i D(ci)).
  TensorLinComb body;
  body.add(Forest(), Forest(), 1);
  for (const Tree& c : t.children()) body = body * coproduct(c);
  TensorLinComb r;
  r.add(Forest(t), Forest(), 1);
  for (const auto& [p, c] : body.terms())
    r.add(p.first, Forest(Tree(p.second.trees())), c);
  return r;
}

TensorLinComb coproduct(const Forest& f) {
  TensorLinComb r;
  r.add(Forest(), Forest(), 1);
  for (const Tree& t : f.trees()) r = r * coproduct(t);
  return r;
}

Rat counit(const LinComb& x) { return x.coefficient(Forest()); }

namespace {

LinComb antipode_impl(const Forest& f, std::map<Forest, LinComb>& memo) {
  if (f.empty()) return LinComb::unit();
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  LinComb s(f, -1);
  for (const auto& [p, c] : coproduct(f).terms()) {
    if (p.first.empty() || p.second.empty()) continue;
    s -= c * (antipode_impl(p.first, memo) * LinComb(p.second));
  }
  memo.emplace(f, s);
  return s;
}

}  // namespace

LinComb antipode(const Forest& f) {
  std::map<Forest, LinComb> memo;
  return antipode_impl(f, memo);
}

}  // namespace qfconv::hopf
