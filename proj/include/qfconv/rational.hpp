#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qfconv {

// Exact rational arithmetic. Every combinatorial and series identity in this
// library is decided over Q; floating point only enters the measure-theoretic
// modules.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// "3", "-3/2" — no spaces, denominator omitted when 1.
inline std::string rat_str(const Rat& r) { return r.str(); }

// Accepts "n", "n/d", and plain decimals like "-0.25" (parsed exactly).
inline Rat rat_parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    BigInt num(std::string(s.substr(0, slash)));
    BigInt den(std::string(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  }
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) return Rat(BigInt(std::string(s)));
  std::string digits(s.substr(0, dot));
  std::string frac(s.substr(dot + 1));
  if (frac.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad decimal literal");
  const bool neg = !digits.empty() && digits[0] == '-';
  BigInt whole = digits.empty() || digits == "-" || digits == "+"
                     ? BigInt(0)
                     : boost::multiprecision::abs(BigInt(digits));
  BigInt den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  BigInt num = whole * den + (frac.empty() ? BigInt(0) : BigInt(frac));
  if (neg) num = -num;
  return Rat(num, den);
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;
  }
  return b;
}

}  // namespace qfconv
