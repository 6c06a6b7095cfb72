#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "stgr/errors.hpp"

namespace stgr {

// Exact rational with int64 numerator/denominator, always normalized
// (den > 0, gcd(|num|, den) == 1). All quality comparisons in the solver
// and evaluator go through this type; no floating point anywhere.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }
  explicit Rational(std::int64_t n) : num(n), den(1) {}

  void normalize() {
    if (den == 0) throw error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline int cmp(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

inline bool operator==(const Rational& a, const Rational& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Rational& a, const Rational& b) { return cmp(a, b) != 0; }
inline bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
inline bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

// floor(r * x) for integer x >= 0, exact.
inline std::int64_t floor_mul(const Rational& r, std::int64_t x) {
  __int128 p = static_cast<__int128>(r.num) * x;
  __int128 q = r.den;
  __int128 f = p / q;
  if (p % q != 0 && p < 0) --f;
  return static_cast<std::int64_t>(f);
}

// Parses "p" or "p/q". Used by the CLI for --alpha style flags.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&] { return error("invalid rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t pos = 0;
      std::int64_t n = std::stoll(s, &pos);
      if (pos != s.size()) throw bad();
      return Rational(n);
    }
    std::size_t pos = 0;
    std::int64_t n = std::stoll(s.substr(0, slash), &pos);
    if (pos != slash) throw bad();
    std::int64_t d = std::stoll(s.substr(slash + 1), &pos);
    if (pos != s.size() - slash - 1) throw bad();
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
}

}  // namespace stgr
