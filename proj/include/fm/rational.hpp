// Exact extended rationals (p/q with infinity = 1/0) and continued-fraction
// expansions used by the rational-tangle machinery.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fm {

using i64 = std::int64_t;
using i128 = __int128;

inline i64 checked_i64(i128 v, const char* what) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    throw std::overflow_error(what);
  return static_cast<i64>(v);
}

// Extended rational number. Normal form: gcd(p,q)=1 and q>0, except
// infinity which is stored as 1/0. Zero is 0/1.
struct Fraction {
  i64 p = 0;
  i64 q = 1;

  Fraction() = default;
  Fraction(i64 num) : p(num), q(1) {}
  Fraction(i64 num, i64 den) : p(num), q(den) { normalize(); }

  void normalize() {
    if (q == 0) {
      if (p == 0) throw std::invalid_argument("Fraction 0/0");
      p = 1;
      return;
    }
    if (q < 0) { p = -p; q = -q; }
    i64 g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) { p /= g; q /= g; }
    if (p == 0) q = 1;
  }

  bool is_infinite() const { return q == 0; }
  bool is_integer() const { return q == 1; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.is_infinite() || b.is_infinite()) return Fraction(1, 0);
    i128 num = i128(a.p) * b.q + i128(b.p) * a.q;
    i128 den = i128(a.q) * b.q;
    return make_reduced(num, den);
  }
  friend Fraction operator-(const Fraction& a) {
    Fraction r = a;
    if (!r.is_infinite()) r.p = -r.p;
    return r;
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    i128 num = i128(a.p) * b.p;
    i128 den = i128(a.q) * b.q;
    if (den == 0) {
      if (num == 0) throw std::invalid_argument("Fraction 0*inf");
      return Fraction(1, 0);
    }
    return make_reduced(num, den);
  }

  Fraction reciprocal() const { return make_reduced(q, p); }

  static Fraction make_reduced(i128 num, i128 den) {
    if (den == 0) {
      if (num == 0) throw std::invalid_argument("Fraction 0/0");
      Fraction r;
      r.p = 1;
      r.q = 0;
      return r;
    }
    if (den < 0) { num = -num; den = -den; }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b) { i128 t = a % b; a = b; b = t; }
    if (a > 1) { num /= a; den /= a; }
    Fraction r;
    r.p = checked_i64(num, "Fraction overflow");
    r.q = checked_i64(den, "Fraction overflow");
    return r;
  }

  std::string str() const {
    if (is_infinite()) return "inf";
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
  }
};

using ContinuedFraction = std::vector<i64>;

// [[c1,...,cn]] = c_n + 1/[[c1,...,c_{n-1}]], [[c]] = c. Intermediate
// infinities propagate as 1/0.
inline Fraction cf_value(const ContinuedFraction& cf) {
  if (cf.empty()) return Fraction(1, 0);
  Fraction acc(cf.front());
  for (std::size_t i = 1; i < cf.size(); ++i)
    acc = Fraction(cf[i]) + acc.reciprocal();
  return acc;
}

// Expansion with entries sharing the fraction's sign, from truncating
// division. Fractions with |f| < 1 get a trailing 0 entry (no nonzero
// expansion exists for them), and infinity is encoded as [0,0]; both
// round-trip through cf_value.
inline ContinuedFraction cf_from_fraction(Fraction f) {
  if (f.p == 0) throw std::invalid_argument("cf_from_fraction(0)");
  if (f.is_infinite()) return {0, 0};
  bool reciprocal_tail = false;
  if ((f.p < 0 ? -f.p : f.p) < f.q) {
    f = f.reciprocal();
    reciprocal_tail = true;
  }
  ContinuedFraction rev;
  while (true) {
    i64 c = f.p / f.q;  // truncation toward zero keeps the remainder's sign
    rev.push_back(c);
    i64 r = f.p % f.q;
    if (r == 0) break;
    f = Fraction(f.q, r);
  }
  ContinuedFraction out(rev.rbegin(), rev.rend());
  if (reciprocal_tail) out.push_back(0);
  return out;
}

}  // namespace fm
