// Exact arithmetic in Q[s]/(s^8 - s^6 + s^4 - s^2 + 1), the cyclotomic
// field generated by a primitive 20th root of unity. Here s stands for
// t^{1/2}, so s^10 = -1 and t^5 = -1 holds automatically; evaluation of
// half-integer Laurent polynomials at the relevant roots of unity happens
// by exponent reduction in this ring.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "fm/halflaurent.hpp"

namespace fm {

using Rat = boost::multiprecision::cpp_rational;

struct QuotientElement {
  // coordinates over the basis 1, s, s^2, ..., s^7
  std::array<Rat, 8> c{};

  static QuotientElement zero() { return {}; }
  static QuotientElement one() {
    QuotientElement r;
    r.c[0] = 1;
    return r;
  }
  static QuotientElement from_rational(const Rat& v) {
    QuotientElement r;
    r.c[0] = v;
    return r;
  }

  // s^n as an element, any integer n (s^20 = 1, s^10 = -1)
  static QuotientElement s_power(long long n) {
    n = ((n % 20) + 20) % 20;
    int sign = 1;
    if (n >= 10) { sign = -1; n -= 10; }
    QuotientElement r;
    if (n <= 7) {
      r.c[static_cast<std::size_t>(n)] = sign;
    } else if (n == 8) {
      // s^8 = s^6 - s^4 + s^2 - 1
      r.c[6] = sign; r.c[4] = -sign; r.c[2] = sign; r.c[0] = -sign;
    } else {
      // s^9 = s^7 - s^5 + s^3 - s
      r.c[7] = sign; r.c[5] = -sign; r.c[3] = sign; r.c[1] = -sign;
    }
    return r;
  }

  bool is_zero() const {
    for (const auto& v : c)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.c == b.c;
  }
  friend bool operator!=(const QuotientElement& a, const QuotientElement& b) {
    return !(a == b);
  }

  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
    QuotientElement r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
    QuotientElement r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend QuotientElement operator-(const QuotientElement& a) {
    QuotientElement r;
    for (int i = 0; i < 8; ++i) r.c[i] = -a.c[i];
    return r;
  }
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
    std::array<Rat, 15> raw{};
    for (int i = 0; i < 8; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < 8; ++j) {
        if (b.c[j] == 0) continue;
        raw[i + j] += a.c[i] * b.c[j];
      }
    }
    QuotientElement r;
    for (int d = 0; d < 15; ++d) {
      if (raw[d] == 0) continue;
      if (d <= 7) {
        r.c[d] += raw[d];
      } else {
        QuotientElement p = s_power(d);
        for (int i = 0; i < 8; ++i) r.c[i] += raw[d] * p.c[i];
      }
    }
    return r;
  }

  // lexicographic comparison of coordinate vectors, for canonical forms
  friend bool operator<(const QuotientElement& a, const QuotientElement& b) {
    for (int i = 0; i < 8; ++i) {
      if (a.c[i] < b.c[i]) return true;
      if (b.c[i] < a.c[i]) return false;
    }
    return false;
  }

  std::string str() const {
    std::string out;
    bool any = false;
    for (int i = 0; i < 8; ++i) {
      if (c[i] == 0) continue;
      if (any) out += " + ";
      out += c[i].str();
      if (i > 0) out += "*s^" + std::to_string(i);
      any = true;
    }
    return any ? out : "0";
  }
};

// field automorphism s -> s^j, defined for j coprime to 20
inline QuotientElement galois(const QuotientElement& x, int j) {
  if (std::gcd(((j % 20) + 20) % 20, 20) != 1)
    throw std::invalid_argument("galois: exponent not coprime to 20");
  QuotientElement r;
  for (int i = 0; i < 8; ++i) {
    if (x.c[i] == 0) continue;
    QuotientElement p = QuotientElement::s_power(static_cast<long long>(i) * j);
    for (int k = 0; k < 8; ++k) r.c[k] += x.c[i] * p.c[k];
  }
  return r;
}

inline QuotientElement conj(const QuotientElement& x) { return galois(x, 19); }

// image of a half-integer Laurent polynomial under s -> primitive root
inline QuotientElement to_quotient(const HalfLaurent& p) {
  QuotientElement r;
  for (const auto& [n, coeff] : p.coeffs) {
    QuotientElement m = QuotientElement::s_power(n);
    Rat rc(coeff);
    for (int k = 0; k < 8; ++k) r.c[k] += rc * m.c[k];
  }
  return r;
}

// evaluation of p at t = exp(n*pi*i/5), i.e. s -> s^n in the quotient;
// the two roots the 5-move invariants live at
inline QuotientElement eval_at_root(const HalfLaurent& p, int n) {
  if (n != 1 && n != 3) throw std::invalid_argument("eval_at_root: n must be 1 or 3");
  return galois(to_quotient(p), n);
}

// exact division: solves q*y = x; error on y = 0
inline QuotientElement field_div(const QuotientElement& x, const QuotientElement& y) {
  if (y.is_zero()) throw std::domain_error("field_div: division by zero");
  // column j of the matrix is y * s^j
  std::array<std::array<Rat, 9>, 8> m{};
  for (int j = 0; j < 8; ++j) {
    QuotientElement col = y * QuotientElement::s_power(j);
    for (int i = 0; i < 8; ++i) m[i][j] = col.c[i];
  }
  for (int i = 0; i < 8; ++i) m[i][8] = x.c[i];
  for (int col = 0, row = 0; col < 8 && row < 8; ++col, ++row) {
    int piv = -1;
    for (int i = row; i < 8; ++i)
      if (m[i][col] != 0) { piv = i; break; }
    if (piv < 0) throw std::domain_error("field_div: singular system");
    std::swap(m[row], m[piv]);
    Rat inv = m[row][col];
    for (int k = col; k < 9; ++k) m[row][k] /= inv;
    for (int i = 0; i < 8; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int k = col; k < 9; ++k) m[i][k] -= f * m[row][k];
    }
  }
  QuotientElement r;
  for (int i = 0; i < 8; ++i) r.c[i] = m[i][8];
  return r;
}

inline QuotientElement qpow(QuotientElement base, long long n) {
  if (n < 0) return qpow(field_div(QuotientElement::one(), base), -n);
  QuotientElement r = QuotientElement::one();
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

// canonical representative of the orbit { +- s^k x }; since -1 = s^10 the
// orbit is exactly the 20 multiples by powers of s
inline QuotientElement doteq_canonical(const QuotientElement& x) {
  QuotientElement best = x;
  for (int k = 1; k < 20; ++k) {
    QuotientElement cand = QuotientElement::s_power(k) * x;
    if (cand < best) best = cand;
  }
  return best;
}

// canonical representative modulo multiplication by a^j, a = s^4 (a fifth
// root of unity); used for Kauffman values compared "up to powers of a"
inline QuotientElement canonical_mod_a(const QuotientElement& x) {
  QuotientElement best = x;
  for (int j = 1; j < 5; ++j) {
    QuotientElement cand = QuotientElement::s_power(4 * j) * x;
    if (cand < best) best = cand;
  }
  return best;
}

inline bool doteq_eq(const QuotientElement& a, const QuotientElement& b) {
  return doteq_canonical(a) == doteq_canonical(b);
}

inline bool unit_orbit_eq_mod_a(const QuotientElement& a, const QuotientElement& b) {
  return canonical_mod_a(a) == canonical_mod_a(b);
}

// do a and b differ by a root of unity of the field? all of those are
// 20th roots, so the quotient must satisfy (a/b)^20 = 1
inline bool unit_orbit_eq(const QuotientElement& a, const QuotientElement& b) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) return false;
  return qpow(field_div(a, b), 20) == QuotientElement::one();
}

// numeric embedding s -> exp(i*pi*e/10) for norm reporting; e must keep s
// primitive, i.e. gcd(e, 20) = 1
inline long double complex_norm(const QuotientElement& x, int e = 1) {
  if (std::gcd(((e % 20) + 20) % 20, 20) != 1)
    throw std::invalid_argument("complex_norm: embedding not primitive");
  std::complex<long double> acc(0.0L, 0.0L);
  const long double pi = 3.14159265358979323846264338327950288L;
  for (int i = 0; i < 8; ++i) {
    if (x.c[i] == 0) continue;
    long double coeff = x.c[i].convert_to<long double>();
    long double ang = pi * static_cast<long double>(e) * i / 10.0L;
    acc += coeff * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return std::abs(acc);
}

}  // namespace fm
