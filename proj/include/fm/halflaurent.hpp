// Sparse Laurent polynomials with integer coefficients, exponents counted
// in half-integer steps of t (one unit = t^{1/2}). Also reused for bracket
// polynomials in the variable A.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <string>

namespace fm {

using Int = boost::multiprecision::cpp_int;

struct HalfLaurent {
  // exponent n represents s^n = t^{n/2}; zero coefficients are never stored
  std::map<int, Int> coeffs;

  HalfLaurent() = default;
  static HalfLaurent zero() { return {}; }
  static HalfLaurent monomial(Int c, int n) {
    HalfLaurent r;
    if (c != 0) r.coeffs[n] = std::move(c);
    return r;
  }
  static HalfLaurent one() { return monomial(1, 0); }

  bool is_zero() const { return coeffs.empty(); }

  void add_term(int n, const Int& c) {
    if (c == 0) return;
    auto it = coeffs.find(n);
    if (it == coeffs.end()) {
      coeffs.emplace(n, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }

  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) {
    return a.coeffs == b.coeffs;
  }
  friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) {
    return !(a == b);
  }

  friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent r = a;
    for (const auto& [n, c] : b.coeffs) r.add_term(n, c);
    return r;
  }
  friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent r = a;
    for (const auto& [n, c] : b.coeffs) r.add_term(n, -c);
    return r;
  }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent r;
    for (const auto& [n1, c1] : a.coeffs)
      for (const auto& [n2, c2] : b.coeffs) r.add_term(n1 + n2, c1 * c2);
    return r;
  }

  HalfLaurent shifted(int d) const {
    HalfLaurent r;
    for (const auto& [n, c] : coeffs) r.coeffs[n + d] = c;
    return r;
  }

  int min_exp() const { return coeffs.empty() ? 0 : coeffs.begin()->first; }
  int max_exp() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }

  std::string str(const char* var = "s") const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : coeffs) {
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      first = false;
      Int a = c < 0 ? Int(-c) : c;
      if (a != 1 || n == 0) os << a.str();
      if (n != 0) {
        if (a != 1) os << "*";
        os << var;
        if (n != 1) os << "^" << n;
      }
    }
    return os.str();
  }
};

inline HalfLaurent poly_add(const HalfLaurent& a, const HalfLaurent& b) { return a + b; }
inline HalfLaurent poly_mul(const HalfLaurent& a, const HalfLaurent& b) { return a * b; }

}  // namespace fm
