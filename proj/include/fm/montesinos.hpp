#pragma once

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <fm/diagram.hpp>
#include <fm/rational.hpp>

namespace fm {

// M(q_1/p_1, ..., q_n/p_n; e). Factors keep p_i > 0, 0 < |q_i| < p_i,
// gcd(p_i, q_i) = 1; e is the integer part.
struct MontesinosDescriptor {
  std::vector<Fraction> factors;  // stored as value q_i/p_i
  i64 e = 0;

  std::string str() const {
    std::string s = "M(";
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(factors[i].p) + "/" + std::to_string(factors[i].q);
    }
    s += ";" + std::to_string(e) + ")";
    return s;
  }
};

inline Fraction montesinos_factor(i64 q, i64 p) {
  if (p <= 0) throw std::invalid_argument("montesinos factor: p must be positive");
  if (q == 0 || std::abs(q) >= p)
    throw std::invalid_argument("montesinos factor: need 0 < |q| < p");
  if (std::gcd(q, p) != 1)
    throw std::invalid_argument("montesinos factor: q/p must be reduced");
  return Fraction(q, p);
}

inline MontesinosDescriptor make_montesinos(const std::vector<Fraction>& factors, i64 e) {
  MontesinosDescriptor m;
  for (const Fraction& f : factors) m.factors.push_back(montesinos_factor(f.p, f.q));
  m.e = e;
  return m;
}

// Shift every q_i into (0, p_i), compensating on the integer part. Idempotent
// and value-preserving on the link.
inline MontesinosDescriptor montesinos_normalize(const MontesinosDescriptor& m) {
  MontesinosDescriptor r;
  r.e = m.e;
  for (const Fraction& f : m.factors) {
    i64 q = f.p, p = f.q;
    if (q < 0) {
      q += p;
      r.e -= 1;
    }
    r.factors.push_back(montesinos_factor(q, p));
  }
  return r;
}

// Build a diagram of the Montesinos link. With two or more factors each
// fractional tangle is inserted rotated (so the slope q_i/p_i is read off the
// vertical axis) and the chain is closed with e extra horizontal twists. With
// fewer than two factors the link is rational and the 2-bridge diagram
// S(p, q+ep) is emitted directly.
inline LinkDiagram montesinos_to_diagram(const MontesinosDescriptor& m) {
  size_t n = m.factors.size();
  if (n == 0) {
    Tangle t = Tangle::zero();
    t.add_horizontal_twists(m.e);
    return t.numerator_closure();
  }
  if (n == 1) {
    i64 q = m.factors[0].p, p = m.factors[0].q;
    Fraction slope = Fraction::make_reduced(p, i128(q) + i128(m.e) * p);
    return tangle_from_fraction(slope).numerator_closure();
  }
  Tangle ring;
  bool first = true;
  for (const Fraction& f : m.factors) {
    i64 q = f.p, p = f.q;
    Tangle factor = tangle_from_fraction(Fraction(p, q)).rotated();
    if (first) {
      ring = factor;
      first = false;
    } else {
      ring.juxtapose(factor);
    }
  }
  ring.add_horizontal_twists(m.e);
  return ring.numerator_closure();
}

namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

[[noreturn]] inline void parse_fail(const std::string& what, size_t pos) {
  throw std::invalid_argument(what + " at position " + std::to_string(pos));
}

inline i64 parse_int(const std::string& s, size_t& i) {
  skip_ws(s, i);
  size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  size_t digits = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits) parse_fail("expected integer", start);
  return std::stoll(s.substr(start, i - start));
}

}  // namespace detail

// Conway notation for Montesinos links: comma-separated twist groups,
// optionally parenthesized. Within a group each digit is one entry
// ("213" -> 2 1 3); whitespace-separated tokens allow multi-digit entries
// ("2 13" -> 2 13); a leading '-' mirrors the whole group. A trailing
// two-entry group "e 0" is the integer part.
struct ConwayNotation {
  std::vector<ContinuedFraction> tangles;
  i64 integer_part = 0;
};

inline ConwayNotation parse_conway(const std::string& text) {
  size_t i = 0;
  detail::skip_ws(text, i);
  bool parens = i < text.size() && text[i] == '(';
  if (parens) ++i;
  std::vector<ContinuedFraction> groups;
  while (true) {
    detail::skip_ws(text, i);
    bool neg = false;
    if (i < text.size() && text[i] == '-') {
      neg = true;
      ++i;
    }
    std::vector<std::string> toks;
    while (true) {
      detail::skip_ws(text, i);
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) break;
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      toks.push_back(text.substr(start, i - start));
    }
    if (toks.empty()) detail::parse_fail("expected twist group", i);
    // a group written as one token splits into digits ("213" -> 2 1 3); a
    // spaced group has one entry per token ("2 13" -> 2 13)
    ContinuedFraction g;
    if (toks.size() == 1) {
      for (char c : toks[0]) g.push_back(c - '0');
    } else {
      for (const auto& t : toks) g.push_back(std::stoll(t));
    }
    if (neg)
      for (auto& c : g) c = -c;
    groups.push_back(std::move(g));
    detail::skip_ws(text, i);
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (parens) {
    if (i >= text.size() || text[i] != ')') detail::parse_fail("expected ')'", i);
    ++i;
  }
  detail::skip_ws(text, i);
  if (i != text.size()) detail::parse_fail("trailing input", i);
  ConwayNotation out;
  if (!groups.empty() && groups.back().size() == 2 && groups.back()[1] == 0) {
    out.integer_part = groups.back()[0];
    groups.pop_back();
  }
  out.tangles = std::move(groups);
  return out;
}

// Descriptor strings of the shape M(q1/p1,...,qn/pn;e); the ";e" part is
// optional, and M(;e) gives the empty product.
inline MontesinosDescriptor parse_montesinos(const std::string& text) {
  size_t i = 0;
  detail::skip_ws(text, i);
  if (i >= text.size() || (text[i] != 'M' && text[i] != 'm'))
    detail::parse_fail("expected 'M'", i);
  ++i;
  detail::skip_ws(text, i);
  if (i >= text.size() || text[i] != '(') detail::parse_fail("expected '('", i);
  ++i;
  MontesinosDescriptor m;
  detail::skip_ws(text, i);
  bool at_factors = i < text.size() && text[i] != ';' && text[i] != ')';
  while (at_factors) {
    size_t fpos = i;
    i64 q = detail::parse_int(text, i);
    detail::skip_ws(text, i);
    if (i >= text.size() || text[i] != '/') detail::parse_fail("expected '/'", i);
    ++i;
    i64 p = detail::parse_int(text, i);
    try {
      m.factors.push_back(montesinos_factor(q, p));
    } catch (const std::invalid_argument& ex) {
      detail::parse_fail(std::string(ex.what()), fpos);
    }
    detail::skip_ws(text, i);
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  detail::skip_ws(text, i);
  if (i < text.size() && text[i] == ';') {
    ++i;
    m.e = detail::parse_int(text, i);
    detail::skip_ws(text, i);
  }
  if (i >= text.size() || text[i] != ')') detail::parse_fail("expected ')'", i);
  ++i;
  detail::skip_ws(text, i);
  if (i != text.size()) detail::parse_fail("trailing input", i);
  return m;
}

}  // namespace fm
