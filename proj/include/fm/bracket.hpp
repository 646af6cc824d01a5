#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <fm/diagram.hpp>
#include <fm/halflaurent.hpp>
#include <fm/quotient.hpp>

namespace fm {

inline constexpr int kBracketCap = 24;

namespace detail {

// union-find with union by rank and an undo log; no path compression so
// rollback stays O(1) per operation
class RollbackUF {
 public:
  explicit RollbackUF(int n) : par_(n), rank_(n, 0), classes_(n) {
    std::iota(par_.begin(), par_.end(), 0);
  }
  int find(int x) const {
    while (par_[x] != x) x = par_[x];
    return x;
  }
  // returns true if a merge happened
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    par_[b] = a;
    bool bumped = rank_[a] == rank_[b];
    if (bumped) ++rank_[a];
    log_.push_back({b, bumped});
    --classes_;
    return true;
  }
  void rollback(int merges) {
    while (merges-- > 0) {
      auto [child, bumped] = log_.back();
      log_.pop_back();
      if (bumped) --rank_[par_[child]];
      par_[child] = child;
      ++classes_;
    }
  }
  int classes() const { return classes_; }

 private:
  std::vector<int> par_;
  std::vector<int> rank_;
  std::vector<std::pair<int, char>> log_;
  int classes_;
};

}  // namespace detail

// Exact Kauffman bracket state sum. Every crossing is split both ways; loops
// of a state are counted through a rollback union-find over the arcs, and the
// 2^c leaves only bump a (net exponent, loop count) tally that is expanded
// into the polynomial at the end.
inline HalfLaurent kauffman_bracket(const LinkDiagram& diagram, int cap = kBracketCap) {
  int c = diagram.num_crossings();
  if (c > cap) throw std::length_error("bracket: crossing cap exceeded");
  if (c == 0 && diagram.free_loops == 0)
    throw std::invalid_argument("bracket: empty diagram");

  LinkDiagram d = diagram;
  d.relabel_compact();
  int arcs = 2 * c;

  // smoothing arc pairs: ways[i][0] is the A-split, ways[i][1] the B-split.
  // For an over02 crossing the A-split joins (NE,SE) and (NW,SW).
  struct Split {
    int u0, v0, u1, v1;
  };
  std::vector<std::array<Split, 2>> ways(c);
  for (int i = 0; i < c; ++i) {
    const auto& a = d.crossings[i].a;
    Split east_west{a[0], a[3], a[1], a[2]};
    Split north_south{a[0], a[1], a[2], a[3]};
    if (d.crossings[i].over02)
      ways[i] = {east_west, north_south};
    else
      ways[i] = {north_south, east_west};
  }

  // tally[net + c][loops]
  std::vector<std::vector<std::uint64_t>> tally(2 * c + 1,
                                                std::vector<std::uint64_t>(arcs + 1, 0));
  detail::RollbackUF uf(std::max(arcs, 1));
  std::function<void(int, int)> walk = [&](int i, int net) {
    if (i == c) {
      ++tally[net + c][c == 0 ? 1 : uf.classes()];
      return;
    }
    for (int w = 0; w < 2; ++w) {
      const Split& s = ways[i][w];
      int merges = 0;
      merges += uf.unite(s.u0, s.v0) ? 1 : 0;
      merges += uf.unite(s.u1, s.v1) ? 1 : 0;
      walk(i + 1, net + (w == 0 ? 1 : -1));
      uf.rollback(merges);
    }
  };
  walk(0, 0);

  HalfLaurent delta;
  delta.add_term(2, Int(-1));
  delta.add_term(-2, Int(-1));
  std::vector<HalfLaurent> delta_pow{HalfLaurent::one()};
  for (int k = 1; k <= arcs + diagram.free_loops; ++k)
    delta_pow.push_back(poly_mul(delta_pow.back(), delta));

  HalfLaurent out;
  for (int e = -c; e <= c; ++e)
    for (int loops = 1; loops <= arcs; ++loops) {
      std::uint64_t n = tally[e + c][loops];
      if (!n) continue;
      HalfLaurent term = delta_pow[loops - 1 + diagram.free_loops];
      term = poly_mul(term, HalfLaurent::monomial(Int(n), e));
      out = poly_add(out, term);
    }
  if (c == 0) out = delta_pow[diagram.free_loops - 1];
  return out;
}

// Jones polynomial in half powers of t (coefficient key k stands for t^{k/2}).
// flip reverses the orientation of the chosen components; for knots the
// result is orientation-independent.
inline HalfLaurent jones(const LinkDiagram& d, const std::vector<char>& flip = {},
                         int cap = kBracketCap) {
  HalfLaurent br = kauffman_bracket(d, cap);
  int w = d.num_crossings() ? d.writhe(flip) : 0;
  HalfLaurent v;
  for (const auto& [e, coeff] : br.coeffs) {
    long long num = 3LL * w - e;
    if (num % 2 != 0) throw std::runtime_error("jones: non-integral exponent");
    Int cf = coeff;
    if (w % 2 != 0) cf = -cf;
    v.add_term(static_cast<int>(num / 2), cf);
  }
  return v;
}

struct JonesInvariants {
  QuotientElement vbar;    // doteq-canonical image of V in the quotient field
  QuotientElement gamma1;  // V at t = exp(i pi/5), exact
  QuotientElement gamma3;  // V at t = exp(3 i pi/5), exact
  double v1 = 0, v3 = 0;   // complex norms of the gammas
  Int det = 0;             // |V(-1)|
};

inline Int det_from_jones(const HalfLaurent& v) {
  // t = -1 means the half-power key k contributes i^k
  Int re = 0, im = 0;
  for (const auto& [k, coeff] : v.coeffs) {
    switch (((k % 4) + 4) % 4) {
      case 0: re += coeff; break;
      case 1: im += coeff; break;
      case 2: re -= coeff; break;
      case 3: im -= coeff; break;
    }
  }
  if (re != 0 && im != 0) throw std::runtime_error("det: V(-1) not a Gaussian axis value");
  Int d = re != 0 ? re : im;
  return d < 0 ? -d : d;
}

inline JonesInvariants jones_invariants(const LinkDiagram& d, int cap = kBracketCap) {
  HalfLaurent v = jones(d, {}, cap);
  JonesInvariants out;
  out.vbar = doteq_canonical(to_quotient(v));
  out.gamma1 = eval_at_root(v, 1);
  out.gamma3 = eval_at_root(v, 3);
  out.v1 = static_cast<double>(complex_norm(out.gamma1, 1));
  out.v3 = static_cast<double>(complex_norm(out.gamma3, 1));
  out.det = det_from_jones(v);
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms of the reduced Jones value on the five normal forms

namespace detail {

inline const QuotientElement& qe_t() {
  static const QuotientElement t = QuotientElement::s_power(2);
  return t;
}

inline QuotientElement neg_t_minus_inv() {  // -t - 1/t
  return QuotientElement::zero() - QuotientElement::s_power(2) - QuotientElement::s_power(18);
}

inline QuotientElement neg_sqrt_pair() {  // -sqrt(t) - 1/sqrt(t)
  return QuotientElement::zero() - QuotientElement::s_power(1) - QuotientElement::s_power(19);
}

inline QuotientElement t_plus_1_plus_inv() {  // t + 1 + 1/t
  return QuotientElement::s_power(2) + QuotientElement::one() + QuotientElement::s_power(18);
}

inline QuotientElement one_minus_t() { return QuotientElement::one() - QuotientElement::s_power(2); }

inline QuotientElement v1_impl(long long k, long long l) {
  QuotientElement head = qpow(neg_t_minus_inv(), k + l);
  QuotientElement neg_inv_t = QuotientElement::zero() - QuotientElement::s_power(18);
  QuotientElement tail =
      qpow(neg_inv_t, l) * qpow(one_minus_t(), k + l) * t_plus_1_plus_inv();
  return field_div(head + tail, neg_sqrt_pair());
}

}  // namespace detail

inline QuotientElement v1_closed(long long k, long long l) {
  if (k < 0 || l < 0 || l > 4 || k + l < 3)
    throw std::invalid_argument("v1_closed: need k,l >= 0, l <= 4, k+l >= 3");
  return detail::v1_impl(k, l);
}

inline QuotientElement v2_closed(long long k, long long l) {
  if (k < 0 || l < 1 || k + l < 3)
    throw std::invalid_argument("v2_closed: need k >= 0, l >= 1, k+l >= 3");
  QuotientElement t2 = detail::qe_t() * detail::qe_t();
  QuotientElement num = qpow(QuotientElement::one() - t2, l) *
                        qpow(detail::one_minus_t(), k) * detail::t_plus_1_plus_inv();
  return field_div(num, detail::neg_sqrt_pair());
}

inline QuotientElement v3_closed(long long k, long long l) {
  if (k < 0 || l < 0) throw std::invalid_argument("v3_closed: need k,l >= 0");
  return qpow(detail::neg_sqrt_pair(), l) * qpow(detail::neg_t_minus_inv(), k);
}

inline QuotientElement v4_closed() { return QuotientElement::zero(); }

// the exceptional form; equals the first form's expression continued to (4,-1)
inline QuotientElement v5_closed() { return detail::v1_impl(4, -1); }

// Sampling filter: a candidate survives unless 5 divides exactly one of the
// two quantities.
inline bool determinant_filter(const Int& det, long long residue) {
  bool d5 = det % 5 == 0;
  bool r5 = residue % 5 == 0;
  return d5 == r5;
}

}  // namespace fm
