#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <fm/rational.hpp>

namespace fm {

// A crossing stores the four incident arc ids in counterclockwise order
// starting at the north-east corner: slot 0 = NE, 1 = NW, 2 = SW, 3 = SE.
// One strand passes through slots (0,2), the other through (1,3).
// over02 set means the (0,2) strand is the over-strand.
struct Crossing {
  std::array<int, 4> a{-1, -1, -1, -1};
  bool over02 = false;

  bool operator==(const Crossing& o) const { return a == o.a && over02 == o.over02; }
};

inline constexpr int kSlotNE = 0;
inline constexpr int kSlotNW = 1;
inline constexpr int kSlotSW = 2;
inline constexpr int kSlotSE = 3;

// exit direction vectors per slot, for crossing sign computation
inline constexpr int kSlotDirX[4] = {1, -1, -1, 1};
inline constexpr int kSlotDirY[4] = {1, 1, -1, -1};

struct ArcOcc {
  int crossing;
  int slot;
};

class LinkDiagram {
 public:
  std::vector<Crossing> crossings;
  int free_loops = 0;

  int num_crossings() const { return static_cast<int>(crossings.size()); }

  // arc id -> its (at most two) slot occurrences
  std::map<int, std::vector<ArcOcc>> arc_occurrences() const {
    std::map<int, std::vector<ArcOcc>> occ;
    for (int c = 0; c < num_crossings(); ++c)
      for (int s = 0; s < 4; ++s) occ[crossings[c].a[s]].push_back({c, s});
    return occ;
  }

  bool arc_pairing_ok() const {
    for (const auto& [arc, occ] : arc_occurrences()) {
      (void)arc;
      if (occ.size() != 2) return false;
    }
    return true;
  }

  // faces of the 4-valent map given by the stored rotation system
  int count_faces() const {
    auto occ = arc_occurrences();
    std::vector<int> arcs;
    std::map<int, int> arc_index;
    for (const auto& [arc, o] : occ) {
      (void)o;
      arc_index[arc] = static_cast<int>(arcs.size());
      arcs.push_back(arc);
    }
    int n = static_cast<int>(arcs.size());
    std::vector<char> seen(2 * n, 0);
    int faces = 0;
    for (int start = 0; start < 2 * n; ++start) {
      if (seen[start]) continue;
      ++faces;
      int de = start;
      while (!seen[de]) {
        seen[de] = 1;
        int arc = arcs[de / 2], from = de % 2;
        ArcOcc arrive = occ[arc][1 - from];
        int s2 = (arrive.slot + 1) % 4;
        int next_arc = crossings[arrive.crossing].a[s2];
        const auto& no = occ[next_arc];
        int j = (no[0].crossing == arrive.crossing && no[0].slot == s2) ? 0 : 1;
        de = arc_index[next_arc] * 2 + j;
      }
    }
    return faces;
  }

  // connected components of the underlying 4-valent graph (free loops excluded)
  int graph_components() const {
    int n = num_crossings();
    if (n == 0) return 0;
    std::vector<int> par(n);
    std::iota(par.begin(), par.end(), 0);
    auto find = [&](int x) {
      while (par[x] != x) x = par[x] = par[par[x]];
      return x;
    };
    for (const auto& [arc, o] : arc_occurrences()) {
      (void)arc;
      par[find(o[0].crossing)] = find(o[1].crossing);
    }
    int k = 0;
    for (int i = 0; i < n; ++i)
      if (find(i) == i) ++k;
    return k;
  }

  // Euler check of the encoded embedding. Face orbits never cross graph
  // components, so every component is checked against its own sphere:
  // V - E + F = 2 per component.
  bool planar_ok() const {
    if (!arc_pairing_ok()) return false;
    int c = num_crossings();
    if (c == 0) return true;
    return c - 2 * c + count_faces() == 2 * graph_components();
  }

  void validate() const {
    if (!arc_pairing_ok()) throw std::runtime_error("diagram: broken arc pairing");
    if (!planar_ok()) throw std::runtime_error("diagram: embedding fails Euler check");
  }

  // link components; fills arc -> component index (indices ordered by least arc id)
  int num_link_components(std::map<int, int>* arc_comp = nullptr) const {
    std::map<int, int> par;  // arc union-find via map
    for (const auto& cr : crossings)
      for (int s = 0; s < 4; ++s) par.emplace(cr.a[s], cr.a[s]);
    std::function<int(int)> find = [&](int x) {
      while (par[x] != x) x = par[x] = par[par[x]];
      return x;
    };
    for (const auto& cr : crossings) {
      par[find(cr.a[0])] = find(cr.a[2]);
      par[find(cr.a[1])] = find(cr.a[3]);
    }
    std::map<int, int> root_to_idx;
    for (auto& [arc, p] : par) {
      (void)p;
      int r = find(arc);
      if (!root_to_idx.count(r)) {
        int idx = static_cast<int>(root_to_idx.size());
        root_to_idx[r] = idx;
      }
    }
    if (arc_comp) {
      arc_comp->clear();
      for (auto& [arc, p] : par) {
        (void)p;
        (*arc_comp)[arc] = root_to_idx[find(arc)];
      }
    }
    return static_cast<int>(root_to_idx.size()) + free_loops;
  }

  // Orient every component (seed arc = least id in the component, pointing from
  // its first stored occurrence to the second), then return per-crossing signs.
  // flip[i] reverses component i. Components are indexed as in num_link_components.
  std::vector<int> crossing_signs(const std::vector<char>& flip = {}) const {
    auto occ = arc_occurrences();
    std::map<int, int> comp;
    num_link_components(&comp);
    // arc -> direction: true means the arc runs occ[0] -> occ[1]
    std::map<int, char> dir;
    for (const auto& [arc, o] : occ) {
      (void)o;
      if (dir.count(arc)) continue;
      // walk the component, assigning directions
      int a = arc;
      bool d = true;
      while (!dir.count(a)) {
        dir[a] = d ? 1 : 0;
        ArcOcc head = occ[a][d ? 1 : 0];  // where this arc arrives
        int out_slot = (head.slot + 2) % 4;
        int b = crossings[head.crossing].a[out_slot];
        const auto& bo = occ[b];
        int j = (bo[0].crossing == head.crossing && bo[0].slot == out_slot) ? 0 : 1;
        // b departs from occurrence j
        a = b;
        d = (j == 0);
      }
    }
    auto arc_flows_out_of = [&](int arc, int c, int s) {
      const auto& o = occ[arc];
      int j = (o[0].crossing == c && o[0].slot == s) ? 0 : 1;
      bool fwd = dir[arc] == 1;
      bool out = (j == 0) ? fwd : !fwd;
      if (!flip.empty() && flip[comp[arc]]) out = !out;
      return out;
    };
    std::vector<int> signs;
    signs.reserve(crossings.size());
    for (int c = 0; c < num_crossings(); ++c) {
      const Crossing& cr = crossings[c];
      // exit slot of each strand under the chosen orientation
      int exit02 = arc_flows_out_of(cr.a[0], c, 0) ? 0 : 2;
      int exit13 = arc_flows_out_of(cr.a[1], c, 1) ? 1 : 3;
      int so = cr.over02 ? exit02 : exit13;
      int su = cr.over02 ? exit13 : exit02;
      int cross = kSlotDirX[so] * kSlotDirY[su] - kSlotDirY[so] * kSlotDirX[su];
      signs.push_back(cross > 0 ? 1 : -1);
    }
    return signs;
  }

  int writhe(const std::vector<char>& flip = {}) const {
    auto s = crossing_signs(flip);
    return std::accumulate(s.begin(), s.end(), 0);
  }

  LinkDiagram mirrored() const {
    LinkDiagram m = *this;
    for (auto& c : m.crossings) c.over02 = !c.over02;
    return m;
  }

  int max_arc_id() const {
    int m = -1;
    for (const auto& c : crossings)
      for (int s = 0; s < 4; ++s) m = std::max(m, c.a[s]);
    return m;
  }

  void relabel_compact() {
    std::map<int, int> remap;
    for (auto& c : crossings)
      for (int s = 0; s < 4; ++s) {
        auto it = remap.find(c.a[s]);
        if (it == remap.end()) {
          int id = static_cast<int>(remap.size());
          it = remap.emplace(c.a[s], id).first;
        }
        c.a[s] = it->second;
      }
  }

  // Replace every occurrence of arc v by u. If u == v the arc closes into a
  // crossing-free loop (both occurrences must be the joined stubs).
  void merge_arcs(int u, int v) {
    if (u == v) {
      ++free_loops;
      return;
    }
    for (auto& c : crossings)
      for (int s = 0; s < 4; ++s)
        if (c.a[s] == v) c.a[s] = u;
  }

  // Remove crossing ci by joining its arcs in two pairs. way 0 joins
  // (NE,NW) and (SW,SE); way 1 joins (NE,SE) and (NW,SW).
  void smooth_crossing(int ci, int way) {
    Crossing cr = crossings[ci];
    crossings.erase(crossings.begin() + ci);
    if (way == 0) {
      merge_arcs(cr.a[0], cr.a[1]);
      int x = cr.a[2] == cr.a[1] ? cr.a[0] : cr.a[2];
      int y = cr.a[3] == cr.a[1] ? cr.a[0] : cr.a[3];
      merge_arcs(x, y);
    } else {
      merge_arcs(cr.a[0], cr.a[3]);
      int x = cr.a[1] == cr.a[3] ? cr.a[0] : cr.a[1];
      int y = cr.a[2] == cr.a[3] ? cr.a[0] : cr.a[2];
      merge_arcs(x, y);
    }
  }

  // Insert |count| half twists on the two strands leaving crossing ci at the
  // corner between slot side and slot side+1. count > 0 twists with the
  // over-flag set, count < 0 with it clear; topologically this realizes a
  // k-move insertion into the face at that corner.
  //
  // Face tracing turns a corner from arrive-slot s to depart-slot s+1, so the
  // depart stub (slot side+1) must feed the chain's arrive slot (NW) and the
  // arrive stub the chain's SW; wiring it the other way crosses the band.
  void insert_half_twists(int ci, int side, int count) {
    if (count == 0) return;
    if (ci < 0 || ci >= num_crossings()) throw std::invalid_argument("insert: bad crossing");
    int s0 = side % 4, s1 = (side + 1) % 4;
    int x = crossings[ci].a[s0], y = crossings[ci].a[s1];
    int fresh = max_arc_id() + 1;
    int cur0 = fresh++, cur1 = fresh++;
    crossings[ci].a[s1] = cur0;
    crossings[ci].a[s0] = cur1;
    bool loop_back = (x == y);
    for (int i = 0; i < std::abs(count); ++i) {
      Crossing t;
      t.a[kSlotNW] = cur0;
      t.a[kSlotSW] = cur1;
      t.a[kSlotNE] = fresh++;
      t.a[kSlotSE] = fresh++;
      t.over02 = count > 0;
      cur0 = t.a[kSlotNE];
      cur1 = t.a[kSlotSE];
      crossings.push_back(t);
    }
    if (loop_back) {
      merge_arcs(cur0, cur1);
    } else {
      merge_arcs(y, cur0);
      merge_arcs(x, cur1);
    }
  }

  // Deterministic code for memo keys: minimum over all traversal starts of the
  // relabeled crossing list. Equal codes imply equal diagrams up to relabeling.
  std::vector<int> canonical_code() const {
    std::vector<int> best;
    auto occ = arc_occurrences();
    int n = num_crossings();
    if (n == 0) return {free_loops};
    for (int c0 = 0; c0 < n; ++c0) {
      for (int s0 = 0; s0 < 4; ++s0) {
        // breadth-first over crossings, arcs labeled in discovery order
        std::map<int, int> arc_label;
        std::vector<int> cr_order;
        std::vector<int> cr_pos(n, -1);
        auto label_arc = [&](int a) {
          auto it = arc_label.find(a);
          if (it == arc_label.end()) {
            int id = static_cast<int>(arc_label.size());
            it = arc_label.emplace(a, id).first;
          }
          return it->second;
        };
        std::vector<std::pair<int, int>> queue{{c0, s0}};
        size_t qi = 0;
        while (qi < queue.size()) {
          auto [c, s] = queue[qi++];
          if (cr_pos[c] != -1) continue;
          cr_pos[c] = static_cast<int>(cr_order.size());
          cr_order.push_back(c);
          for (int k = 0; k < 4; ++k) {
            int a = crossings[c].a[(s + k) % 4];
            label_arc(a);
            const auto& o = occ[a];
            ArcOcc other = (o[0].crossing == c && o[0].slot == (s + k) % 4) ? o[1] : o[0];
            queue.push_back({other.crossing, other.slot});
          }
        }
        std::vector<int> code{free_loops};
        for (int c : cr_order) {
          // normalize the rotation of each crossing: smallest label first,
          // slot parity flips the over flag
          std::array<int, 4> lab;
          for (int k = 0; k < 4; ++k) lab[k] = arc_label[crossings[c].a[k]];
          int bestr = 0;
          for (int r = 1; r < 4; ++r) {
            for (int k = 0; k < 4; ++k) {
              int lr = lab[(r + k) % 4], lb = lab[(bestr + k) % 4];
              if (lr != lb) {
                if (lr < lb) bestr = r;
                break;
              }
            }
          }
          for (int k = 0; k < 4; ++k) code.push_back(lab[(bestr + k) % 4]);
          bool flag = crossings[c].over02;
          if (bestr % 2 == 1) flag = !flag;
          code.push_back(flag ? 1 : 0);
        }
        if (best.empty() || code < best) best = code;
      }
    }
    return best;
  }
};

inline LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  LinkDiagram r = a;
  int off = a.max_arc_id() + 1;
  for (Crossing c : b.crossings) {
    for (int s = 0; s < 4; ++s) c.a[s] += off;
    r.crossings.push_back(c);
  }
  r.free_loops += b.free_loops;
  return r;
}

// Cut arc_a in a and arc_b in b and cross-join the stubs. A crossing-free
// unknot acts as the unit.
inline LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b,
                                 int arc_a = -1, int arc_b = -1) {
  if (a.num_crossings() == 0) {
    if (a.free_loops < 1) throw std::invalid_argument("connected_sum: empty diagram");
    LinkDiagram r = b;
    r.free_loops += a.free_loops - 1;
    return r;
  }
  if (b.num_crossings() == 0) {
    if (b.free_loops < 1) throw std::invalid_argument("connected_sum: empty diagram");
    LinkDiagram r = a;
    r.free_loops += b.free_loops - 1;
    return r;
  }
  if (arc_a < 0) arc_a = a.crossings[0].a[0];
  if (arc_b < 0) arc_b = b.crossings[0].a[0];
  int off = a.max_arc_id() + 1;
  LinkDiagram r = a;
  for (Crossing c : b.crossings) {
    for (int s = 0; s < 4; ++s) c.a[s] += off;
    r.crossings.push_back(c);
  }
  r.free_loops += b.free_loops;
  int bb = arc_b + off;
  // split both arcs: one side keeps the old id, the other gets a fresh id,
  // then reconnect crosswise
  int fresh = r.max_arc_id() + 1;
  int na = fresh++, nb = fresh++;
  bool first = true;
  for (auto& c : r.crossings)
    for (int s = 0; s < 4; ++s) {
      if (c.a[s] == arc_a && first) {
        c.a[s] = na;
        first = false;
      }
    }
  first = true;
  for (auto& c : r.crossings)
    for (int s = 0; s < 4; ++s) {
      if (c.a[s] == bb && first) {
        c.a[s] = nb;
        first = false;
      }
    }
  r.merge_arcs(arc_a, nb);
  r.merge_arcs(bb, na);
  return r;
}

// A tangle: a diagram fragment with four open corner ends NW, NE, SW, SE.
// Open arcs occur once in the crossing list and once among the corners
// (or twice among the corners for the bar tangles).
class Tangle {
 public:
  std::vector<Crossing> crossings;
  int nw = -1, ne = -1, sw = -1, se = -1;
  int next_arc = 0;
  int free_loops = 0;

  // two horizontal strands, value 0
  static Tangle zero() {
    Tangle t;
    t.nw = t.ne = t.next_arc++;
    t.sw = t.se = t.next_arc++;
    return t;
  }

  // two vertical strands, value infinity
  static Tangle infinity() {
    Tangle t;
    t.nw = t.sw = t.next_arc++;
    t.ne = t.se = t.next_arc++;
    return t;
  }

  // append |k| crossings on the right; k > 0 twists with the over-flag set
  void add_horizontal_twists(i64 k) {
    for (i64 i = 0; i < (k < 0 ? -k : k); ++i) {
      Crossing c;
      c.a[kSlotNW] = ne;
      c.a[kSlotSW] = se;
      c.a[kSlotNE] = next_arc++;
      c.a[kSlotSE] = next_arc++;
      c.over02 = k > 0;
      ne = c.a[kSlotNE];
      se = c.a[kSlotSE];
      crossings.push_back(c);
    }
  }

  // append |k| crossings at the bottom
  void add_vertical_twists(i64 k) {
    for (i64 i = 0; i < (k < 0 ? -k : k); ++i) {
      Crossing c;
      c.a[kSlotNW] = sw;
      c.a[kSlotNE] = se;
      c.a[kSlotSW] = next_arc++;
      c.a[kSlotSE] = next_arc++;
      c.over02 = k > 0;
      sw = c.a[kSlotSW];
      se = c.a[kSlotSE];
      crossings.push_back(c);
    }
  }

  // rotate 90 degrees counterclockwise; sends value v to -1/v
  Tangle rotated() const {
    Tangle r = *this;
    for (size_t i = 0; i < crossings.size(); ++i) {
      for (int s = 0; s < 4; ++s) r.crossings[i].a[(s + 1) % 4] = crossings[i].a[s];
      r.crossings[i].over02 = !crossings[i].over02;
    }
    r.nw = ne;
    r.sw = nw;
    r.se = sw;
    r.ne = se;
    return r;
  }

  // glue other to the right of this (tangle sum; adds values)
  void juxtapose(const Tangle& other) {
    int off = next_arc;
    for (Crossing c : other.crossings) {
      for (int s = 0; s < 4; ++s) c.a[s] += off;
      crossings.push_back(c);
    }
    free_loops += other.free_loops;
    next_arc += other.next_arc;
    int onw = other.nw + off, osw = other.sw + off;
    int one = other.ne + off, ose = other.se + off;
    // join ne-onw, then se-osw under the labels current after the first join
    join ja = join_arcs(ne, onw);
    int a = se, b = osw;
    if (a == ja.gone) a = ja.kept;
    if (b == ja.gone) b = ja.kept;
    join_arcs(a, b);
    ne = one == ja.gone ? ja.kept : one;
    se = ose == ja.gone ? ja.kept : ose;
    nw = nw == ja.gone ? ja.kept : nw;
    sw = sw == ja.gone ? ja.kept : sw;
  }

  LinkDiagram numerator_closure() const {
    Tangle t = *this;
    join ja = t.join_arcs(t.nw, t.ne);
    int a = t.sw, b = t.se;
    if (a == ja.gone) a = ja.kept;
    if (b == ja.gone) b = ja.kept;
    t.join_arcs(a, b);
    LinkDiagram d;
    d.crossings = std::move(t.crossings);
    d.free_loops = t.free_loops;
    return d;
  }

  LinkDiagram denominator_closure() const {
    Tangle t = *this;
    join ja = t.join_arcs(t.nw, t.sw);
    int a = t.ne, b = t.se;
    if (a == ja.gone) a = ja.kept;
    if (b == ja.gone) b = ja.kept;
    t.join_arcs(a, b);
    LinkDiagram d;
    d.crossings = std::move(t.crossings);
    d.free_loops = t.free_loops;
    return d;
  }

 private:
  struct join {
    int kept = -1, gone = -1;
  };

  join join_arcs(int u, int v) {
    if (u == v) {
      ++free_loops;
      return {u, -1};
    }
    for (auto& c : crossings)
      for (int s = 0; s < 4; ++s)
        if (c.a[s] == v) c.a[s] = u;
    return {u, v};
  }
};

// Build the rational tangle of a twist sequence. Entries are applied left to
// right; entry i twists horizontally when n-1-i is even, vertically otherwise,
// so the last entry is always a horizontal twist and the value obeys the
// continued fraction recurrence.
inline Tangle tangle_from_cf(const ContinuedFraction& cf) {
  int n = static_cast<int>(cf.size());
  if (n == 0) return Tangle::infinity();
  Tangle t = (n % 2 == 1) ? Tangle::zero() : Tangle::infinity();
  for (int i = 0; i < n; ++i) {
    if ((n - 1 - i) % 2 == 0)
      t.add_horizontal_twists(cf[i]);
    else
      t.add_vertical_twists(cf[i]);
  }
  return t;
}

inline Tangle tangle_from_fraction(const Fraction& f) {
  return tangle_from_cf(cf_from_fraction(f));
}

// ---------------------------------------------------------------------------
// Dowker-Thistlethwaite codes

struct DTCode {
  std::string name;
  std::vector<int> evens;
};

// Realize a DT code as a planar diagram. The embedding is found by searching
// the per-crossing handedness assignments and keeping the first one passing
// the Euler check; this fixes one of the two reflections deterministically.
// A positive even entry means the even-numbered passage goes under.
inline LinkDiagram dt_to_diagram(const DTCode& code) {
  int c = static_cast<int>(code.evens.size());
  if (c == 0) {
    LinkDiagram d;
    d.free_loops = 1;
    return d;
  }
  std::vector<int> even_pos(2 * c + 1, -1);
  for (int i = 0; i < c; ++i) {
    int e = std::abs(code.evens[i]);
    if (e < 2 || e > 2 * c || e % 2 != 0 || even_pos[e] != -1)
      throw std::invalid_argument("dt: entries must be a signed permutation of 2..2c");
    even_pos[e] = i;
  }
  // crossing of each passage position (1-based), and whether the position is
  // the first of its crossing's two passages
  std::vector<int> cross_at(2 * c + 1), first_at(2 * c + 1);
  for (int i = 0; i < c; ++i) {
    int o = 2 * i + 1, e = std::abs(code.evens[i]);
    cross_at[o] = i;
    cross_at[e] = i;
    first_at[o] = o < e;
    first_at[e] = e < o;
  }
  for (unsigned mask = 0; mask < (1u << c); ++mask) {
    LinkDiagram d;
    d.crossings.resize(c);
    for (int i = 0; i < c; ++i) {
      int o = 2 * i + 1;
      bool even_under = code.evens[i] > 0;
      bool first_is_odd = first_at[o];
      d.crossings[i].over02 = first_is_odd ? even_under : !even_under;
    }
    auto entry_slot = [&](int pos) {
      int i = cross_at[pos];
      if (first_at[pos]) return kSlotSW;
      return (mask >> i) & 1u ? kSlotNW : kSlotSE;
    };
    auto exit_slot = [&](int pos) {
      int i = cross_at[pos];
      if (first_at[pos]) return kSlotNE;
      return (mask >> i) & 1u ? kSlotSE : kSlotNW;
    };
    for (int pos = 1; pos <= 2 * c; ++pos) {
      int nxt = pos % (2 * c) + 1;
      int arc = pos - 1;
      d.crossings[cross_at[pos]].a[exit_slot(pos)] = arc;
      d.crossings[cross_at[nxt]].a[entry_slot(nxt)] = arc;
    }
    if (d.planar_ok()) return d;
  }
  throw std::invalid_argument("dt: code is not realizable");
}

// One knot per line: <name> <c> <dt_1> ... <dt_c>. '#' starts a comment.
inline std::vector<DTCode> parse_dt_table(const std::string& text) {
  std::vector<DTCode> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::vector<std::string> tok;
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tok.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tok.empty()) continue;
    if (tok.size() < 2) throw std::invalid_argument("dt table: truncated line");
    DTCode code;
    code.name = tok[0];
    int c = std::stoi(tok[1]);
    if (static_cast<int>(tok.size()) != 2 + c)
      throw std::invalid_argument("dt table: entry count mismatch for " + code.name);
    for (int k = 0; k < c; ++k) code.evens.push_back(std::stoi(tok[2 + k]));
    out.push_back(std::move(code));
  }
  return out;
}

}  // namespace fm
