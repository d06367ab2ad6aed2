#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "khom/errors.hpp"

namespace khom {

// One crossing X(a,b,c,d): the four edge labels counterclockwise starting
// from the incoming under-strand, so the under-strand runs a -> c.
struct Crossing {
  std::array<long, 4> e;

  long operator[](std::size_t i) const { return e[i]; }
  friend bool operator==(const Crossing& x, const Crossing& y) {
    return x.e == y.e;
  }
};

// Planar link diagram: crossings over edge labels 1..2n (each label occurs
// exactly twice), plus an explicit count of crossing-free circle components.
class PDCode {
 public:
  PDCode() = default;

  PDCode(std::vector<Crossing> crossings, std::size_t free_circles)
      : crossings_(std::move(crossings)), free_circles_(free_circles) {
    validate();
  }

  // Grammar: whitespace-separated tokens, each `X(a,b,c,d)` with positive
  // integer labels or `O` for a crossing-free circle.
  static PDCode parse(const std::string& text) {
    std::vector<Crossing> crossings;
    std::size_t free_circles = 0;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) {
      throw parse_error("pd: " + msg + " at position " + std::to_string(i));
    };
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (text[i] == 'O') {
        ++free_circles;
        ++i;
        continue;
      }
      if (text[i] != 'X') fail("expected 'X' or 'O'");
      ++i;
      if (i >= text.size() || text[i] != '(') fail("expected '('");
      ++i;
      Crossing c{};
      for (int k = 0; k < 4; ++k) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          ++i;
        if (i == start) fail("expected an edge label");
        c.e[k] = std::stol(text.substr(start, i - start));
        if (c.e[k] <= 0) fail("edge labels must be positive");
        const char sep = (k < 3) ? ',' : ')';
        if (i >= text.size() || text[i] != sep)
          fail(std::string("expected '") + sep + "'");
        ++i;
      }
      crossings.push_back(c);
    }
    return PDCode(std::move(crossings), free_circles);
  }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t free_circles() const { return free_circles_; }
  std::size_t edge_count() const { return 2 * crossings_.size(); }

  std::string to_text() const {
    std::string out;
    for (const Crossing& c : crossings_) {
      if (!out.empty()) out += ' ';
      out += "X(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
             std::to_string(c[2]) + "," + std::to_string(c[3]) + ")";
    }
    for (std::size_t i = 0; i < free_circles_; ++i) {
      if (!out.empty()) out += ' ';
      out += 'O';
    }
    return out;
  }

  friend bool operator==(const PDCode& a, const PDCode& b) {
    return a.crossings_ == b.crossings_ && a.free_circles_ == b.free_circles_;
  }

 private:
  void validate() const {
    const long max_label = static_cast<long>(edge_count());
    std::map<long, int> seen;
    for (const Crossing& c : crossings_)
      for (long e : c.e) {
        if (e < 1 || e > max_label)
          throw parse_error("pd: edge label " + std::to_string(e) +
                            " out of range 1.." + std::to_string(max_label));
        ++seen[e];
      }
    for (const auto& [e, count] : seen)
      if (count != 2)
        throw parse_error("pd: edge label " + std::to_string(e) + " occurs " +
                          std::to_string(count) + " times, expected 2");
  }

  std::vector<Crossing> crossings_;
  std::size_t free_circles_ = 0;
};

// One smoothing choice per crossing: 0 joins {a,b},{c,d}; 1 joins {a,d},{b,c}.
struct Resolution {
  std::vector<std::uint8_t> bits;

  Resolution() = default;
  explicit Resolution(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  static Resolution from_mask(std::uint32_t mask, std::size_t n) {
    std::vector<std::uint8_t> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = (mask >> i) & 1u;
    return Resolution(std::move(b));
  }

  std::uint32_t mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) m |= (1u << i);
    return m;
  }

  std::size_t weight() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
  }
};

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
};

// Circles of one resolution: count, and for every edge label the index of
// its circle. Labeled circles are ordered by their smallest edge label;
// crossing-free circles follow as the last factors.
struct CircleData {
  std::size_t labeled_count = 0;
  std::size_t total_count = 0;              // labeled + free circles
  std::vector<std::size_t> circle_of_edge;  // indexed by edge label, [1..2n]
};

inline CircleData circle_structure(const PDCode& d, std::uint32_t mask) {
  const std::size_t edges = d.edge_count();
  UnionFind uf(edges + 1);
  const auto& xs = d.crossings();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto& e = xs[i].e;
    if ((mask >> i) & 1u) {
      uf.unite(e[0], e[3]);
      uf.unite(e[1], e[2]);
    } else {
      uf.unite(e[0], e[1]);
      uf.unite(e[2], e[3]);
    }
  }
  CircleData c;
  c.circle_of_edge.assign(edges + 1, 0);
  std::map<std::size_t, std::size_t> index_of_root;  // keyed by min label
  for (std::size_t e = 1; e <= edges; ++e) {
    std::size_t root = uf.find(e);
    if (!index_of_root.count(root)) {
      std::size_t id = index_of_root.size();
      index_of_root[root] = id;  // roots visited in label order: id by min label
    }
  }
  for (std::size_t e = 1; e <= edges; ++e)
    c.circle_of_edge[e] = index_of_root[uf.find(e)];
  c.labeled_count = index_of_root.size();
  c.total_count = c.labeled_count + d.free_circles();
  return c;
}

}  // namespace detail

// Number of disjoint circles after smoothing every crossing according to r.
inline std::size_t circles(const PDCode& d, const Resolution& r) {
  if (r.bits.size() != d.crossing_count())
    throw std::invalid_argument("circles: resolution length mismatch");
  return detail::circle_structure(d, r.mask()).total_count;
}

struct CrossingSigns {
  std::size_t negative = 0;  // x(D)
  std::size_t positive = 0;  // y(D)
};

// A diagram with the flow direction of every strand end resolved: for each
// crossing slot, whether the strand runs into the crossing there. The
// incoming over-slot determines the crossing sign: over-strand d -> b is
// positive, b -> d negative.
struct OrientedDiagram {
  PDCode diagram;
  std::vector<std::array<bool, 4>> incoming;
  std::vector<bool> positive;

  CrossingSigns signs() const {
    CrossingSigns s;
    for (bool p : positive)
      ++(p ? s.positive : s.negative);
    return s;
  }
};

namespace detail {

// Slot roles are fixed for the under-strand (a in, c out) and propagate
// through two constraints: the two occurrences of a label take opposite
// roles, and the two over-slots of a crossing take opposite roles. Diagrams
// whose components pass over at every crossing are oriented by the
// edge-number succession rule instead.
inline OrientedDiagram orient(const PDCode& d) {
  const std::size_t n = d.crossing_count();
  const std::size_t edges = d.edge_count();
  const auto& xs = d.crossings();

  // occurrence list per label
  std::vector<std::vector<std::pair<std::size_t, int>>> occ(edges + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (int s = 0; s < 4; ++s) occ[xs[i].e[s]].push_back({i, s});

  // -1 unknown, 0 out, 1 in
  std::vector<std::array<int, 4>> state(n, {-1, -1, -1, -1});
  std::vector<std::pair<std::size_t, int>> queue;
  auto assign = [&](std::size_t i, int s, int v) {
    if (state[i][s] == v) return;
    if (state[i][s] != -1)
      throw compute_error("pd: inconsistent orientation at crossing " +
                          std::to_string(i));
    state[i][s] = v;
    queue.push_back({i, s});
  };
  for (std::size_t i = 0; i < n; ++i) {
    assign(i, 0, 1);
    assign(i, 2, 0);
  }
  auto propagate = [&]() {
    while (!queue.empty()) {
      auto [i, s] = queue.back();
      queue.pop_back();
      const int v = state[i][s];
      for (auto [j, t] : occ[xs[i].e[s]])
        if (j != i || t != s) assign(j, t, 1 - v);
      if (s == 1 || s == 3) assign(i, s ^ 2, 1 - v);
    }
  };
  propagate();

  // Fallback for components that are over-strands everywhere: orient by
  // consecutive edge numbering within the component cycle.
  bool unresolved = false;
  for (std::size_t i = 0; i < n && !unresolved; ++i)
    if (state[i][1] == -1) unresolved = true;
  if (unresolved) {
    UnionFind comp(edges + 1);
    for (const Crossing& c : xs) {
      comp.unite(c.e[0], c.e[2]);
      comp.unite(c.e[1], c.e[3]);
    }
    std::map<std::size_t, std::pair<long, long>> range;  // root -> (lo, hi)
    std::map<std::size_t, std::size_t> size;
    for (std::size_t e = 1; e <= edges; ++e) {
      std::size_t root = comp.find(e);
      auto it = range.find(root);
      if (it == range.end()) {
        range[root] = {static_cast<long>(e), static_cast<long>(e)};
        size[root] = 1;
      } else {
        it->second.first = std::min(it->second.first, static_cast<long>(e));
        it->second.second = std::max(it->second.second, static_cast<long>(e));
        ++size[root];
      }
    }
    auto succ = [&](long e) -> long {
      std::size_t root = comp.find(static_cast<std::size_t>(e));
      auto [lo, hi] = range[root];
      if (static_cast<long>(size[root]) != hi - lo + 1)
        throw compute_error(
            "pd: component edge labels are not consecutive; cannot orient");
      return e == hi ? lo : e + 1;
    };
    for (std::size_t i = 0; i < n; ++i) {
      if (state[i][1] != -1) continue;
      const long b = xs[i].e[1], dd = xs[i].e[3];
      const bool d_to_b = succ(dd) == b;
      const bool b_to_d = succ(b) == dd;
      if (d_to_b == b_to_d)
        throw compute_error("pd: ambiguous orientation at crossing " +
                            std::to_string(i));
      assign(i, 3, d_to_b ? 1 : 0);
      propagate();
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (int s = 0; s < 4; ++s)
      if (state[i][s] == -1)
        throw compute_error("pd: unable to orient diagram");
  for (std::size_t e = 1; e <= edges; ++e) {
    int in = 0;
    for (auto [i, s] : occ[e]) in += state[i][s];
    if (in != 1)
      throw compute_error("pd: edge " + std::to_string(e) +
                          " does not have one head and one tail");
  }

  OrientedDiagram o;
  o.diagram = d;
  o.incoming.resize(n);
  o.positive.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int s = 0; s < 4; ++s) o.incoming[i][s] = state[i][s] == 1;
    o.positive[i] = state[i][3] == 1;  // over-strand enters at d: runs d -> b
  }
  return o;
}

// Rebuild a diagram from crossings with known flow roles but arbitrary
// labels: walk every strand, assigning fresh consecutive labels along the
// orientation. Components are visited in order of their smallest old label.
inline PDCode renumber(const std::vector<Crossing>& xs,
                       const std::vector<std::array<bool, 4>>& incoming,
                       std::size_t free_circles) {
  std::map<long, std::pair<std::size_t, int>> in_slot, out_slot;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (int s = 0; s < 4; ++s) {
      auto& side = incoming[i][s] ? in_slot : out_slot;
      if (!side.emplace(xs[i].e[s], std::make_pair(i, s)).second)
        throw std::invalid_argument("renumber: label role repeated");
    }
  if (in_slot.size() != out_slot.size())
    throw std::invalid_argument("renumber: unmatched strand ends");

  std::map<long, long> relabel;
  long next = 1;
  for (const auto& [start, unused] : out_slot) {
    if (relabel.count(start)) continue;
    long e = start;
    while (!relabel.count(e)) {
      relabel[e] = next++;
      auto [i, s] = in_slot.at(e);   // the crossing this edge runs into
      e = xs[i].e[s ^ 2];            // continue out of the paired slot
    }
  }

  std::vector<Crossing> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (int s = 0; s < 4; ++s) out[i].e[s] = relabel.at(xs[i].e[s]);
  return PDCode(std::move(out), free_circles);
}

}  // namespace detail

inline OrientedDiagram orient(const PDCode& d) { return detail::orient(d); }

inline CrossingSigns crossing_signs(const PDCode& d) {
  return detail::orient(d).signs();
}

// Mirror image: swaps the roles of the two smoothings via tuple rotation
// X(a,b,c,d) -> X(b,c,d,a). Intended for bracket-level checks; the rotated
// tuples mirror the unoriented diagram.
inline PDCode mirror(const PDCode& d) {
  std::vector<Crossing> xs;
  xs.reserve(d.crossing_count());
  for (const Crossing& c : d.crossings())
    xs.push_back(Crossing{{c[1], c[2], c[3], c[0]}});
  return PDCode(std::move(xs), d.free_circles());
}

// The same crossing in its two states plus the oriented smoothing,
// everything else unchanged. Used to check
// q^2 J(L+) - q^-2 J(L-) = (q - q^-1) J(L0).
struct SkeinTriple {
  PDCode positive;  // L+
  PDCode negative;  // L-
  PDCode smoothed;  // L0
};

inline SkeinTriple skein_triple(const PDCode& d, std::size_t crossing) {
  if (crossing >= d.crossing_count())
    throw std::invalid_argument("skein_triple: crossing index out of range");
  OrientedDiagram o = detail::orient(d);
  const Crossing c = d.crossings()[crossing];
  const bool pos = o.positive[crossing];

  // Flipping over/under keeps all strand ends in place: rotate the tuple so
  // it starts at the new incoming under-strand (the old incoming over).
  std::vector<Crossing> flipped_xs = d.crossings();
  flipped_xs[crossing] =
      pos ? Crossing{{c[3], c[0], c[1], c[2]}}   // over ran d -> b
          : Crossing{{c[1], c[2], c[3], c[0]}};  // over ran b -> d
  PDCode flipped(std::move(flipped_xs), d.free_circles());

  // Oriented smoothing: join the incoming under-end to the outgoing
  // over-end and vice versa, then drop the crossing and relabel.
  const std::array<std::pair<long, long>, 2> arcs =
      pos ? std::array<std::pair<long, long>, 2>{{{c[0], c[1]}, {c[3], c[2]}}}
          : std::array<std::pair<long, long>, 2>{{{c[0], c[3]}, {c[1], c[2]}}};

  const std::size_t edges = d.edge_count();
  detail::UnionFind uf(edges + 1);
  for (const auto& [u, v] : arcs) uf.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));

  std::vector<Crossing> rest;
  std::vector<std::array<bool, 4>> roles;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    if (i == crossing) continue;
    Crossing r = d.crossings()[i];
    for (int s = 0; s < 4; ++s)
      r.e[s] = static_cast<long>(uf.find(static_cast<std::size_t>(r.e[s])));
    rest.push_back(r);
    roles.push_back(o.incoming[i]);
  }

  // A merged class with no remaining crossing occurrence closed into a
  // crossing-free circle.
  std::set<std::size_t> touched;
  for (long e : c.e) touched.insert(uf.find(static_cast<std::size_t>(e)));
  std::set<std::size_t> still_used;
  for (const Crossing& r : rest)
    for (long e : r.e) still_used.insert(static_cast<std::size_t>(e));
  std::size_t closed = 0;
  for (std::size_t root : touched)
    if (!still_used.count(root)) ++closed;

  PDCode smoothed = detail::renumber(rest, roles, d.free_circles() + closed);

  SkeinTriple t;
  t.positive = pos ? d : flipped;
  t.negative = pos ? flipped : d;
  t.smoothed = std::move(smoothed);
  return t;
}

}  // namespace khom
