#pragma once

// Diagram builders for the test corpus: braid closures, Reidemeister-I kink
// insertion, connected sums and oriented mirrors. All of them produce valid
// consecutively-numbered PD codes via the library's renumbering walk.

#include <array>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "khom/pd_code.hpp"

namespace diagrams {

// Closure of a braid word on `strands` strands; letter +i is the generator
// crossing strands i and i+1 with the left strand passing over, -i its
// inverse. All strands are oriented the same way.
inline khom::PDCode braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("braid: need at least 1 strand");
  long next_label = 1;
  auto fresh = [&]() { return next_label++; };

  std::vector<long> start(strands), cur(strands);
  for (int j = 0; j < strands; ++j) start[j] = cur[j] = fresh();

  std::vector<khom::Crossing> xs;
  std::vector<std::array<bool, 4>> roles;
  for (int w : word) {
    int i = std::abs(w) - 1;
    if (w == 0 || i + 1 >= strands)
      throw std::invalid_argument("braid: letter out of range");
    long L = cur[i], R = cur[i + 1];
    long nl = fresh(), nr = fresh();
    if (w > 0) {
      // left strand over: under-strand runs R -> nl, over runs L -> nr
      xs.push_back(khom::Crossing{{R, L, nl, nr}});
      roles.push_back({true, true, false, false});
    } else {
      // right strand over: under runs L -> nr, over runs R -> nl
      xs.push_back(khom::Crossing{{L, nl, nr, R}});
      roles.push_back({true, false, false, true});
    }
    cur[i] = nl;
    cur[i + 1] = nr;
  }

  // Close each strand: the final edge is the same edge as the start edge.
  std::map<long, long> subst;
  std::size_t free_circles = 0;
  for (int j = 0; j < strands; ++j) {
    if (cur[j] == start[j])
      ++free_circles;  // never crossed anything
    else
      subst[cur[j]] = start[j];
  }
  for (auto& c : xs)
    for (long& e : c.e) {
      auto it = subst.find(e);
      if (it != subst.end()) e = it->second;
    }
  return khom::detail::renumber(xs, roles, free_circles);
}

// Insert a Reidemeister-I kink along edge `e` (any label of d). The result
// is a diagram of the same link with one extra crossing of the given sign.
inline khom::PDCode add_kink(const khom::PDCode& d, long e, bool positive) {
  if (d.crossing_count() == 0) {
    if (d.free_circles() == 0)
      throw std::invalid_argument("add_kink: empty diagram");
    std::vector<khom::Crossing> xs{positive ? khom::Crossing{{1, 1, 2, 2}}
                                            : khom::Crossing{{1, 2, 2, 1}}};
    return khom::PDCode(std::move(xs), d.free_circles() - 1);
  }
  khom::OrientedDiagram o = khom::orient(d);
  const long t1 = static_cast<long>(d.edge_count()) + 1;
  const long t2 = t1 + 1;

  std::vector<khom::Crossing> xs = d.crossings();
  std::vector<std::array<bool, 4>> roles;
  for (const auto& in : o.incoming) roles.push_back(in);

  // Reroute: ... -e-> (kink under) -t1-> (kink over) -t2-> old head of e.
  bool rerouted = false;
  for (std::size_t i = 0; i < xs.size() && !rerouted; ++i)
    for (int s = 0; s < 4 && !rerouted; ++s)
      if (xs[i].e[s] == e && roles[i][s]) {
        xs[i].e[s] = t2;
        rerouted = true;
      }
  if (!rerouted) throw std::invalid_argument("add_kink: no such edge");

  if (positive) {
    xs.push_back(khom::Crossing{{e, t2, t1, t1}});
    roles.push_back({true, false, false, true});
  } else {
    xs.push_back(khom::Crossing{{e, t1, t1, t2}});
    roles.push_back({true, true, false, false});
  }
  return khom::detail::renumber(xs, roles, d.free_circles());
}

// Connected sum along edge 1 of each diagram (component choice for links).
inline khom::PDCode connected_sum(const khom::PDCode& a, const khom::PDCode& b) {
  if (a.crossing_count() == 0) {
    if (a.free_circles() == 0)
      throw std::invalid_argument("connected_sum: empty diagram");
    return khom::PDCode(b.crossings(), b.free_circles() + a.free_circles() - 1);
  }
  if (b.crossing_count() == 0) return connected_sum(b, a);

  khom::OrientedDiagram oa = khom::orient(a);
  khom::OrientedDiagram ob = khom::orient(b);
  const long shift = static_cast<long>(a.edge_count());

  std::vector<khom::Crossing> xs = a.crossings();
  std::vector<std::array<bool, 4>> roles;
  for (const auto& in : oa.incoming) roles.push_back(in);
  for (const auto& c : b.crossings()) {
    khom::Crossing s = c;
    for (long& e : s.e) e += shift;
    xs.push_back(s);
  }
  for (const auto& in : ob.incoming) roles.push_back(in);

  // Cut edge x of a and edge y of b, splice the strands crosswise: the head
  // slot of x takes label y and vice versa.
  const long x = 1, y = 1 + shift;
  auto head_of = [&](long label) -> std::pair<std::size_t, int> {
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (int s = 0; s < 4; ++s)
        if (xs[i].e[s] == label && roles[i][s]) return {i, s};
    throw std::logic_error("connected_sum: head slot not found");
  };
  auto [xi, xslot] = head_of(x);
  auto [yi, yslot] = head_of(y);
  xs[xi].e[xslot] = y;
  xs[yi].e[yslot] = x;

  return khom::detail::renumber(xs, roles, a.free_circles() + b.free_circles());
}

// Mirror image as an oriented diagram: flip every crossing by the rotation
// matching its sign, so the result stays consecutively numbered.
inline khom::PDCode mirror_oriented(const khom::PDCode& d) {
  khom::OrientedDiagram o = khom::orient(d);
  std::vector<khom::Crossing> xs;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossings()[i].e;
    xs.push_back(o.positive[i] ? khom::Crossing{{c[3], c[0], c[1], c[2]}}
                               : khom::Crossing{{c[1], c[2], c[3], c[0]}});
  }
  return khom::PDCode(std::move(xs), d.free_circles());
}

}  // namespace diagrams
