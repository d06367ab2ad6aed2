#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "khom/laurent.hpp"
#include "khom/pd_code.hpp"

namespace khom {

namespace detail {

inline std::size_t count_circles(const PDCode& d, std::uint32_t mask) {
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
  std::size_t count = 0;
  for (std::size_t e = 1; e <= edges; ++e)
    if (uf.find(e) == e) ++count;
  return count + d.free_circles();
}

}  // namespace detail

// Kauffman bracket by the full state sum
//   <D> = sum_r (-q^-1)^|r| (q + q^-1)^circles(d, r)
// over all 2^n resolutions. Exponential in the crossing number; fine up to
// n of about 20.
inline LaurentPoly kauffman_bracket(const PDCode& d) {
  const std::size_t n = d.crossing_count();
  if (n > 31)
    throw compute_error("bracket: state sum supports at most 31 crossings");

  // Group the 2^n terms by (|r|, circle count); the counts fit in 64 bits.
  const std::size_t max_k = d.edge_count() + d.free_circles() + 1;
  std::vector<std::vector<unsigned long long>> count(
      n + 1, std::vector<unsigned long long>(max_k + 1, 0));
  const std::uint64_t total = std::uint64_t(1) << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const std::size_t w = static_cast<std::size_t>(std::popcount(mask));
    ++count[w][detail::count_circles(d, static_cast<std::uint32_t>(mask))];
  }

  std::vector<LaurentPoly> circle_pow(max_k + 1);
  circle_pow[0] = LaurentPoly::constant(1);
  for (std::size_t k = 1; k <= max_k; ++k)
    circle_pow[k] = circle_pow[k - 1] * LaurentPoly::q_plus_q_inverse();

  LaurentPoly bracket;
  for (std::size_t w = 0; w <= n; ++w)
    for (std::size_t k = 0; k <= max_k; ++k) {
      if (count[w][k] == 0) continue;
      Int c(static_cast<unsigned long>(count[w][k] & 0xffffffffull));
      c += Int(static_cast<unsigned long>(count[w][k] >> 32)) << 32;
      if (w % 2 == 1) c = -c;
      bracket += c * (LaurentPoly::monomial(1, -static_cast<long>(w)) *
                      circle_pow[k]);
    }
  return bracket;
}

// Jones normalization J(D) = (-1)^x q^(2x - y) <D> with x negative and y
// positive crossings; a link invariant by Kauffman's theorem.
inline LaurentPoly jones(const PDCode& d) {
  CrossingSigns s = crossing_signs(d);
  const long x = static_cast<long>(s.negative);
  const long y = static_cast<long>(s.positive);
  LaurentPoly norm = LaurentPoly::monomial((x % 2 == 0) ? 1 : -1, 2 * x - y);
  return norm * kauffman_bracket(d);
}

}  // namespace khom
