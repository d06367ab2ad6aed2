#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "khom/bracket.hpp"
#include "khom/frobenius.hpp"
#include "khom/graded_complex.hpp"
#include "khom/homology.hpp"
#include "khom/pd_code.hpp"

namespace khom {

// One vertex of the cube of resolutions: the resolved diagram's circles,
// which carry the tensor factors of A^(x)k.
struct CubeVertex {
  Resolution resolution;
  std::size_t circle_count = 0;             // tensor factors, incl. free circles
  std::vector<std::size_t> circle_of_edge;  // factor index per edge label
};

inline CubeVertex cube_vertex(const PDCode& d, const Resolution& r) {
  if (r.bits.size() != d.crossing_count())
    throw std::invalid_argument("cube_vertex: resolution length mismatch");
  detail::CircleData cd = detail::circle_structure(d, r.mask());
  return CubeVertex{r, cd.total_count, std::move(cd.circle_of_edge)};
}

// The bigraded complex C(D). The vertex for resolution r sits in homological
// degree |r| - x(D); a basis tensor has q-degree
// (sum of factor degrees) + 2x(D) - y(D) - |r|.
//
// The stored chain complex follows the descending-differential convention,
// so differential(n+1) holds the adjoints of the signed cube edge maps from
// level n to level n+1; homology dimensions are unaffected.
class KhovanovComplex {
 public:
  const GradedChainComplex& complex() const { return complex_; }
  const PDCode& diagram() const { return diagram_; }
  const CrossingSigns& signs() const { return signs_; }

  long homological_degree(const Resolution& r) const {
    return static_cast<long>(r.weight()) - static_cast<long>(signs_.negative);
  }

  // (homological degree, offset of the vertex's first basis element inside
  // the module at that degree).
  std::pair<long, std::size_t> vertex_location(const Resolution& r) const {
    auto it = vertex_loc_.find(r.mask());
    if (it == vertex_loc_.end())
      throw std::invalid_argument("vertex_location: resolution length mismatch");
    return it->second;
  }

 private:
  friend KhovanovComplex build_cube(const PDCode& d);

  GradedChainComplex complex_;
  PDCode diagram_;
  CrossingSigns signs_;
  std::map<std::uint32_t, std::pair<long, std::size_t>> vertex_loc_;
};

namespace detail {

// Basis of A^(x)k ordered lexicographically in {1, X}^k with 1 < X: factor
// j of basis index t is X iff bit (k-1-j) is set.
inline bool tensor_factor_is_x(std::size_t t, std::size_t k, std::size_t j) {
  return (t >> (k - 1 - j)) & 1u;
}

}  // namespace detail

inline KhovanovComplex build_cube(const PDCode& d) {
  const std::size_t n = d.crossing_count();
  if (n > 25)
    throw compute_error("khovanov: cube of resolutions limited to 25 crossings");
  CrossingSigns signs = n == 0 ? CrossingSigns{} : detail::orient(d).signs();
  const long x = static_cast<long>(signs.negative);
  const long y = static_cast<long>(signs.positive);

  const std::uint32_t total = std::uint32_t(1) << n;
  std::vector<detail::CircleData> vertex(total);
  for (std::uint32_t r = 0; r < total; ++r)
    vertex[r] = detail::circle_structure(d, r);

  // Vertices grouped by homological degree |r| - x, ordered by mask; each
  // contributes a block of 2^k basis tensors.
  std::map<long, std::vector<std::uint32_t>> level;
  for (std::uint32_t r = 0; r < total; ++r)
    level[static_cast<long>(std::popcount(r)) - x].push_back(r);

  KhovanovComplex cube;
  cube.diagram_ = d;
  cube.signs_ = signs;

  std::map<long, GradedModule> mods;
  std::vector<std::size_t> offset(total, 0);
  for (const auto& [deg, masks] : level) {
    GradedModule m;
    for (std::uint32_t r : masks) {
      offset[r] = m.degrees.size();
      cube.vertex_loc_[r] = {deg, offset[r]};
      const std::size_t k = vertex[r].total_count;
      const long shift = 2 * x - y - static_cast<long>(std::popcount(r));
      const std::size_t dim = std::size_t(1) << k;
      for (std::size_t t = 0; t < dim; ++t)
        m.degrees.push_back(2 * static_cast<long>(std::popcount(t)) -
                            static_cast<long>(k) + shift);
    }
    mods.emplace(deg, std::move(m));
  }

  // differential(deg + 1): rows indexed by level deg, columns by deg + 1.
  std::map<long, RationalMatrix> diffs;
  for (const auto& [deg, masks] : level) {
    auto above = level.find(deg + 1);
    if (above == level.end()) continue;
    RationalMatrix mat(mods.at(deg).dim(), mods.at(deg + 1).dim());

    for (std::uint32_t r : masks) {
      const detail::CircleData& src = vertex[r];
      const std::size_t k = src.total_count;

      // smallest edge label in each labeled circle, for factor matching
      std::vector<long> rep(src.labeled_count, 0);
      for (long e = static_cast<long>(d.edge_count()); e >= 1; --e)
        rep[src.circle_of_edge[static_cast<std::size_t>(e)]] = e;

      for (std::size_t p = 0; p < n; ++p) {
        if ((r >> p) & 1u) continue;
        const std::uint32_t r2 = r | (std::uint32_t(1) << p);
        const detail::CircleData& dst = vertex[r2];
        const std::size_t k2 = dst.total_count;
        const Rat sign((std::popcount(r & ((std::uint32_t(1) << p) - 1)) % 2 == 0)
                           ? 1
                           : -1);
        const auto& e = d.crossings()[p].e;
        const std::size_t fa = src.circle_of_edge[static_cast<std::size_t>(e[0])];
        const std::size_t fc = src.circle_of_edge[static_cast<std::size_t>(e[2])];
        const bool merge = fa != fc;

        // factor alignment: unchanged circles matched by a member edge,
        // free circles by position
        std::vector<std::size_t> target_of(k, k2);
        for (std::size_t f = 0; f < src.labeled_count; ++f) {
          if (f == fa || f == fc) continue;
          target_of[f] = dst.circle_of_edge[static_cast<std::size_t>(rep[f])];
        }
        for (std::size_t f = src.labeled_count; f < k; ++f)
          target_of[f] = dst.labeled_count + (f - src.labeled_count);

        const std::size_t g1 = dst.circle_of_edge[static_cast<std::size_t>(e[0])];
        const std::size_t g2 =
            merge ? g1 : dst.circle_of_edge[static_cast<std::size_t>(e[1])];

        const std::size_t src_dim = std::size_t(1) << k;
        for (std::size_t t = 0; t < src_dim; ++t) {
          // copy the untouched factors into the target index
          std::size_t base = 0;
          for (std::size_t f = 0; f < k; ++f) {
            if (f == fa || f == fc) continue;
            if (detail::tensor_factor_is_x(t, k, f))
              base |= std::size_t(1) << (k2 - 1 - target_of[f]);
          }
          auto set_x = [&](std::size_t g, std::size_t idx) {
            return idx | (std::size_t(1) << (k2 - 1 - g));
          };
          const bool xa = detail::tensor_factor_is_x(t, k, fa);
          if (merge) {
            const bool xc = detail::tensor_factor_is_x(t, k, fc);
            std::optional<AGen> prod = FrobeniusAlgebraA::multiply(
                xa ? AGen::X : AGen::unit, xc ? AGen::X : AGen::unit);
            if (!prod) continue;  // X*X = 0
            std::size_t t2 = base;
            if (*prod == AGen::X) t2 = set_x(g1, t2);
            mat.add(offset[r] + t, offset[r2] + t2, sign);
          } else {
            for (const auto& [u, v] : FrobeniusAlgebraA::comultiply(
                     xa ? AGen::X : AGen::unit)) {
              std::size_t t2 = base;
              if (u == AGen::X) t2 = set_x(g1, t2);
              if (v == AGen::X) t2 = set_x(g2, t2);
              mat.add(offset[r] + t, offset[r2] + t2, sign);
            }
          }
        }
      }
    }
    if (!mat.is_zero()) diffs.emplace(deg + 1, std::move(mat));
  }

  cube.complex_ = GradedChainComplex(std::move(mods), std::move(diffs));
  return cube;
}

// Bigraded link homology over Q.
inline HomologyTable khovanov_homology(const PDCode& d) {
  return homology(build_cube(d).complex());
}

// Graded Euler characteristic of C(D); equals jones(d) exactly.
inline LaurentPoly graded_euler(const PDCode& d) {
  return euler_characteristic(build_cube(d).complex());
}

}  // namespace khom
