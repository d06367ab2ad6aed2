#pragma once

// Test-only oracles kept independent of the library's elimination and state
// sum paths. Everything here is deliberately naive.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "khom/graded_complex.hpp"
#include "khom/homology.hpp"
#include "khom/laurent.hpp"
#include "khom/pd_code.hpp"
#include "khom/rational_matrix.hpp"

namespace oracle {

// Dense Gauss-Jordan rank over Q; no pivoting tricks, no integer scaling.
inline std::size_t rank(const khom::RationalMatrix& m) {
  std::vector<std::vector<khom::Rat>> a(
      m.rows(), std::vector<khom::Rat>(m.cols(), khom::Rat(0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) a[i][j] = v;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    khom::Rat p = a[rank][col];
    for (std::size_t j = 0; j < m.cols(); ++j) a[rank][j] /= p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      khom::Rat f = a[i][col];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Brute-force Kauffman bracket: literal sum over all resolutions with a
// from-scratch circle count per term.
inline khom::LaurentPoly bracket_brute_force(const khom::PDCode& d) {
  const std::size_t n = d.crossing_count();
  khom::LaurentPoly total;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    khom::Resolution r = khom::Resolution::from_mask(mask, n);
    std::size_t k = khom::circles(d, r);
    khom::LaurentPoly term = khom::LaurentPoly::constant(1);
    for (std::size_t i = 0; i < k; ++i)
      term *= khom::LaurentPoly::q_plus_q_inverse();
    for (std::size_t i = 0; i < r.weight(); ++i)
      term *= khom::LaurentPoly::monomial(-1, -1);
    total += term;
  }
  return total;
}

// A graded complex assembled from elementary summands with known homology,
// then scrambled by random q-degree-preserving base changes. Returns the
// complex together with its expected homology table.
struct RandomComplex {
  khom::GradedChainComplex complex;
  khom::HomologyTable expected;
};

inline RandomComplex random_complex(std::mt19937& rng, std::size_t acyclic,
                                    std::size_t free_summands,
                                    std::size_t scrambles = 40) {
  std::uniform_int_distribution<long> deg(-3, 3);
  std::uniform_int_distribution<long> qdeg(-4, 4);

  // Collect basis degrees first: an acyclic summand contributes basis
  // elements at (n, m) and (n-1, m) joined by an identity differential; a
  // free summand contributes one basis element and homology.
  struct Slot {
    long n, m;
    std::size_t index;  // position within module n
  };
  std::map<long, std::vector<long>> degrees;  // n -> q-degrees in order
  auto add_slot = [&](long n, long m) {
    degrees[n].push_back(m);
    return Slot{n, m, degrees[n].size() - 1};
  };

  khom::HomologyTable expected;
  std::vector<std::pair<Slot, Slot>> pairs;  // (source at n, target at n-1)
  for (std::size_t i = 0; i < acyclic; ++i) {
    long n = deg(rng), m = qdeg(rng);
    Slot src = add_slot(n, m);
    Slot dst = add_slot(n - 1, m);
    pairs.push_back({src, dst});
  }
  for (std::size_t i = 0; i < free_summands; ++i) {
    long n = deg(rng), m = qdeg(rng);
    add_slot(n, m);
    ++expected.dims[{n, m}];
  }

  std::map<long, khom::GradedModule> mods;
  for (const auto& [n, ds] : degrees) mods.emplace(n, khom::GradedModule(ds));
  std::map<long, khom::RationalMatrix> diffs;
  for (const auto& [src, dst] : pairs) {
    auto it = diffs.find(src.n);
    if (it == diffs.end())
      it = diffs
               .emplace(src.n, khom::RationalMatrix(
                                   degrees.at(src.n - 1).size(),
                                   degrees.at(src.n).size()))
               .first;
    it->second.set(dst.index, src.index, khom::Rat(1));
  }

  // Random integral base changes e_i <- e_i + c e_j inside one q-degree
  // block: columns of the outgoing differential and rows of the incoming
  // one transform inversely, so d*d = 0 and homology are untouched.
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::vector<long> levels;
  for (const auto& [n, ds] : degrees) levels.push_back(n);
  for (std::size_t s = 0; s < scrambles; ++s) {
    long n = levels[std::uniform_int_distribution<std::size_t>(
        0, levels.size() - 1)(rng)];
    const auto& ds = degrees.at(n);
    if (ds.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j || ds[i] != ds[j]) continue;
    int c = coeff(rng);
    if (c == 0) continue;
    auto out_it = diffs.find(n);
    if (out_it != diffs.end()) {
      khom::RationalMatrix& d = out_it->second;
      for (std::size_t row = 0; row < d.rows(); ++row)
        d.add(row, i, khom::Rat(c) * d.get(row, j));
    }
    auto in_it = diffs.find(n + 1);
    if (in_it != diffs.end()) {
      khom::RationalMatrix& d = in_it->second;
      for (std::size_t col = 0; col < d.cols(); ++col)
        d.add(j, col, khom::Rat(-c) * d.get(i, col));
    }
  }

  return RandomComplex{
      khom::GradedChainComplex(std::move(mods), std::move(diffs)),
      std::move(expected)};
}

// Random q-degree-preserving map h_n : V_n -> W_{n+1}; d h + h d is then a
// chain map (a null-homotopic one), handy as a generator of valid inputs.
inline khom::ChainMap random_null_homotopic_map(std::mt19937& rng,
                                                const khom::GradedChainComplex& v,
                                                const khom::GradedChainComplex& w) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::map<long, khom::RationalMatrix> h;
  for (const auto& [n, src] : v.modules()) {
    const khom::GradedModule& dst = w.module(n + 1);
    if (dst.dim() == 0) continue;
    khom::RationalMatrix m(dst.dim(), src.dim());
    for (std::size_t i = 0; i < dst.dim(); ++i)
      for (std::size_t j = 0; j < src.dim(); ++j)
        if (dst.degrees[i] == src.degrees[j]) m.set(i, j, khom::Rat(coeff(rng)));
    if (!m.is_zero()) h.emplace(n, std::move(m));
  }
  auto h_at = [&](long n) -> khom::RationalMatrix {
    auto it = h.find(n);
    if (it != h.end()) return it->second;
    return khom::RationalMatrix(w.module(n + 1).dim(), v.module(n).dim());
  };

  khom::ChainMap f;
  f.source = v;
  f.target = w;
  std::map<long, char> levels;
  for (const auto& [n, m] : v.modules()) levels[n] = 1;
  for (const auto& [n, unused] : levels) {
    // f_n = d_W(n+1) h(n) + h(n-1) d_V(n)
    khom::RationalMatrix a = w.differential(n + 1) * h_at(n);
    khom::RationalMatrix b = h_at(n - 1) * v.differential(n);
    khom::RationalMatrix sum(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (const auto& [j, val] : a.row(i)) sum.add(i, j, val);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (const auto& [j, val] : b.row(i)) sum.add(i, j, val);
    if (!sum.is_zero()) f.components.emplace(n, std::move(sum));
  }
  return f;
}

}  // namespace oracle
