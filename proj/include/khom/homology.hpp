#pragma once

#include <map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "khom/errors.hpp"
#include "khom/graded_complex.hpp"

namespace khom {

// Bigraded homology dimensions keyed by (homological degree n, q-degree m).
// Absent keys are zero; stored values are strictly positive.
struct HomologyTable {
  std::map<std::pair<long, long>, std::size_t> dims;

  std::size_t dim(long n, long m) const {
    auto it = dims.find({n, m});
    return it == dims.end() ? 0 : it->second;
  }

  std::size_t total_dim() const {
    std::size_t t = 0;
    for (const auto& [k, d] : dims) t += d;
    return t;
  }

  bool empty() const { return dims.empty(); }

  // Sum over (n, m) of (-1)^n dim q^m.
  LaurentPoly graded_euler() const {
    LaurentPoly chi;
    for (const auto& [k, d] : dims)
      chi.add_term(k.second, (k.first % 2 == 0) ? Int(d) : -Int(d));
    return chi;
  }

  friend bool operator==(const HomologyTable& a, const HomologyTable& b) {
    return a.dims == b.dims;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, d] : dims)
      arr.push_back({{"n", k.first}, {"m", k.second}, {"dim", d}});
    return arr;
  }

  static HomologyTable from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw parse_error("homology table: expected a JSON array");
    HomologyTable t;
    for (const auto& e : j) {
      std::size_t d = e.at("dim").get<std::size_t>();
      if (d > 0) t.dims[{e.at("n").get<long>(), e.at("m").get<long>()}] = d;
    }
    return t;
  }
};

namespace detail {

// Basis indices of the module at degree n, grouped by q-degree.
inline std::map<long, std::vector<std::size_t>> degree_blocks(
    const GradedModule& m) {
  std::map<long, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < m.degrees.size(); ++i)
    blocks[m.degrees[i]].push_back(i);
  return blocks;
}

// Ranks of one differential split by q-degree. The differential preserves
// q-degree, so it is block-diagonal over these index sets and the blocks can
// be eliminated independently.
inline std::map<long, std::size_t> blockwise_ranks(
    const RationalMatrix& d, const GradedModule& target,
    const GradedModule& source) {
  std::map<long, std::size_t> ranks;
  auto tgt_blocks = degree_blocks(target);
  auto src_blocks = degree_blocks(source);
  for (const auto& [m, cols] : src_blocks) {
    auto rows_it = tgt_blocks.find(m);
    if (rows_it == tgt_blocks.end()) continue;
    std::size_t r = d.submatrix(rows_it->second, cols).rank();
    if (r > 0) ranks[m] = r;
  }
  return ranks;
}

}  // namespace detail

// Bigraded homology over Q: dim H_n^m = dim C_n^m - rank(d_n^m) -
// rank(d_{n+1}^m), with ranks from exact fraction-free elimination.
// Requires a valid complex.
inline HomologyTable homology(const GradedChainComplex& c) {
  if (!verify_complex(c))
    throw compute_error(
        "homology: complex violates d*d = 0 or q-degree preservation");
  std::map<long, std::map<long, std::size_t>> ranks;  // n -> (m -> rank d_n)
  for (const auto& [n, d] : c.differentials())
    ranks[n] = detail::blockwise_ranks(d, c.module(n - 1), c.module(n));

  HomologyTable table;
  for (const auto& [n, mod] : c.modules()) {
    for (const auto& [m, idx] : detail::degree_blocks(mod)) {
      std::size_t dim = idx.size();
      auto out_it = ranks.find(n);
      if (out_it != ranks.end()) {
        auto r = out_it->second.find(m);
        if (r != out_it->second.end()) dim -= r->second;
      }
      auto in_it = ranks.find(n + 1);
      if (in_it != ranks.end()) {
        auto r = in_it->second.find(m);
        if (r != in_it->second.end()) dim -= r->second;
      }
      if (dim > 0) table.dims[{n, m}] = dim;
    }
  }
  return table;
}

}  // namespace khom
