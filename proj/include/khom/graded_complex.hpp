#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "khom/laurent.hpp"
#include "khom/rational_matrix.hpp"

namespace khom {

// Finite-dimensional graded vector space over Q, represented by the ordered
// list of q-degrees of its basis elements. The basis order is explicit and
// stable; matrices index into it.
struct GradedModule {
  std::vector<long> degrees;

  GradedModule() = default;
  explicit GradedModule(std::vector<long> d) : degrees(std::move(d)) {}

  std::size_t dim() const { return degrees.size(); }

  LaurentPoly gdim() const {
    LaurentPoly p;
    for (long d : degrees) p.add_term(d, 1);
    return p;
  }

  GradedModule shifted(long dq) const {
    GradedModule m(*this);
    for (long& d : m.degrees) d += dq;
    return m;
  }

  static GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
    GradedModule m(a);
    m.degrees.insert(m.degrees.end(), b.degrees.begin(), b.degrees.end());
    return m;
  }

  // Basis ordered a-major: (a_i, b_j) at position i*dim(b)+j.
  static GradedModule tensor(const GradedModule& a, const GradedModule& b) {
    GradedModule m;
    m.degrees.reserve(a.dim() * b.dim());
    for (long da : a.degrees)
      for (long db : b.degrees) m.degrees.push_back(da + db);
    return m;
  }

  friend bool operator==(const GradedModule& a, const GradedModule& b) {
    return a.degrees == b.degrees;
  }
};

inline LaurentPoly gdim(const GradedModule& m) { return m.gdim(); }

// Bounded complex of graded vector spaces. differential(n) maps degree n to
// degree n-1; absent modules are zero. Immutable after construction.
class GradedChainComplex {
 public:
  GradedChainComplex() = default;

  GradedChainComplex(std::map<long, GradedModule> modules,
                     std::map<long, RationalMatrix> differentials)
      : modules_(std::move(modules)), diffs_(std::move(differentials)) {
    for (auto it = modules_.begin(); it != modules_.end();)
      it = it->second.dim() == 0 ? modules_.erase(it) : std::next(it);
    for (auto it = diffs_.begin(); it != diffs_.end();) {
      const RationalMatrix& d = it->second;
      if (d.rows() != module(it->first - 1).dim() ||
          d.cols() != module(it->first).dim())
        throw std::invalid_argument("complex: differential shape mismatch");
      it = d.is_zero() ? diffs_.erase(it) : std::next(it);
    }
  }

  const std::map<long, GradedModule>& modules() const { return modules_; }
  const std::map<long, RationalMatrix>& differentials() const { return diffs_; }

  // Zero module for degrees not present.
  const GradedModule& module(long n) const {
    static const GradedModule kZero;
    auto it = modules_.find(n);
    return it == modules_.end() ? kZero : it->second;
  }

  // Zero matrix of the right shape for degrees with no stored differential.
  RationalMatrix differential(long n) const {
    auto it = diffs_.find(n);
    if (it != diffs_.end()) return it->second;
    return RationalMatrix(module(n - 1).dim(), module(n).dim());
  }

  bool empty() const { return modules_.empty(); }

  std::size_t total_dim() const {
    std::size_t t = 0;
    for (const auto& [n, m] : modules_) t += m.dim();
    return t;
  }

  friend bool operator==(const GradedChainComplex& a,
                         const GradedChainComplex& b) {
    return a.modules_ == b.modules_ && a.diffs_ == b.diffs_;
  }

 private:
  std::map<long, GradedModule> modules_;
  std::map<long, RationalMatrix> diffs_;
};

// True iff consecutive differentials compose to zero and every nonzero entry
// connects basis elements of equal q-degree. Shape mismatches never reach
// here (the constructor rejects them).
inline bool verify_complex(const GradedChainComplex& c) {
  for (const auto& [n, d] : c.differentials()) {
    const auto& src = c.module(n).degrees;
    const auto& dst = c.module(n - 1).degrees;
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (const auto& [j, v] : d.row(i))
        if (dst[i] != src[j]) return false;
    auto above = c.differentials().find(n + 1);
    if (above != c.differentials().end() && !(d * above->second).is_zero())
      return false;
  }
  return true;
}

// Sum over n of (-1)^n gdim(C_n); by exactness of rank counting this equals
// the same alternating sum over homology.
inline LaurentPoly euler_characteristic(const GradedChainComplex& c) {
  LaurentPoly chi;
  for (const auto& [n, m] : c.modules()) {
    LaurentPoly g = m.gdim();
    chi += (n % 2 == 0) ? g : -g;
  }
  return chi;
}

// Translate homological degree by dn and every q-degree by dq; multiplies the
// Euler characteristic by (-1)^dn q^dq.
inline GradedChainComplex shift(const GradedChainComplex& c, long dn, long dq) {
  std::map<long, GradedModule> mods;
  std::map<long, RationalMatrix> diffs;
  for (const auto& [n, m] : c.modules()) mods.emplace(n + dn, m.shifted(dq));
  for (const auto& [n, d] : c.differentials()) diffs.emplace(n + dn, d);
  return GradedChainComplex(std::move(mods), std::move(diffs));
}

// Degreewise map of complexes; components[n] : source_n -> target_n.
struct ChainMap {
  GradedChainComplex source;
  GradedChainComplex target;
  std::map<long, RationalMatrix> components;

  RationalMatrix component(long n) const {
    auto it = components.find(n);
    if (it != components.end()) return it->second;
    return RationalMatrix(target.module(n).dim(), source.module(n).dim());
  }

  static ChainMap identity(const GradedChainComplex& c) {
    ChainMap f;
    f.source = c;
    f.target = c;
    for (const auto& [n, m] : c.modules())
      f.components.emplace(n, RationalMatrix::identity(m.dim()));
    return f;
  }

  static ChainMap zero(const GradedChainComplex& src,
                       const GradedChainComplex& dst) {
    return ChainMap{src, dst, {}};
  }
};

// A chain map must have well-shaped q-degree-preserving components that
// commute with the differentials.
inline bool verify_chain_map(const ChainMap& f) {
  for (const auto& [n, comp] : f.components) {
    if (comp.rows() != f.target.module(n).dim() ||
        comp.cols() != f.source.module(n).dim())
      throw std::invalid_argument("chain map: component shape mismatch");
    const auto& src = f.source.module(n).degrees;
    const auto& dst = f.target.module(n).degrees;
    for (std::size_t i = 0; i < comp.rows(); ++i)
      for (const auto& [j, v] : comp.row(i))
        if (dst[i] != src[j]) return false;
  }
  std::map<long, char> degrees;
  for (const auto& [n, m] : f.source.modules()) degrees[n] = 1;
  for (const auto& [n, m] : f.target.modules()) degrees[n] = 1;
  for (const auto& [n, unused] : degrees) {
    // d_target o f_n = f_{n-1} o d_source
    RationalMatrix lhs = f.target.differential(n) * f.component(n);
    RationalMatrix rhs = f.component(n - 1) * f.source.differential(n);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// Cone of f : V -> W. Cone(f)_n = V_{n-1} (+) W_n with differential
// -d_V + d_W + f; chi(Cone(f)) = chi(W) - chi(V).
inline GradedChainComplex cone(const ChainMap& f) {
  if (!verify_chain_map(f))
    throw std::invalid_argument("cone: not a valid chain map");
  const GradedChainComplex& v = f.source;
  const GradedChainComplex& w = f.target;

  std::map<long, char> degrees;
  for (const auto& [n, m] : v.modules()) {
    degrees[n + 1] = 1;  // V_n sits in cone degree n+1
    degrees[n] = 1;
  }
  for (const auto& [n, m] : w.modules()) degrees[n] = 1;

  std::map<long, GradedModule> mods;
  std::map<long, RationalMatrix> diffs;
  for (const auto& [n, unused] : degrees) {
    GradedModule m = GradedModule::direct_sum(v.module(n - 1), w.module(n));
    if (m.dim() > 0) mods.emplace(n, m);
  }
  for (const auto& [n, unused] : degrees) {
    const std::size_t vr = v.module(n - 2).dim();  // rows of the V block
    const std::size_t wr = w.module(n - 1).dim();
    const std::size_t vc = v.module(n - 1).dim();  // cols of the V block
    const std::size_t wc = w.module(n).dim();
    RationalMatrix d(vr + wr, vc + wc);
    RationalMatrix dv = v.differential(n - 1);
    for (std::size_t i = 0; i < dv.rows(); ++i)
      for (const auto& [j, val] : dv.row(i)) d.set(i, j, -val);
    RationalMatrix fc = f.component(n - 1);
    for (std::size_t i = 0; i < fc.rows(); ++i)
      for (const auto& [j, val] : fc.row(i)) d.set(vr + i, j, val);
    RationalMatrix dw = w.differential(n);
    for (std::size_t i = 0; i < dw.rows(); ++i)
      for (const auto& [j, val] : dw.row(i)) d.set(vr + i, vc + j, val);
    if (!d.is_zero()) diffs.emplace(n, std::move(d));
  }
  return GradedChainComplex(std::move(mods), std::move(diffs));
}

}  // namespace khom
