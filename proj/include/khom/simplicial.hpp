#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "khom/errors.hpp"
#include "khom/graded_complex.hpp"
#include "khom/homology.hpp"

namespace khom {

// Finite abstract simplicial complex over opaque string vertex identifiers.
// Simplices are strictly sorted vertex tuples; the complex is saturated
// downward at construction so it is always closed under faces.
class SimplicialComplex {
 public:
  using Simplex = std::vector<std::string>;

  SimplicialComplex() = default;

  static SimplicialComplex from_top_simplices(
      const std::vector<Simplex>& tops) {
    SimplicialComplex k;
    for (Simplex s : tops) {
      if (s.empty()) throw parse_error("simplicial: empty simplex");
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw parse_error("simplicial: repeated vertex in simplex");
      k.insert_with_faces(std::move(s));
    }
    return k;
  }

  // {"simplices": [[v, ...], ...]} listing top simplices; vertices may be
  // strings or numbers.
  static SimplicialComplex from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("simplices") || !j["simplices"].is_array())
      throw parse_error("simplicial: expected {\"simplices\": [[v, ...], ...]}");
    std::vector<Simplex> tops;
    for (const auto& js : j["simplices"]) {
      if (!js.is_array())
        throw parse_error("simplicial: each simplex must be an array");
      Simplex s;
      for (const auto& v : js) {
        if (v.is_string())
          s.push_back(v.get<std::string>());
        else if (v.is_number_integer())
          s.push_back(std::to_string(v.get<long long>()));
        else
          throw parse_error("simplicial: vertex must be a string or integer");
      }
      tops.push_back(std::move(s));
    }
    return from_top_simplices(tops);
  }

  static SimplicialComplex parse(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("simplicial: invalid JSON");
    return from_json(j);
  }

  bool empty() const { return by_dim_.empty(); }

  // -1 for the empty complex.
  long dimension() const {
    return by_dim_.empty() ? -1 : by_dim_.rbegin()->first;
  }

  std::size_t count(long dim) const {
    auto it = by_dim_.find(dim);
    return it == by_dim_.end() ? 0 : it->second.size();
  }

  const std::set<Simplex>& simplices(long dim) const {
    static const std::set<Simplex> kEmpty;
    auto it = by_dim_.find(dim);
    return it == by_dim_.end() ? kEmpty : it->second;
  }

  std::set<std::string> vertices() const {
    std::set<std::string> v;
    for (const auto& s : simplices(0)) v.insert(s[0]);
    return v;
  }

  // Simplices not contained in any higher-dimensional simplex.
  std::vector<Simplex> top_simplices() const {
    std::vector<Simplex> tops;
    for (const auto& [d, set_d] : by_dim_) {
      std::set<Simplex> faces_of_higher;
      auto above = by_dim_.find(d + 1);
      if (above != by_dim_.end()) {
        for (const Simplex& s : above->second)
          for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f(s);
            f.erase(f.begin() + static_cast<long>(i));
            faces_of_higher.insert(std::move(f));
          }
      }
      for (const Simplex& s : set_d)
        if (!faces_of_higher.count(s)) tops.push_back(s);
    }
    return tops;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Simplex& s : top_simplices()) arr.push_back(s);
    return nlohmann::json{{"simplices", arr}};
  }

  // chi = sum_n (-1)^n |S_n|, straight from simplex counts.
  long euler_char_by_counts() const {
    long chi = 0;
    for (const auto& [d, set_d] : by_dim_)
      chi += (d % 2 == 0) ? static_cast<long>(set_d.size())
                          : -static_cast<long>(set_d.size());
    return chi;
  }

  // Chain complex with basis S_n in degree n (all q-degrees 0) and
  // d[v0,...,vn] = sum_i (-1)^i [v0,...,^vi,...,vn].
  GradedChainComplex boundary_complex() const {
    std::map<long, GradedModule> mods;
    std::map<long, std::map<Simplex, std::size_t>> index;
    for (const auto& [d, set_d] : by_dim_) {
      mods.emplace(d, GradedModule(std::vector<long>(set_d.size(), 0)));
      std::size_t i = 0;
      for (const Simplex& s : set_d) index[d][s] = i++;
    }
    std::map<long, RationalMatrix> diffs;
    for (const auto& [d, set_d] : by_dim_) {
      if (d == 0) continue;
      RationalMatrix m(count(d - 1), count(d));
      std::size_t col = 0;
      for (const Simplex& s : set_d) {
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex f(s);
          f.erase(f.begin() + static_cast<long>(i));
          m.add(index[d - 1][f], col, (i % 2 == 0) ? Rat(1) : Rat(-1));
        }
        ++col;
      }
      diffs.emplace(d, std::move(m));
    }
    return GradedChainComplex(std::move(mods), std::move(diffs));
  }

  // Homology dimensions over Q, degree -> Betti number (zeros omitted).
  std::map<long, std::size_t> betti_numbers() const {
    std::map<long, std::size_t> betti;
    for (const auto& [k, dim] : homology(boundary_complex()).dims)
      betti[k.first] = dim;
    return betti;
  }

  // Vertex sets made disjoint by tagging with "L/" and "R/".
  static SimplicialComplex disjoint_union(const SimplicialComplex& a,
                                          const SimplicialComplex& b) {
    SimplicialComplex k;
    for (const auto& [d, set_d] : a.by_dim_)
      for (const Simplex& s : set_d) k.insert_sorted(tagged(s, "L/"));
    for (const auto& [d, set_d] : b.by_dim_)
      for (const Simplex& s : set_d) k.insert_sorted(tagged(s, "R/"));
    return k;
  }

  // Staircase (shuffle) triangulation of the product. For top simplices of
  // dimensions p and q, the top cells are the monotone lattice paths in the
  // (p+1) x (q+1) grid of vertex pairs, using the orders inherited from the
  // sorted tuples.
  static SimplicialComplex product(const SimplicialComplex& a,
                                   const SimplicialComplex& b) {
    if (a.empty() || b.empty())
      throw compute_error("product: both complexes must be nonempty");
    std::vector<Simplex> tops;
    for (const Simplex& s : a.top_simplices()) {
      for (const Simplex& t : b.top_simplices()) {
        const std::size_t p = s.size() - 1, q = t.size() - 1;
        // Paths as bitmasks over p+q moves; bit set = step in s.
        std::vector<std::uint32_t> moves;
        enumerate_shuffles(p, q, 0, 0, 0, moves);
        for (std::uint32_t mv : moves) {
          Simplex cell;
          std::size_t i = 0, j = 0;
          cell.push_back(pair_vertex(s[0], t[0]));
          for (std::size_t step = 0; step < p + q; ++step) {
            if ((mv >> step) & 1u)
              ++i;
            else
              ++j;
            cell.push_back(pair_vertex(s[i], t[j]));
          }
          std::sort(cell.begin(), cell.end());
          tops.push_back(std::move(cell));
        }
      }
    }
    return from_top_simplices(tops);
  }

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.by_dim_ == b.by_dim_;
  }

 private:
  void insert_sorted(Simplex s) { by_dim_[static_cast<long>(s.size()) - 1].insert(std::move(s)); }

  void insert_with_faces(Simplex s) {
    long d = static_cast<long>(s.size()) - 1;
    auto [it, inserted] = by_dim_[d].emplace(s);
    if (!inserted) return;
    if (d == 0) return;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f(s);
      f.erase(f.begin() + static_cast<long>(i));
      insert_with_faces(std::move(f));
    }
  }

  static Simplex tagged(const Simplex& s, const char* tag) {
    Simplex t;
    t.reserve(s.size());
    for (const std::string& v : s) t.push_back(tag + v);
    return t;
  }

  // "(u,v)" with "," and "\" escaped so distinct pairs stay distinct.
  static std::string pair_vertex(const std::string& u, const std::string& v) {
    auto escape = [](const std::string& x) {
      std::string out;
      for (char c : x) {
        if (c == '\\' || c == ',') out += '\\';
        out += c;
      }
      return out;
    };
    return "(" + escape(u) + "," + escape(v) + ")";
  }

  static void enumerate_shuffles(std::size_t p, std::size_t q, std::size_t i,
                                 std::size_t j, std::uint32_t prefix,
                                 std::vector<std::uint32_t>& out) {
    if (i == p && j == q) {
      out.push_back(prefix);
      return;
    }
    if (i < p) enumerate_shuffles(p, q, i + 1, j, prefix | (1u << (i + j)), out);
    if (j < q) enumerate_shuffles(p, q, i, j + 1, prefix, out);
  }

  std::map<long, std::set<Simplex>> by_dim_;
};

inline long euler_char_counts(const SimplicialComplex& k) {
  return k.euler_char_by_counts();
}

}  // namespace khom
