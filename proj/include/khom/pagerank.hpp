#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "khom/errors.hpp"
#include "khom/rational_matrix.hpp"

namespace khom {

// Finite directed graph without self-loops or duplicate edges; node order is
// the order of first appearance.
class WebGraph {
 public:
  WebGraph() = default;

  static WebGraph from_edges(
      const std::vector<std::pair<std::string, std::string>>& edges) {
    WebGraph g;
    for (const auto& [src, dst] : edges) {
      std::size_t i = g.intern(src);
      std::size_t j = g.intern(dst);
      if (i == j) continue;  // a page linking to itself contributes no edge
      auto& out = g.out_[i];
      if (std::find(out.begin(), out.end(), j) == out.end()) out.push_back(j);
    }
    for (auto& out : g.out_) std::sort(out.begin(), out.end());
    return g;
  }

  // One `src dst` pair per line; `#` starts a comment. A line with a single
  // token declares an isolated node.
  static WebGraph parse_edge_list(const std::string& text) {
    WebGraph g;
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> isolated;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      std::string src, dst, extra;
      if (!(ls >> src)) continue;
      if (!(ls >> dst)) {
        isolated.push_back(src);
        continue;
      }
      if (ls >> extra)
        throw parse_error("edge list: line " + std::to_string(lineno) +
                          ": expected `src dst`, got extra token '" + extra +
                          "'");
      edges.push_back({src, dst});
    }
    g = from_edges(edges);
    for (const std::string& v : isolated) g.intern(v);
    g.out_.resize(g.nodes_.size());
    return g;
  }

  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<std::size_t>& out(std::size_t i) const { return out_[i]; }
  std::size_t out_degree(std::size_t i) const { return out_[i].size(); }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& o : out_) n += o.size();
    return n;
  }

 private:
  std::size_t intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    std::size_t i = nodes_.size();
    index_.emplace(name, i);
    nodes_.push_back(name);
    out_.emplace_back();
    return i;
  }

  std::vector<std::string> nodes_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> out_;
};

// Column-stochastic web matrix as exact rational columns: column i holds
// entry 1/N_i in row j for each edge i -> j.
struct WebMatrix {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::size_t, Rat>>> columns;
};

inline WebMatrix web_matrix(const WebGraph& g) {
  WebMatrix m;
  m.n = g.node_count();
  m.columns.resize(m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    const auto& out = g.out(i);
    if (out.empty())
      throw compute_error("web matrix: dangling node '" + g.nodes()[i] +
                          "' has no outgoing edges");
    Rat w(1, static_cast<unsigned long>(out.size()));
    for (std::size_t j : out) m.columns[i].push_back({j, w});
  }
  return m;
}

// Strong connectivity via two reachability sweeps: the graph is irreducible
// iff every node is reachable from node 0 along edges and along reversed
// edges.
inline bool is_irreducible(const WebGraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return false;
  std::vector<std::vector<std::size_t>> rev(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : g.out(i)) rev[j].push_back(i);
  auto reaches_all = [&](auto&& neighbours) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t found = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : neighbours(v))
        if (!seen[w]) {
          seen[w] = 1;
          ++found;
          stack.push_back(w);
        }
    }
    return found == n;
  };
  return reaches_all([&](std::size_t v) -> const std::vector<std::size_t>& {
           return g.out(v);
         }) &&
         reaches_all([&](std::size_t v) -> const std::vector<std::size_t>& {
           return rev[v];
         });
}

struct PageRankOptions {
  double tolerance = 1e-12;
  std::size_t max_iterations = 100000;
  // Extensions beyond the undamped model; both default off.
  std::optional<double> damping;
  bool dangling_uniform = false;
};

struct PageRankResult {
  std::vector<std::pair<std::string, double>> scores;  // in node order
  std::size_t iterations = 0;
  double residual = 0.0;  // max-norm of Av - v at the returned vector
};

// Power iteration from the uniform vector, renormalized to sum 1 each step;
// stops when the max-norm change drops below the tolerance. The matrix is
// column-stochastic, so the fixed point is the Perron vector.
inline PageRankResult pagerank(const WebGraph& g,
                               const PageRankOptions& opt = {}) {
  const std::size_t n = g.node_count();
  if (n == 0) throw compute_error("pagerank: empty graph");
  if (opt.damping && (*opt.damping <= 0.0 || *opt.damping > 1.0))
    throw compute_error("pagerank: damping must lie in (0, 1]");

  std::vector<char> dangling(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (g.out_degree(i) == 0) {
      if (!opt.dangling_uniform)
        throw compute_error("pagerank: dangling node '" + g.nodes()[i] +
                            "' has no outgoing edges");
      dangling[i] = 1;
    }

  if (!opt.damping) {
    // Undamped model: uniqueness of the eigenvector needs irreducibility of
    // the effective matrix. With --dangling=uniform a dangling column links
    // to every page, so the check runs on that effective graph.
    bool irreducible;
    if (opt.dangling_uniform &&
        std::any_of(dangling.begin(), dangling.end(), [](char c) { return c; })) {
      std::vector<std::pair<std::string, std::string>> effective;
      for (std::size_t i = 0; i < n; ++i) {
        if (dangling[i]) {
          for (std::size_t j = 0; j < n; ++j)
            if (i != j) effective.push_back({g.nodes()[i], g.nodes()[j]});
        } else {
          for (std::size_t j : g.out(i))
            effective.push_back({g.nodes()[i], g.nodes()[j]});
        }
      }
      irreducible = is_irreducible(WebGraph::from_edges(effective));
    } else {
      irreducible = is_irreducible(g);
    }
    if (!irreducible)
      throw compute_error(
          "pagerank: graph is not irreducible (not strongly connected); "
          "the stationary vector is not unique");
  }

  const double d = opt.damping.value_or(1.0);
  std::vector<double> v(n, 1.0 / static_cast<double>(n)), next(n);
  auto apply = [&](const std::vector<double>& from, std::vector<double>& to) {
    std::fill(to.begin(), to.end(), 0.0);
    double dangling_mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (dangling[i]) {
        dangling_mass += from[i];
        continue;
      }
      const double share = from[i] / static_cast<double>(g.out_degree(i));
      for (std::size_t j : g.out(i)) to[j] += share;
    }
    const double base =
        (1.0 - d) / static_cast<double>(n) +
        d * dangling_mass / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) to[j] = d * to[j] + base;
  };

  std::size_t iterations = 0;
  for (; iterations < opt.max_iterations; ++iterations) {
    apply(v, next);
    double sum = 0.0;
    for (double x : next) sum += x;
    for (double& x : next) x /= sum;
    double delta = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      delta = std::max(delta, std::abs(next[j] - v[j]));
    v.swap(next);
    if (delta < opt.tolerance) break;
  }
  if (iterations == opt.max_iterations)
    throw compute_error(
        "pagerank: no convergence after " + std::to_string(iterations) +
        " iterations (the graph may be periodic)");

  apply(v, next);
  double residual = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    residual = std::max(residual, std::abs(next[j] - v[j]));

  PageRankResult result;
  result.iterations = iterations + 1;
  result.residual = residual;
  for (std::size_t i = 0; i < n; ++i) result.scores.push_back({g.nodes()[i], v[i]});
  return result;
}

}  // namespace khom
