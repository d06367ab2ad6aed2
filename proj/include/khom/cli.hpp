#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "khom/bracket.hpp"
#include "khom/errors.hpp"
#include "khom/khovanov.hpp"
#include "khom/pagerank.hpp"
#include "khom/simplicial.hpp"

namespace khom::cli {

inline constexpr const char* kVersion = "khom 1.0.0";

// Printed by --version so results are interpretable without reading code.
inline constexpr const char* kConventions =
    "khom 1.0.0\n"
    "conventions:\n"
    "  PD tuple X(a,b,c,d): counterclockwise from the incoming under-strand;"
    " the under-strand runs a -> c\n"
    "  smoothing 0 joins {a,b},{c,d}; smoothing 1 joins {a,d},{b,c}\n"
    "  crossing sign: positive when the over-strand runs d -> b\n"
    "  bracket <D> = sum_r (-q^-1)^|r| (q+q^-1)^circles(r)\n"
    "  jones J = (-1)^x q^(2x-y) <D>, x negative / y positive crossings\n"
    "  gradings deg(1) = -1, deg(X) = +1; vertex r sits in homological"
    " degree |r|-x with q-shift 2x-y-|r|\n";

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline argument or --file path; exactly one of the two.
inline std::string resolve_input(const std::string& inline_arg,
                                 const std::string& file_arg,
                                 const char* what) {
  if (!file_arg.empty()) {
    if (!inline_arg.empty())
      throw parse_error(std::string(what) +
                        ": give either an inline argument or --file, not both");
    return read_file(file_arg);
  }
  if (inline_arg.empty())
    throw parse_error(std::string(what) +
                      ": missing input (inline argument or --file)");
  return inline_arg;
}

inline std::string poincare_text(const HomologyTable& t) {
  if (t.dims.empty()) return "0";
  std::string out;
  for (const auto& [key, dim] : t.dims) {
    const auto& [n, m] = key;
    if (!out.empty()) out += " + ";
    std::vector<std::string> parts;
    if (dim != 1) parts.push_back(std::to_string(dim));
    if (n != 0) parts.push_back(n == 1 ? "t" : "t^" + std::to_string(n));
    if (m != 0) parts.push_back(m == 1 ? "q" : "q^" + std::to_string(m));
    if (parts.empty()) parts.push_back("1");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += "*";
      out += parts[i];
    }
  }
  return out;
}

inline std::string table_text(const HomologyTable& t) {
  std::string out;
  for (const auto& [key, dim] : t.dims)
    out += "n=" + std::to_string(key.first) + " m=" + std::to_string(key.second) +
           " dim=" + std::to_string(dim) + "\n";
  return out;
}

}  // namespace detail

// Dispatch one invocation. Results go to `out`, diagnostics to `err`;
// returns 0 on success, 1 on input errors, 2 on computation errors.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"knot invariants, simplicial homology and PageRank"};
  app.require_subcommand(0, 1);
  auto* version =
      app.add_flag("--version", "print version and pinned conventions");

  std::string format = "text";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  std::string pd_arg, file_arg;
  auto* bracket_cmd =
      app.add_subcommand("bracket", "Kauffman bracket of a planar diagram");
  bracket_cmd->add_option("pd", pd_arg, "PD code, e.g. \"X(1,1,2,2) O\"");
  bracket_cmd->add_option("--file", file_arg, "read the PD code from a file");
  add_format(bracket_cmd);

  auto* jones_cmd =
      app.add_subcommand("jones", "Jones polynomial of an oriented diagram");
  jones_cmd->add_option("pd", pd_arg, "PD code");
  jones_cmd->add_option("--file", file_arg, "read the PD code from a file");
  add_format(jones_cmd);

  bool kh_table = false, kh_poincare = false, kh_euler = false;
  auto* kh_cmd = app.add_subcommand(
      "khovanov", "bigraded link homology from the cube of resolutions");
  kh_cmd->add_option("pd", pd_arg, "PD code");
  kh_cmd->add_option("--file", file_arg, "read the PD code from a file");
  kh_cmd->add_flag("--table", kh_table, "homology dimensions (default)");
  kh_cmd->add_flag("--poincare", kh_poincare, "Poincare polynomial in t, q");
  kh_cmd->add_flag("--euler", kh_euler, "graded Euler characteristic");
  add_format(kh_cmd);

  std::string complex_arg, complex_file;
  auto* chi_cmd = app.add_subcommand(
      "chi", "Euler characteristic of a simplicial complex by simplex counts");
  chi_cmd->add_option("complex", complex_arg,
                      "JSON {\"simplices\": [[v, ...], ...]} of top simplices");
  chi_cmd->add_option("--file", complex_file, "read the complex from a file");
  add_format(chi_cmd);

  auto* betti_cmd =
      app.add_subcommand("betti", "Betti numbers over Q of a simplicial complex");
  betti_cmd->add_option("complex", complex_arg, "JSON complex");
  betti_cmd->add_option("--file", complex_file, "read the complex from a file");
  add_format(betti_cmd);

  std::string complex_arg2, complex_file2;
  auto* product_cmd = app.add_subcommand(
      "product", "staircase triangulation of the product of two complexes");
  product_cmd->add_option("left", complex_arg, "JSON complex");
  product_cmd->add_option("right", complex_arg2, "JSON complex");
  product_cmd->add_option("--file", complex_file, "read the left complex from a file");
  product_cmd->add_option("--file2", complex_file2, "read the right complex from a file");
  add_format(product_cmd);

  std::string graph_file;
  double tol = 1e-12;
  std::size_t max_iter = 100000;
  double damping = 0.0;
  std::string dangling;
  auto* pr_cmd = app.add_subcommand(
      "pagerank", "Perron eigenvector of the web matrix by power iteration");
  pr_cmd->add_option("file", graph_file, "edge list, one `src dst` per line")
      ->required();
  pr_cmd->add_option("--tol", tol, "max-norm convergence tolerance")
      ->capture_default_str();
  pr_cmd->add_option("--max-iter", max_iter, "iteration limit")
      ->capture_default_str();
  auto* damping_opt = pr_cmd->add_option(
      "--damping", damping, "damping factor (extension; default off)");
  pr_cmd->add_option("--dangling", dangling,
                     "dangling-node policy (extension): uniform")
      ->check(CLI::IsMember({"uniform"}));
  add_format(pr_cmd);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const bool json = format == "json";
  try {
    if (*version) {
      out << kConventions;
      return 0;
    }
    if (app.get_subcommands().empty()) {
      err << "error: missing subcommand (try --help)\n";
      return 1;
    }

    if (bracket_cmd->parsed() || jones_cmd->parsed()) {
      PDCode d =
          PDCode::parse(detail::resolve_input(pd_arg, file_arg, "pd"));
      LaurentPoly p = bracket_cmd->parsed() ? kauffman_bracket(d) : jones(d);
      out << (json ? p.to_json().dump() : p.to_text()) << "\n";
      return 0;
    }

    if (kh_cmd->parsed()) {
      if (kh_table + kh_poincare + kh_euler > 1)
        throw parse_error("khovanov: choose one of --table, --poincare, --euler");
      PDCode d =
          PDCode::parse(detail::resolve_input(pd_arg, file_arg, "pd"));
      if (kh_euler) {
        LaurentPoly chi = graded_euler(d);
        out << (json ? chi.to_json().dump() : chi.to_text()) << "\n";
        return 0;
      }
      HomologyTable t = khovanov_homology(d);
      if (kh_poincare) {
        if (json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& [key, dim] : t.dims)
            arr.push_back({{"t", key.first}, {"q", key.second}, {"coeff", dim}});
          out << arr.dump() << "\n";
        } else {
          out << detail::poincare_text(t) << "\n";
        }
        return 0;
      }
      out << (json ? t.to_json().dump() + "\n" : detail::table_text(t));
      return 0;
    }

    if (chi_cmd->parsed() || betti_cmd->parsed()) {
      SimplicialComplex k = SimplicialComplex::parse(
          detail::resolve_input(complex_arg, complex_file, "complex"));
      if (chi_cmd->parsed()) {
        long chi = k.euler_char_by_counts();
        out << (json ? nlohmann::json{{"chi", chi}}.dump() : std::to_string(chi))
            << "\n";
        return 0;
      }
      auto betti = k.betti_numbers();
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [deg, dim] : betti)
          arr.push_back({{"degree", deg}, {"dim", dim}});
        out << arr.dump() << "\n";
      } else {
        for (const auto& [deg, dim] : betti)
          out << "b" << deg << " = " << dim << "\n";
      }
      return 0;
    }

    if (product_cmd->parsed()) {
      SimplicialComplex a = SimplicialComplex::parse(
          detail::resolve_input(complex_arg, complex_file, "left complex"));
      SimplicialComplex b = SimplicialComplex::parse(
          detail::resolve_input(complex_arg2, complex_file2, "right complex"));
      SimplicialComplex p = SimplicialComplex::product(a, b);
      if (json) {
        out << p.to_json().dump() << "\n";
      } else {
        for (long dim = 0; dim <= p.dimension(); ++dim)
          out << "dim " << dim << ": " << p.count(dim) << "\n";
        out << "chi = " << p.euler_char_by_counts() << "\n";
      }
      return 0;
    }

    if (pr_cmd->parsed()) {
      WebGraph g = WebGraph::parse_edge_list(detail::read_file(graph_file));
      PageRankOptions opt;
      opt.tolerance = tol;
      opt.max_iterations = max_iter;
      if (damping_opt->count() > 0) opt.damping = damping;
      opt.dangling_uniform = dangling == "uniform";
      PageRankResult r = pagerank(g, opt);
      auto sorted = r.scores;
      std::stable_sort(sorted.begin(), sorted.end(),
                       [](const auto& a, const auto& b) {
                         return a.second > b.second;
                       });
      if (json) {
        nlohmann::json scores = nlohmann::json::array();
        for (const auto& [node, score] : sorted)
          scores.push_back({{"node", node}, {"score", score}});
        nlohmann::json j{{"scores", scores},
                         {"iterations", r.iterations},
                         {"residual", r.residual}};
        out << j.dump() << "\n";
      } else {
        out.precision(15);
        for (const auto& [node, score] : sorted)
          out << node << "\t" << score << "\n";
        out << "# iterations=" << r.iterations << " residual=" << r.residual
            << "\n";
      }
      return 0;
    }

    err << "error: missing subcommand (try --help)\n";
    return 1;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const compute_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace khom::cli
