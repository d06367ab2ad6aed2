#pragma once

#include <stdexcept>
#include <string>

namespace khom {

// Malformed user input: grammar violations, bad labels, unreadable files.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input on which the requested computation is undefined:
// non-irreducible graphs, dangling nodes, unorientable diagrams,
// precondition failures, non-convergence.
class compute_error : public std::runtime_error {
 public:
  explicit compute_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace khom
