#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace khom {

// Generators of the two-dimensional Frobenius algebra A with
// deg(unit) = -1 and deg(X) = +1; gdim(A) = q + q^-1.
enum class AGen : std::uint8_t { unit = 0, X = 1 };

struct FrobeniusAlgebraA {
  static long degree(AGen g) { return g == AGen::X ? 1 : -1; }

  // Multiplication: 1*1 = 1, 1*X = X*1 = X, X*X = 0 (nullopt encodes 0).
  static std::optional<AGen> multiply(AGen u, AGen v) {
    if (u == AGen::X && v == AGen::X) return std::nullopt;
    return (u == AGen::X || v == AGen::X) ? AGen::X : AGen::unit;
  }

  // Comultiplication: Delta(1) = 1 (x) X + X (x) 1, Delta(X) = X (x) X.
  // All coefficients are +1.
  static std::vector<std::pair<AGen, AGen>> comultiply(AGen u) {
    if (u == AGen::X) return {{AGen::X, AGen::X}};
    return {{AGen::unit, AGen::X}, {AGen::X, AGen::unit}};
  }
};

}  // namespace khom
