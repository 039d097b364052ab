#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "etaforge/exact.hpp"

namespace etaforge {

using RationalVector = std::vector<Rational>;
/// Row-major dense matrix.
using RationalMatrix = std::vector<RationalVector>;

/// Exact rank by Gaussian elimination.
std::size_t rank(RationalMatrix m);

/// Solves A·x = b for square nonsingular A; throws SingularSystem otherwise.
RationalVector solve_square(RationalMatrix a, RationalVector b);

/// Incrementally maintained row-echelon basis of a subspace of ℚ^n.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dimension) : dimension_(dimension) {}

  /// Inserts v if it is independent of the current span; returns whether the rank grew.
  bool insert(const RationalVector& v);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::optional<RationalVector> reduce(RationalVector v) const;
  std::size_t dimension_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace etaforge
