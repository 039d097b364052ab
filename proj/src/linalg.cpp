#include "etaforge/linalg.hpp"

#include <utility>

namespace etaforge {

std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

RationalVector solve_square(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DomainError("dimension mismatch in linear solve");
  for (const auto& row : a)
    if (row.size() != n) throw DomainError("matrix is not square");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c].is_zero()) ++pivot;
    if (pivot == n) throw SingularSystem("singular linear system");
    std::swap(a[pivot], a[c]);
    std::swap(b[pivot], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Rational factor = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= factor * a[c][j];
      b[i] -= factor * b[c];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::optional<RationalVector> EchelonBasis::reduce(RationalVector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p].is_zero()) continue;
    const Rational factor = v[p] / rows_[k][p];
    for (std::size_t j = 0; j < dimension_; ++j)
      if (!rows_[k][j].is_zero()) v[j] -= factor * rows_[k][j];
  }
  for (const auto& x : v)
    if (!x.is_zero()) return v;
  return std::nullopt;
}

bool EchelonBasis::insert(const RationalVector& v) {
  if (v.size() != dimension_) throw DomainError("vector has wrong dimension");
  auto reduced = reduce(v);
  if (!reduced) return false;
  std::size_t p = 0;
  while ((*reduced)[p].is_zero()) ++p;
  // Keep existing rows reduced at the new pivot so later reductions stay single-pass.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k][p].is_zero()) continue;
    const Rational factor = rows_[k][p] / (*reduced)[p];
    for (std::size_t j = 0; j < dimension_; ++j) rows_[k][j] -= factor * (*reduced)[j];
  }
  rows_.push_back(std::move(*reduced));
  pivots_.push_back(p);
  return true;
}

}  // namespace etaforge
