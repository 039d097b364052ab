#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "etaforge/exact.hpp"

namespace etaforge {

/// Truncated q-series q^{offset}·Σ_{i<T} c_i q^i with offset ∈ (1/24)ℤ.
///
/// The stored coefficients are exactly the known ones: a series with
/// truncation T determines every coefficient with exponent below offset + T
/// and nothing beyond. Operations never extend that window.
class QExpansion {
 public:
  /// offset24 is 24·offset. Leading zeros are stripped (shrinking the window).
  QExpansion(std::int64_t offset24, std::vector<BigInt> coeffs);

  static QExpansion one(std::size_t truncation);
  static QExpansion zero(std::size_t truncation);

  std::int64_t offset24() const { return offset24_; }
  Rational offset() const { return Rational(offset24_) / Rational(24); }
  std::size_t truncation() const { return coeffs_.size(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// Coefficient of q^{exponent}; zero below the offset, InsufficientPrecision past the window.
  BigInt coefficient_at(const Rational& exponent) const;
  /// Coefficient of q^n for an integer exponent n (offset must be integral).
  BigInt coefficient(std::int64_t n) const;

  /// Substitutes q -> q^delta.
  QExpansion dilate(std::int64_t delta) const;
  /// Keeps at most `truncation` coefficients.
  QExpansion truncated(std::size_t truncation) const;

  std::string to_string(std::size_t max_terms = 12) const;

  friend bool operator==(const QExpansion& a, const QExpansion& b) {
    return a.offset24_ == b.offset24_ && a.coeffs_ == b.coeffs_;
  }

 private:
  QExpansion() = default;
  void normalize();
  std::int64_t offset24_ = 0;
  std::vector<BigInt> coeffs_;
};

/// η(z) = q^{1/24}∏(1 - q^n) to T coefficients, via Euler's pentagonal number theorem.
QExpansion eta_expansion(std::size_t truncation);

QExpansion series_mul(const QExpansion& f, const QExpansion& g);
/// Exact inverse; the leading coefficient must be ±1.
QExpansion series_inverse(const QExpansion& f);
QExpansion series_int_pow(const QExpansion& f, std::int64_t exponent);

}  // namespace etaforge
