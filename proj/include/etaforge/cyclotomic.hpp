#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "etaforge/exact.hpp"

namespace etaforge {

/// ℚ[x]/Φ_m(x) with a precomputed table of x^k mod Φ_m for 0 <= k < m.
class CyclotomicRing {
 public:
  static std::shared_ptr<const CyclotomicRing> make(std::int64_t order);

  std::int64_t order() const { return order_; }
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }
  const IntPolynomial& modulus() const { return modulus_; }
  /// Power-basis coordinates of x^(k mod m).
  const std::vector<BigInt>& power(std::int64_t k) const;

 private:
  explicit CyclotomicRing(std::int64_t order);
  std::int64_t order_;
  IntPolynomial modulus_;
  std::vector<std::vector<BigInt>> powers_;
};

using RingPtr = std::shared_ptr<const CyclotomicRing>;

/// Element of ℚ(ζ_m) in the power basis 1, ζ, …, ζ^{φ(m)-1}; always fully reduced.
class CycloElement {
 public:
  CycloElement(RingPtr ring, const Rational& constant = Rational(0));

  static CycloElement root_power(RingPtr ring, std::int64_t k);
  /// Σ_k counts[k]·ζ^k with counts of length m (exponents taken mod m).
  static CycloElement from_exponent_counts(RingPtr ring, std::span<const std::int64_t> counts);

  const RingPtr& ring() const { return ring_; }
  std::int64_t order() const { return ring_->order(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;

  CycloElement& operator+=(const CycloElement& rhs);
  CycloElement& operator-=(const CycloElement& rhs);
  CycloElement& operator*=(const Rational& scalar);
  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(CycloElement a, const Rational& s) { return a *= s; }
  friend bool operator==(const CycloElement& a, const CycloElement& b);

  /// Multiplies by ζ^k.
  CycloElement shifted(std::int64_t k) const;

 private:
  void check_same_ring(const CycloElement& other) const;
  RingPtr ring_;
  std::vector<Rational> coeffs_;
};

/// Constant coordinate of e; throws NotRational if any other coordinate is nonzero.
Rational cyclo_project_rational(const CycloElement& e);

}  // namespace etaforge
