#include "etaforge/cyclotomic.hpp"

namespace etaforge {

CyclotomicRing::CyclotomicRing(std::int64_t order) : order_(order), modulus_(cyclotomic_polynomial(order)) {
  const std::size_t deg = degree();
  powers_.reserve(static_cast<std::size_t>(order));
  // x^0 .. x^{deg-1} are basis vectors; x^{k+1} = x·x^k reduced with the monic modulus.
  std::vector<BigInt> current(deg, 0);
  if (deg > 0) current[0] = 1;
  for (std::int64_t k = 0; k < order; ++k) {
    powers_.push_back(current);
    if (deg == 0) continue;
    const BigInt top = current[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i) current[i] -= top * modulus_.coefficient(i);
  }
}

std::shared_ptr<const CyclotomicRing> CyclotomicRing::make(std::int64_t order) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  return std::shared_ptr<const CyclotomicRing>(new CyclotomicRing(order));
}

const std::vector<BigInt>& CyclotomicRing::power(std::int64_t k) const {
  return powers_[static_cast<std::size_t>(mod_p(k, order_))];
}

CycloElement::CycloElement(RingPtr ring, const Rational& constant)
    : ring_(std::move(ring)), coeffs_(ring_->degree(), Rational(0)) {
  coeffs_[0] = constant;
}

CycloElement CycloElement::root_power(RingPtr ring, std::int64_t k) {
  CycloElement e(ring);
  const auto& p = ring->power(k);
  for (std::size_t i = 0; i < p.size(); ++i) e.coeffs_[i] = Rational(p[i]);
  return e;
}

CycloElement CycloElement::from_exponent_counts(RingPtr ring, std::span<const std::int64_t> counts) {
  const std::size_t deg = ring->degree();
  std::vector<BigInt> acc(deg, 0);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    const auto& pw = ring->power(static_cast<std::int64_t>(k));
    const BigInt c(static_cast<long>(counts[k]));
    for (std::size_t i = 0; i < deg; ++i)
      if (pw[i] != 0) acc[i] += c * pw[i];
  }
  CycloElement e(ring);
  for (std::size_t i = 0; i < deg; ++i) e.coeffs_[i] = Rational(acc[i]);
  return e;
}

void CycloElement::check_same_ring(const CycloElement& other) const {
  if (ring_->order() != other.ring_->order()) throw DomainError("cyclotomic elements of different orders");
}

bool CycloElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
  check_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
  check_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  a.check_same_ring(b);
  const std::size_t deg = a.coeffs_.size();
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < deg; ++j)
      if (!b.coeffs_[j].is_zero()) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  CycloElement out(a.ring_);
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    if (k < deg) {
      out.coeffs_[k] += prod[k];
      continue;
    }
    const auto& pw = a.ring_->power(static_cast<std::int64_t>(k));
    for (std::size_t i = 0; i < deg; ++i)
      if (pw[i] != 0) out.coeffs_[i] += prod[k] * Rational(pw[i]);
  }
  return out;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
  return a.ring_->order() == b.ring_->order() && a.coeffs_ == b.coeffs_;
}

CycloElement CycloElement::shifted(std::int64_t k) const { return *this * root_power(ring_, k); }

Rational cyclo_project_rational(const CycloElement& e) {
  if (!e.is_rational()) throw NotRational("cyclotomic residue is not a rational constant");
  return e.coeffs().front();
}

}  // namespace etaforge
