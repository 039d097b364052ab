#include "etaforge/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace etaforge {

QExpansion::QExpansion(std::int64_t offset24, std::vector<BigInt> coeffs)
    : offset24_(offset24), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("q-expansion needs at least one coefficient");
  normalize();
}

void QExpansion::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == 0 || lead == coeffs_.size()) return;  // already normalized, or identically zero
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  offset24_ += 24 * static_cast<std::int64_t>(lead);
}

QExpansion QExpansion::one(std::size_t truncation) {
  std::vector<BigInt> c(truncation, 0);
  c.at(0) = 1;
  return QExpansion(0, std::move(c));
}

QExpansion QExpansion::zero(std::size_t truncation) {
  if (truncation == 0) throw DomainError("q-expansion needs at least one coefficient");
  QExpansion z;
  z.coeffs_.assign(truncation, 0);
  return z;
}

bool QExpansion::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

BigInt QExpansion::coefficient_at(const Rational& exponent) const {
  const Rational shift = exponent - offset();
  if (!shift.is_integer()) return 0;
  if (shift.sign() < 0) return 0;
  const BigInt idx = shift.numerator();
  if (idx >= static_cast<unsigned long>(coeffs_.size()))
    throw InsufficientPrecision("coefficient of q^" + exponent.to_string() + " is beyond the truncation");
  return coeffs_[idx.get_ui()];
}

BigInt QExpansion::coefficient(std::int64_t n) const { return coefficient_at(Rational(n)); }

QExpansion QExpansion::dilate(std::int64_t delta) const {
  if (delta < 1) throw DomainError("dilation factor must be positive");
  const auto d = static_cast<std::size_t>(delta);
  QExpansion out;
  out.offset24_ = offset24_ * delta;
  // Exponents between dilated terms are known to be zero up to (but excluding) d·T.
  out.coeffs_.assign(coeffs_.size() * d, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * d] = coeffs_[i];
  return out;
}

QExpansion QExpansion::truncated(std::size_t truncation) const {
  if (truncation == 0) throw DomainError("q-expansion needs at least one coefficient");
  QExpansion out = *this;
  if (out.coeffs_.size() > truncation) out.coeffs_.resize(truncation);
  return out;
}

std::string QExpansion::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  os << "q^(" << offset().to_string() << ")*(";
  bool first = true;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
    if (coeffs_[i] == 0) continue;
    ++shown;
    const BigInt mag = abs(coeffs_[i]);
    if (first) {
      if (coeffs_[i] < 0) os << "-";
    } else {
      os << (coeffs_[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "q";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  os << " + O(q^" << coeffs_.size() << "))";
  return os.str();
}

QExpansion eta_expansion(std::size_t truncation) {
  if (truncation == 0) throw DomainError("eta expansion needs T >= 1");
  std::vector<BigInt> c(truncation, 0);
  const auto limit = static_cast<std::int64_t>(truncation);
  // ∏(1 - q^n) = Σ_k (-1)^k q^{k(3k-1)/2} over k ∈ ℤ.
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t a = k * (3 * k - 1) / 2;
    const std::int64_t b = k * (3 * k + 1) / 2;
    if (a >= limit) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(a)] = sign;
    if (k > 0 && b < limit) c[static_cast<std::size_t>(b)] = sign;
  }
  return QExpansion(1, std::move(c));
}

QExpansion series_mul(const QExpansion& f, const QExpansion& g) {
  const std::size_t t = std::min(f.truncation(), g.truncation());
  const std::int64_t offset = f.offset24() + g.offset24();
  if (f.is_zero() || g.is_zero()) return QExpansion::zero(t);
  std::vector<BigInt> c(t, 0);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  for (std::size_t i = 0; i < t; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < t; ++j)
      if (b[j] != 0) c[i + j] += a[i] * b[j];
  }
  return QExpansion(offset, std::move(c));
}

QExpansion series_inverse(const QExpansion& f) {
  const auto& a = f.coeffs();
  if (a[0] != 1 && a[0] != -1) throw DomainError("series inversion needs leading coefficient ±1");
  const std::size_t t = a.size();
  std::vector<BigInt> inv(t, 0);
  inv[0] = a[0];  // 1/±1 = ±1
  for (std::size_t n = 1; n < t; ++n) {
    BigInt s = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (a[k] != 0) s += a[k] * inv[n - k];
    inv[n] = -s * a[0];
  }
  return QExpansion(-f.offset24(), std::move(inv));
}

QExpansion series_int_pow(const QExpansion& f, std::int64_t exponent) {
  if (exponent == 0) return QExpansion::one(f.truncation());
  QExpansion base = exponent < 0 ? series_inverse(f) : f;
  std::uint64_t e = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
  QExpansion result = QExpansion::one(f.truncation());
  while (e > 0) {
    if (e & 1U) result = series_mul(result, base);
    e >>= 1U;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

}  // namespace etaforge
