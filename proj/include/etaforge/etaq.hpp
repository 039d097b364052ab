#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "etaforge/exact.hpp"
#include "etaforge/qseries.hpp"

namespace etaforge {

/// ∏ η(δz)^{r_δ}, written [δ₁^{r₁} δ₂^{r₂} …]. Zero exponents are never stored.
class EtaQuotient {
 public:
  EtaQuotient() = default;
  explicit EtaQuotient(std::map<std::int64_t, std::int64_t> terms);

  const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }
  std::int64_t exponent_sum() const;
  Rational weight() const { return Rational(exponent_sum()) / Rational(2); }
  /// Σ δ·r_δ; the q-expansion starts at q^{Σδr_δ/24}.
  std::int64_t weighted_sum() const;

  /// Product of quotients (exponents add).
  friend EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b);
  friend bool operator==(const EtaQuotient& a, const EtaQuotient& b) = default;
  friend bool operator<(const EtaQuotient& a, const EtaQuotient& b) { return a.terms_ < b.terms_; }

 private:
  std::map<std::int64_t, std::int64_t> terms_;
};

/// Parses "[1^-1 2^2 4^2 5 8^{-1} 40^1]". An omitted exponent means 1.
EtaQuotient parse_bracket(std::string_view text);
/// Canonical text: ascending bases, every exponent explicit.
std::string format_bracket(const EtaQuotient& f);

bool weight_check(const EtaQuotient& f);
/// Σ δr_δ ≡ 0 and Σ (N/δ)r_δ ≡ 0 (mod 24). Throws LevelMismatch if some δ ∤ N.
bool congruence_checks(const EtaQuotient& f, std::int64_t level);
/// ∏ δ^{r_δ} is a square in ℚ, so the quotient has trivial character.
bool character_check(const EtaQuotient& f);
/// Order of vanishing at the cusps c/d of Γ₀(N):
/// (N/24) Σ_δ gcd(d,δ)² r_δ / (gcd(d, N/d)·d·δ).
Rational cusp_order(const EtaQuotient& f, std::int64_t level, std::int64_t d);

struct CuspOrderEntry {
  std::int64_t divisor;
  Rational order;
};

struct CuspOrderReport {
  std::int64_t level = 0;
  std::vector<CuspOrderEntry> entries;
};

struct MembershipResult {
  bool is_cusp_form = false;
  bool weight_ok = false;
  bool congruences_ok = false;
  bool orders_positive = false;
  bool character_trivial = false;
  CuspOrderReport report;
};

/// Weight 2, both congruences, trivial character, and strictly positive order at every divisor cusp.
MembershipResult is_cusp_form(const EtaQuotient& f, std::int64_t level);

/// q-expansion of f with `truncation` coefficients starting from its leading exponent.
QExpansion expand_eta_quotient(const EtaQuotient& f, std::size_t truncation);

}  // namespace etaforge
