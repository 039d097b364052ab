#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etaforge/exact.hpp"

namespace etaforge {

/// Long Weierstrass model y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6 over ℤ.
struct IntegralModel {
  BigInt a1, a2, a3, a4, a6;

  BigInt b2() const { return a1 * a1 + 4 * a2; }
  BigInt b4() const { return 2 * a4 + a1 * a3; }
  BigInt b6() const { return a3 * a3 + 4 * a6; }
  BigInt b8() const {
    return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  BigInt c4() const { return b2() * b2() - 24 * b4(); }
  BigInt c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
  BigInt discriminant() const;

  /// (x, y) -> (x + r, y + s·x + t).
  IntegralModel rst_transform(const BigInt& r, const BigInt& s, const BigInt& t) const;
  /// a_i -> u^i·a_i, a model of the same curve over ℚ.
  IntegralModel scaled(const BigInt& u) const;

  std::string to_string() const;
  friend bool operator==(const IntegralModel&, const IntegralModel&) = default;
};

/// y² = x(x - 1)(x - λ) for λ ∈ ℚ \ {0, 1}.
class LegendreCurve {
 public:
  explicit LegendreCurve(Rational lam);
  const Rational& lam() const { return lam_; }

 private:
  Rational lam_;
};

/// Y² = X³ - b(b + a)X² + ab³X for λ = a/b, via (x, y) = (X/b², Y/b³).
IntegralModel integral_model(const Rational& lam);

enum class Kodaira { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

struct KodairaSymbol {
  Kodaira type = Kodaira::I0;
  int n = 0;  // subscript for I_n and I_n*
  std::string to_string() const;
  friend bool operator==(const KodairaSymbol&, const KodairaSymbol&) = default;
};

/// Local data at one prime, produced by Tate's algorithm.
struct ReductionData {
  std::int64_t prime = 0;
  KodairaSymbol kodaira;
  int conductor_exponent = 0;  // 0 good, 1 multiplicative, >= 2 additive
  int discriminant_valuation = 0;  // of the minimal model
  /// Good p: p + 1 - #E(F_p). Bad p: p - #(smooth points), i.e. 1 split, -1 non-split, 0 additive.
  std::int64_t local_ap = 0;
  IntegralModel minimal_model;  // minimal at `prime`
};

/// Tate's algorithm at p (any prime, including 2 and 3).
ReductionData tate_local(const IntegralModel& model, std::int64_t p);

struct ConductorResult {
  std::int64_t conductor = 1;
  /// One entry per prime dividing the discriminant of the input model, ascending;
  /// entries with conductor_exponent 0 are primes where that model was not minimal.
  std::vector<ReductionData> local;
  std::vector<ReductionData> bad_primes() const;
};

/// `hint_primes` are tried first when factoring the discriminant.
ConductorResult conductor(const IntegralModel& model, const std::vector<std::int64_t>& hint_primes = {});
ConductorResult conductor(const Rational& lam);

/// #E(F_p) over the projective plane, counting the point at infinity and any singular point.
std::int64_t count_points(const IntegralModel& model, std::int64_t p);

/// Table of quadratic residues mod an odd prime, used by the character sums.
class LegendreSymbolTable {
 public:
  explicit LegendreSymbolTable(std::int64_t p);
  int operator()(std::int64_t x) const { return table_[static_cast<std::size_t>(mod_p(x, p_))]; }
  std::int64_t prime() const { return p_; }

 private:
  std::int64_t p_;
  std::vector<int> table_;
};

/// a(p;λ) = -Σ_x φ(x(x-1)(x-λ)) for odd p with ord_p(λ) = ord_p(λ - 1) = 0.
std::int64_t ap_good(const Rational& lam, std::int64_t p);

/// Hecke-eigenform coefficients a(1..T) attached to an elliptic curve.
struct NewformSeries {
  std::optional<Rational> lam;  // unset for curves given directly as Weierstrass models
  std::vector<BigInt> coeffs;  // coeffs[n-1] = a(n)
  std::int64_t level = 0;
  const BigInt& a(std::size_t n) const { return coeffs.at(n - 1); }
  std::size_t size() const { return coeffs.size(); }
};

NewformSeries newform_coefficients(const Rational& lam, std::size_t terms);
NewformSeries newform_coefficients(const IntegralModel& model, std::size_t terms);

}  // namespace etaforge
