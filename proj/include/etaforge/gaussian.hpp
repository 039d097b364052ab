#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "etaforge/cyclotomic.hpp"
#include "etaforge/exact.hpp"

namespace etaforge {

/// Multiplicative characters of GF(p), all extended by χ(0) = 0.
///
/// χ_j(g^k) = ζ_{p-1}^{jk} for the chosen primitive root g; values live in
/// ℚ(ζ_{p-1}). The context is immutable once built.
class CharContext {
 public:
  static constexpr std::int64_t kDefaultMaxPrime = 101;

  /// Uses the smallest primitive root unless `generator` is given (it must be primitive).
  explicit CharContext(std::int64_t p, std::optional<std::int64_t> generator = std::nullopt,
                       std::int64_t max_prime = kDefaultMaxPrime);

  std::int64_t prime() const { return p_; }
  std::int64_t generator() const { return generator_; }
  std::int64_t group_order() const { return p_ - 1; }
  const RingPtr& ring() const { return ring_; }
  /// Discrete log of a nonzero residue.
  std::int64_t dlog(std::int64_t x) const;

  /// Index of the quadratic character φ.
  std::int64_t quadratic() const { return (p_ - 1) / 2; }
  /// Reduces a character index into [0, p - 1).
  std::int64_t index(std::int64_t j) const { return mod_p(j, p_ - 1); }

 private:
  std::int64_t p_;
  std::int64_t generator_;
  std::vector<std::int64_t> dlog_;
  RingPtr ring_;
};

std::int64_t smallest_primitive_root(std::int64_t p);

/// χ_j(x): ζ^{j·dlog x} for x ≢ 0, and 0 at x ≡ 0 for every j.
CycloElement char_value(const CharContext& ctx, std::int64_t j, std::int64_t x);

/// A cyclotomic value times a rational scale factor.
struct ScaledCyclo {
  Rational scale;
  CycloElement value;
  CycloElement evaluate() const { return value * scale; }
};

/// Greene's binomial (A over B) = B(-1)/p · Σ_x A(x)·B̄(1 - x).
ScaledCyclo greene_binomial(const CharContext& ctx, std::int64_t a, std::int64_t b);

/// (p/(p-1))·Σ_χ (A₀χ over χ)(A₁χ over B₁χ)⋯(A_nχ over B_nχ)·χ(x); must be rational.
Rational hypergeometric(const CharContext& ctx, const std::vector<std::int64_t>& top,
                        const std::vector<std::int64_t>& bottom, std::int64_t x);

/// ₂F₁(φ, φ; ε | λ̄).
Rational two_f1(const CharContext& ctx, std::int64_t lam_mod_p);

/// D(n; m, l, r) = Σ_k C(n+k, k)^m·C(n, k)^l·r^{lk}, with 0⁰ = 1.
Rational apery_D(std::int64_t n, std::int64_t m, std::int64_t l, const Rational& r);

/// (-1)^{(p+1)/2}(p-1)·Σ_{k<=f} C(f+k,k)C(f,k)(-λ)^k mod p, p = 2f + 1.
std::int64_t theorem2_rhs(std::int64_t p, const Rational& lam);
/// Same value with the multinomial (f+k; k, k, f-k) in place of the binomial product.
std::int64_t theorem2_rhs_multinomial(std::int64_t p, const Rational& lam);

/// ₂F₁(λ mod p) == -φ(-1)·a(p;λ)/p, as exact rationals.
bool verify_eq5(const Rational& lam, std::int64_t p);

struct Eq6Evaluation {
  Rational apery;           // D(f; m, l, r)
  Rational hypergeometric;  // (p/(p-1))^{w-1}·_wF_{w-1}(φ…φ; ε…ε | (-r)^l)
  bool congruent = false;
};
/// Both sides of the Apéry–hypergeometric congruence at p.
Eq6Evaluation evaluate_eq6(std::int64_t p, std::int64_t m, std::int64_t l, const Rational& r);
bool verify_eq6(std::int64_t p, std::int64_t m, std::int64_t l, const Rational& r);

/// The unique integer ≡ residue (mod p) in (-2√p, 2√p); needs p > 16.
std::int64_t hasse_reconstruct(std::int64_t p, std::int64_t residue);

}  // namespace etaforge
