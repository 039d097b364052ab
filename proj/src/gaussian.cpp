#include "etaforge/gaussian.hpp"

#include <map>

#include "etaforge/legendre.hpp"

namespace etaforge {

namespace {

bool is_primitive_root(std::int64_t g, std::int64_t p) {
  if (mod_p(g, p) == 0) return false;
  for (const auto& [q, e] : factorize(p - 1))
    if (pow_mod(g, (p - 1) / q, p) == 1) return false;
  return true;
}

void require_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
}

void require_good(const Rational& lam, std::int64_t p) {
  if (lam.is_zero() || lam == Rational(1)) throw DomainError("lambda must not be 0 or 1");
  if (ord_p(lam, p) != 0 || ord_p(lam - Rational(1), p) != 0)
    throw BadReduction("ord_" + std::to_string(p) + "(lambda(lambda-1)) != 0 for lambda = " + lam.to_string());
}

// Exponent histogram of B(-1)·J(A, B̄): index k counts the terms ζ^k.
std::vector<std::int64_t> jacobi_exponents(const CharContext& ctx, std::int64_t a, std::int64_t b) {
  const std::int64_t p = ctx.prime(), m = p - 1;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  const std::int64_t sign_shift = b * (m / 2);  // B(-1) = ζ^{B·dlog(-1)}, dlog(-1) = m/2
  // x = 0 and x = 1 vanish since A(0) = B̄(0) = 0.
  for (std::int64_t x = 2; x < p; ++x) {
    const std::int64_t e = a * ctx.dlog(x) - b * ctx.dlog(1 - x) + sign_shift;
    ++counts[static_cast<std::size_t>(mod_p(e, m))];
  }
  return counts;
}

}  // namespace

std::int64_t smallest_primitive_root(std::int64_t p) {
  if (p == 2) return 1;
  for (std::int64_t g = 2; g < p; ++g)
    if (is_primitive_root(g, p)) return g;
  throw DomainError("no primitive root mod " + std::to_string(p));
}

CharContext::CharContext(std::int64_t p, std::optional<std::int64_t> generator, std::int64_t max_prime) : p_(p) {
  require_odd_prime(p);
  if (p > max_prime)
    throw DomainError("character sums are capped at p <= " + std::to_string(max_prime) + ", got " +
                      std::to_string(p));
  generator_ = generator ? mod_p(*generator, p) : smallest_primitive_root(p);
  if (!is_primitive_root(generator_, p)) throw DomainError(std::to_string(generator_) + " is not a primitive root");
  dlog_.assign(static_cast<std::size_t>(p), -1);
  std::int64_t x = 1;
  for (std::int64_t k = 0; k < p - 1; ++k) {
    dlog_[static_cast<std::size_t>(x)] = k;
    x = x * generator_ % p;
  }
  ring_ = CyclotomicRing::make(p - 1);
}

std::int64_t CharContext::dlog(std::int64_t x) const {
  const std::int64_t r = mod_p(x, p_);
  if (r == 0) throw DomainError("discrete log of 0");
  return dlog_[static_cast<std::size_t>(r)];
}

CycloElement char_value(const CharContext& ctx, std::int64_t j, std::int64_t x) {
  if (mod_p(x, ctx.prime()) == 0) return CycloElement(ctx.ring());
  return CycloElement::root_power(ctx.ring(), ctx.index(j) * ctx.dlog(x));
}

ScaledCyclo greene_binomial(const CharContext& ctx, std::int64_t a, std::int64_t b) {
  const auto counts = jacobi_exponents(ctx, ctx.index(a), ctx.index(b));
  return {Rational(1) / Rational(ctx.prime()), CycloElement::from_exponent_counts(ctx.ring(), counts)};
}

Rational hypergeometric(const CharContext& ctx, const std::vector<std::int64_t>& top,
                        const std::vector<std::int64_t>& bottom, std::int64_t x) {
  if (top.empty()) throw DomainError("hypergeometric series needs at least one top character");
  if (bottom.size() + 1 != top.size()) throw DomainError("need exactly one fewer bottom than top characters");
  const std::int64_t p = ctx.prime(), m = p - 1;
  if (mod_p(x, p) == 0) return Rational(0);  // every χ(0) = 0

  std::map<std::pair<std::int64_t, std::int64_t>, CycloElement> binomials;
  const auto binom = [&](std::int64_t a, std::int64_t b) -> const CycloElement& {
    const auto key = std::make_pair(ctx.index(a), ctx.index(b));
    auto it = binomials.find(key);
    if (it == binomials.end())
      it = binomials
               .emplace(key, CycloElement::from_exponent_counts(ctx.ring(), jacobi_exponents(ctx, key.first, key.second)))
               .first;
    return it->second;
  };

  // Work with p·(A over B) ∈ ℤ[ζ] and restore the p^{-w} factor at the end.
  CycloElement total(ctx.ring());
  const std::int64_t log_x = ctx.dlog(x);
  for (std::int64_t c = 0; c < m; ++c) {
    CycloElement term = binom(top[0] + c, c);
    for (std::size_t i = 1; i < top.size(); ++i) term = term * binom(top[i] + c, bottom[i - 1] + c);
    total += term.shifted(c * log_x);
  }
  Rational scale = Rational(p) / Rational(m);
  for (std::size_t i = 0; i < top.size(); ++i) scale /= Rational(p);
  total *= scale;
  return cyclo_project_rational(total);
}

Rational two_f1(const CharContext& ctx, std::int64_t lam_mod_p) {
  return hypergeometric(ctx, {ctx.quadratic(), ctx.quadratic()}, {0}, lam_mod_p);
}

Rational apery_D(std::int64_t n, std::int64_t m, std::int64_t l, const Rational& r) {
  if (n < 0 || m < 0 || l < 0) throw DomainError("Apery parameters must be nonnegative");
  Rational sum(0);
  for (std::int64_t k = 0; k <= n; ++k) {
    BigInt term = 1;
    const BigInt upper = binomial(n + k, k), lower = binomial(n, k);
    for (std::int64_t i = 0; i < m; ++i) term *= upper;
    for (std::int64_t i = 0; i < l; ++i) term *= lower;
    // pow(r, 0) = 1 even for r = 0.
    sum += Rational(term) * pow(r, l * k);
  }
  return sum;
}

namespace {

std::int64_t theorem2_sum(std::int64_t p, const Rational& lam, bool multinomial) {
  require_odd_prime(p);
  require_good(lam, p);
  const std::int64_t f = (p - 1) / 2;
  const std::int64_t minus_lam = mod_p(-mod_p(lam, p), p);
  std::int64_t sum = 0, power = 1;
  for (std::int64_t k = 0; k <= f; ++k) {
    BigInt coeff;
    if (multinomial) {
      BigInt num, a, b;
      mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(f + k));
      mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(k));
      mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(f - k));
      coeff = num / (a * a * b);
    } else {
      coeff = binomial(f + k, k) * binomial(f, k);
    }
    sum = mod_p(sum + static_cast<std::int64_t>(static_cast<__int128>(mod_p(coeff, p)) * power % p), p);
    power = static_cast<std::int64_t>(static_cast<__int128>(power) * minus_lam % p);
  }
  const std::int64_t sign = ((p + 1) / 2) % 2 == 0 ? 1 : -1;
  return mod_p(sign * (p - 1) % p * sum, p);
}

}  // namespace

std::int64_t theorem2_rhs(std::int64_t p, const Rational& lam) { return theorem2_sum(p, lam, false); }

std::int64_t theorem2_rhs_multinomial(std::int64_t p, const Rational& lam) { return theorem2_sum(p, lam, true); }

bool verify_eq5(const Rational& lam, std::int64_t p) {
  require_odd_prime(p);
  require_good(lam, p);
  const CharContext ctx(p);
  const Rational lhs = two_f1(ctx, mod_p(lam, p));
  const std::int64_t phi_minus_one = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
  const Rational rhs = Rational(-phi_minus_one * ap_good(lam, p)) / Rational(p);
  return lhs == rhs;
}

Eq6Evaluation evaluate_eq6(std::int64_t p, std::int64_t m, std::int64_t l, const Rational& r) {
  require_odd_prime(p);
  if (m < 0 || l < 0 || m + l < 1) throw DomainError("need m, l >= 0 and m + l >= 1");
  if (r.is_zero() || ord_p(r, p) != 0) throw DomainError("r must be a p-unit");
  const std::int64_t f = (p - 1) / 2, w = m + l;
  const CharContext ctx(p);
  const std::int64_t x = mod_p(pow(-r, l), p);
  const std::vector<std::int64_t> top(static_cast<std::size_t>(w), ctx.quadratic());
  const std::vector<std::int64_t> bottom(static_cast<std::size_t>(w - 1), 0);
  Eq6Evaluation out;
  out.apery = apery_D(f, m, l, r);
  out.hypergeometric = pow(Rational(p) / Rational(p - 1), w - 1) * hypergeometric(ctx, top, bottom, x);
  out.congruent = congruent_mod_p(out.apery, out.hypergeometric, p);
  return out;
}

bool verify_eq6(std::int64_t p, std::int64_t m, std::int64_t l, const Rational& r) {
  return evaluate_eq6(p, m, l, r).congruent;
}

std::int64_t hasse_reconstruct(std::int64_t p, std::int64_t residue) {
  if (p <= 16) throw DomainError("residues mod p <= 16 do not determine a(p) uniquely");
  const std::int64_t r = mod_p(residue, p);
  // |v| < 2√p  ⇔  v² < 4p
  for (std::int64_t v : {r, r - p})
    if (v * v < 4 * p) return v;
  throw DomainError("no integer in (-2sqrt(p), 2sqrt(p)) is congruent to " + std::to_string(residue) + " mod " +
                    std::to_string(p));
}

}  // namespace etaforge
