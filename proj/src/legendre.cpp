#include "etaforge/legendre.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace etaforge {

LegendreCurve::LegendreCurve(Rational lam) : lam_(std::move(lam)) {
  if (lam_.is_zero() || lam_ == Rational(1))
    throw DomainError("Legendre curve is singular for lambda = " + lam_.to_string());
}

IntegralModel integral_model(const Rational& lam) {
  const LegendreCurve curve(lam);
  const BigInt a = curve.lam().numerator(), b = curve.lam().denominator();
  return {0, -b * (b + a), 0, a * b * b * b, 0};
}

std::vector<ReductionData> ConductorResult::bad_primes() const {
  std::vector<ReductionData> out;
  for (const auto& r : local)
    if (r.conductor_exponent > 0) out.push_back(r);
  return out;
}

ConductorResult conductor(const IntegralModel& model, const std::vector<std::int64_t>& hint_primes) {
  const BigInt disc = model.discriminant();
  if (disc == 0) throw DomainError("singular Weierstrass model");
  BigInt rest = abs(disc);
  std::set<std::int64_t> primes;
  const auto strip = [&](std::int64_t p) {
    const BigInt bp(static_cast<long>(p));
    if (!mpz_divisible_p(rest.get_mpz_t(), bp.get_mpz_t())) return;
    primes.insert(p);
    while (mpz_divisible_p(rest.get_mpz_t(), bp.get_mpz_t())) rest /= bp;
  };
  for (std::int64_t p : hint_primes) strip(p);
  for (std::int64_t p : prime_support(rest)) primes.insert(p);

  ConductorResult out;
  for (std::int64_t p : primes) {
    ReductionData local = tate_local(model, p);
    for (int i = 0; i < local.conductor_exponent; ++i) out.conductor *= p;
    out.local.push_back(std::move(local));
  }
  return out;
}

ConductorResult conductor(const Rational& lam) {
  const IntegralModel model = integral_model(lam);
  // The discriminant is 16·a²·b⁸·(a - b)², so its primes come from 2, a, b and a - b.
  const BigInt a = lam.numerator(), b = lam.denominator();
  std::vector<std::int64_t> hints{2};
  for (const BigInt& x : {a, b, BigInt(a - b)})
    if (abs(x) > 1)
      for (std::int64_t p : prime_support(x)) hints.push_back(p);
  return conductor(model, hints);
}

LegendreSymbolTable::LegendreSymbolTable(std::int64_t p) : p_(p), table_(static_cast<std::size_t>(p), -1) {
  if (p < 3 || p % 2 == 0) throw DomainError("Legendre symbol table needs an odd prime");
  table_[0] = 0;
  for (std::int64_t x = 1; x <= p / 2; ++x)
    table_[static_cast<std::size_t>(static_cast<__int128>(x) * x % p)] = 1;
}

std::int64_t ap_good(const Rational& lam, std::int64_t p) {
  const LegendreCurve curve(lam);
  if (p < 3 || !is_prime(p)) throw DomainError("ap_good needs an odd prime, got " + std::to_string(p));
  if (ord_p(lam, p) != 0 || ord_p(lam - Rational(1), p) != 0)
    throw BadReduction("lambda = " + lam.to_string() + " has bad reduction at " + std::to_string(p));
  const std::int64_t l = mod_p(lam, p);
  const LegendreSymbolTable phi(p);
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    const auto v = static_cast<__int128>(x) * mod_p(x - 1, p) % p * mod_p(x - l, p) % p;
    sum += phi(static_cast<std::int64_t>(v));
  }
  return -sum;
}

namespace {

// Fills a(1..T) from a(p) using the Hecke relations.
NewformSeries hecke_extend(const ConductorResult& cond, std::size_t terms,
                           const std::function<std::int64_t(std::int64_t)>& ap_outside_disc) {
  if (terms == 0) throw DomainError("need at least one coefficient");
  const auto T = static_cast<std::int64_t>(terms);
  NewformSeries out;
  out.level = cond.conductor;
  out.coeffs.assign(terms, 0);
  out.coeffs[0] = 1;

  std::vector<std::int64_t> spf(static_cast<std::size_t>(T) + 1, 0);
  for (std::int64_t i = 2; i <= T; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (std::int64_t j = i; j <= T; j += i)
      if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;
  }

  for (std::int64_t p : primes_up_to(T)) {
    std::int64_t ap = 0;
    bool bad = false;
    auto it = std::find_if(cond.local.begin(), cond.local.end(), [p](const ReductionData& r) { return r.prime == p; });
    if (it != cond.local.end()) {
      ap = it->local_ap;
      bad = it->conductor_exponent > 0;
    } else {
      ap = ap_outside_disc(p);
    }
    // a(p^{k+1}) = a(p)a(p^k) - p·a(p^{k-1}) for good p; a(p^k) = a(p)^k for bad p.
    BigInt prev = 1, cur = BigInt(static_cast<long>(ap));
    for (std::int64_t pk = p; pk <= T; pk *= p) {
      out.coeffs[static_cast<std::size_t>(pk - 1)] = cur;
      BigInt next = cur * ap;
      if (!bad) next -= BigInt(static_cast<long>(p)) * prev;
      prev = cur;
      cur = next;
      if (pk > T / p) break;
    }
  }

  for (std::int64_t n = 2; n <= T; ++n) {
    const std::int64_t p = spf[static_cast<std::size_t>(n)];
    std::int64_t pk = 1, m = n;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    if (m == 1) continue;  // prime power, already set
    out.coeffs[static_cast<std::size_t>(n - 1)] =
        out.coeffs[static_cast<std::size_t>(pk - 1)] * out.coeffs[static_cast<std::size_t>(m - 1)];
  }
  return out;
}

}  // namespace

NewformSeries newform_coefficients(const Rational& lam, std::size_t terms) {
  const ConductorResult cond = conductor(lam);
  NewformSeries out = hecke_extend(cond, terms, [&lam](std::int64_t p) { return ap_good(lam, p); });
  out.lam = lam;
  return out;
}

NewformSeries newform_coefficients(const IntegralModel& model, std::size_t terms) {
  const ConductorResult cond = conductor(model);
  return hecke_extend(cond, terms, [&model](std::int64_t p) { return p + 1 - count_points(model, p); });
}

}  // namespace etaforge
