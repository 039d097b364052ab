#include "etaforge/dims.hpp"

namespace etaforge {

namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

std::int64_t count_roots(std::int64_t level, std::int64_t linear) {
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < level; ++x)
    if ((x * x + linear * x + 1) % level == 0) ++count;
  return count;
}

}  // namespace

std::int64_t ramification_factor(std::int64_t p, int r) {
  if (r < 1) throw DomainError("ramification factor needs r >= 1");
  if (r % 2 == 0) return ipow(p, r / 2) + ipow(p, r / 2 - 1);
  return 2 * ipow(p, (r - 1) / 2);
}

std::int64_t gamma0_index(std::int64_t level) {
  std::int64_t mu = level;
  for (const auto& [p, e] : factorize(level)) mu = mu / p * (p + 1);
  return mu;
}

DimensionBreakdown dim_S2(std::int64_t level) {
  if (level < 1) throw DomainError("level must be positive");
  DimensionBreakdown out;
  out.level = level;
  Rational index = Rational(level) / Rational(12);
  std::int64_t ramification = 1;
  for (const auto& [p, e] : factorize(level)) {
    index *= Rational(p + 1) / Rational(p);
    ramification *= ramification_factor(p, e);
  }
  out.index_term = index;
  out.ramification_term = Rational(ramification) / Rational(2);
  // Exhaustive scan; at N = 1 the single class 0 satisfies both congruences.
  out.elliptic4_count = count_roots(level, 0);
  out.elliptic3_count = count_roots(level, 1);
  const Rational d = Rational(1) + out.index_term - out.ramification_term -
                     Rational(out.elliptic4_count) / Rational(4) - Rational(out.elliptic3_count) / Rational(3);
  if (!d.is_integer() || d.sign() < 0)
    throw Error("dimension formula gave " + d.to_string() + " at N = " + std::to_string(level));
  out.dimension = d.numerator().get_si();
  return out;
}

}  // namespace etaforge
