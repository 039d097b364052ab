#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "etaforge/exact.hpp"
#include "etaforge/qseries.hpp"

namespace etaforge::testing {

// Fixed seeds so any failure reproduces bit for bit.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

inline Rational random_rational(std::mt19937_64& g, std::int64_t span = 60) {
  std::int64_t den = 0;
  while (den == 0) den = uniform(g, -span, span);
  return Rational(BigInt(uniform(g, -span, span)), BigInt(den));
}

// Integer series with offset24 a multiple of 24, so products stay aligned.
inline QExpansion random_series(std::mt19937_64& g, std::size_t truncation, std::int64_t offset = 0) {
  std::vector<BigInt> c(truncation);
  for (auto& x : c) x = uniform(g, -9, 9);
  if (!c.empty() && c[0] == 0) c[0] = 1;
  return QExpansion(24 * offset, c);
}

}  // namespace etaforge::testing
