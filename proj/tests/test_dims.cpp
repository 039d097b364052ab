#include <gtest/gtest.h>

#include <numeric>

#include "etaforge/dims.hpp"
#include "etaforge/errors.hpp"
#include "etaforge/exact.hpp"

using namespace etaforge;

namespace {

// Genus of X₀(N) counted directly: points of P¹(ℤ/N) for the index, cusps as
// Σ φ(gcd(d, N/d)), and elliptic points as roots of x² + 1 and x² + x + 1 mod N.
std::int64_t brute_genus(std::int64_t n) {
  std::int64_t mu = 0;
  for (std::int64_t c = 0; c < n; ++c)
    for (std::int64_t d = 0; d < n; ++d) {
      if (std::gcd(std::gcd(c, d), n) != 1) continue;
      // count each projective point once: pick the representative first in lexicographic order
      bool first = true;
      for (std::int64_t u = 1; u < n && first; ++u)
        if (std::gcd(u, n) == 1 && ((u * c % n) * n + u * d % n) < c * n + d) first = false;
      mu += first;
    }
  std::int64_t cusps = 0, nu2 = 0, nu3 = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) cusps += euler_phi(std::gcd(d, n / d));
  for (std::int64_t x = 0; x < n; ++x) {
    nu2 += (x * x + 1) % n == 0;
    nu3 += (x * x + x + 1) % n == 0;
  }
  const std::int64_t twelve_g = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * cusps;
  EXPECT_EQ(twelve_g % 12, 0) << n;
  return twelve_g / 12;
}

}  // namespace

TEST(Dimension, TabulatedLevels) {
  EXPECT_EQ(dim_S2(33).dimension, 3);
  EXPECT_EQ(dim_S2(40).dimension, 3);
  EXPECT_EQ(dim_S2(42).dimension, 5);
  EXPECT_EQ(dim_S2(70).dimension, 9);
  EXPECT_EQ(dim_S2(1).dimension, 0);
  EXPECT_EQ(dim_S2(11).dimension, 1);
  EXPECT_EQ(dim_S2(32).dimension, 1);
  EXPECT_EQ(dim_S2(36).dimension, 1);
  EXPECT_EQ(dim_S2(37).dimension, 2);
  EXPECT_EQ(dim_S2(389).dimension, 32);
}

TEST(Dimension, AgreesWithBruteForceGenus) {
  for (std::int64_t n = 1; n <= 120; ++n) EXPECT_EQ(dim_S2(n).dimension, brute_genus(n)) << n;
}

TEST(Dimension, IntegralAndNonnegativeUpTo500) {
  for (std::int64_t n = 1; n <= 500; ++n) {
    const DimensionBreakdown d = dim_S2(n);
    EXPECT_GE(d.dimension, 0) << n;
    const Rational recomputed = Rational(1) + d.index_term - d.ramification_term - Rational(d.elliptic4_count) / Rational(4) -
                                Rational(d.elliptic3_count) / Rational(3);
    EXPECT_EQ(recomputed, Rational(d.dimension)) << n;
  }
}

TEST(Dimension, IndexIsMultiplicative) {
  for (std::int64_t n = 1; n <= 300; ++n) {
    std::int64_t mu = n;
    for (const auto& pp : factorize(n)) mu = mu / pp.prime * (pp.prime + 1);
    EXPECT_EQ(gamma0_index(n), mu) << n;
  }
  EXPECT_THROW(dim_S2(0), Error);
}
