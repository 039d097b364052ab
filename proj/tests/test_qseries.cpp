#include <gtest/gtest.h>

#include "etaforge/errors.hpp"
#include "etaforge/qseries.hpp"
#include "support.hpp"

using namespace etaforge;
using etaforge::testing::random_series;
using etaforge::testing::rng;
using etaforge::testing::uniform;

namespace {

// ∏_{n<T}(1 - q^n) by schoolbook multiplication, the slow way.
std::vector<BigInt> naive_euler_product(std::size_t t) {
  std::vector<BigInt> c(t, 0);
  c[0] = 1;
  for (std::size_t n = 1; n < t; ++n)
    for (std::size_t i = t; i-- > n;) c[i] -= c[i - n];
  return c;
}

}  // namespace

TEST(EtaExpansion, MatchesNaiveProduct) {
  for (std::size_t t : {1u, 2u, 10u, 57u, 300u}) {
    const QExpansion eta = eta_expansion(t);
    EXPECT_EQ(eta.offset24(), 1);
    EXPECT_EQ(eta.coeffs(), naive_euler_product(t)) << t;
  }
}

TEST(EtaExpansion, CubeIsJacobiSeries) {
  // η³ = q^{1/8} Σ (-1)^k (2k+1) q^{k(k+1)/2}.
  const std::size_t t = 200;
  const QExpansion cube = series_int_pow(eta_expansion(t), 3);
  EXPECT_EQ(cube.offset(), Rational::parse("1/8"));
  std::vector<BigInt> expected(t, 0);
  for (std::int64_t k = 0; k * (k + 1) / 2 < static_cast<std::int64_t>(t); ++k)
    expected[static_cast<std::size_t>(k * (k + 1) / 2)] = (k % 2 ? -1 : 1) * (2 * k + 1);
  EXPECT_EQ(cube.coeffs(), expected);
}

TEST(QExpansion, WindowSemantics) {
  const QExpansion f(24, {BigInt(0), BigInt(3), BigInt(-1)});
  EXPECT_EQ(f.offset(), Rational(2));  // leading zero stripped
  EXPECT_EQ(f.truncation(), 2u);
  EXPECT_EQ(f.coefficient(1), 0);
  EXPECT_EQ(f.coefficient(2), 3);
  EXPECT_EQ(f.coefficient(3), -1);
  EXPECT_THROW(f.coefficient(4), InsufficientPrecision);
  EXPECT_EQ(f.coefficient_at(Rational::parse("5/2")), 0);
}

TEST(QExpansion, DilateSpreadsCoefficients) {
  const QExpansion eta = eta_expansion(30);
  const QExpansion d = eta.dilate(4);
  EXPECT_EQ(d.offset(), Rational::parse("1/6"));
  for (std::int64_t i = 0; i < 30; ++i) {
    const Rational e = Rational::parse("1/6") + Rational(i);
    const BigInt want = i % 4 == 0 ? eta.coeffs()[static_cast<std::size_t>(i / 4)] : BigInt(0);
    EXPECT_EQ(d.coefficient_at(e), want);
  }
}

TEST(QExpansion, RingLawsHoldOnRandomSeries) {
  auto g = rng(0x5EED);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t t = static_cast<std::size_t>(uniform(g, 1, 40));
    const QExpansion a = random_series(g, t, uniform(g, 0, 3));
    const QExpansion b = random_series(g, t + static_cast<std::size_t>(uniform(g, 0, 5)), uniform(g, 0, 3));
    const QExpansion c = random_series(g, t, uniform(g, 0, 3));
    EXPECT_EQ(series_mul(a, b), series_mul(b, a));
    EXPECT_EQ(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c)));
    EXPECT_EQ(series_mul(a, QExpansion::one(t)), a);
  }
}

TEST(QExpansion, InverseAndPowers) {
  auto g = rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t t = static_cast<std::size_t>(uniform(g, 1, 50));
    QExpansion f = random_series(g, t);
    std::vector<BigInt> c = f.coeffs();
    c[0] = uniform(g, 0, 1) ? 1 : -1;
    f = QExpansion(24 * uniform(g, 0, 2), c);
    const QExpansion inv = series_inverse(f);
    const QExpansion prod = series_mul(f, inv);
    EXPECT_EQ(prod, QExpansion::one(t));
    const std::int64_t m = uniform(g, -3, 3), n = uniform(g, -3, 3);
    EXPECT_EQ(series_mul(series_int_pow(f, m), series_int_pow(f, n)), series_int_pow(f, m + n));
  }
  EXPECT_THROW(series_inverse(QExpansion(0, {BigInt(2), BigInt(1)})), DomainError);
}
