#include <gtest/gtest.h>

#include <numeric>

#include "etaforge/cyclotomic.hpp"
#include "etaforge/errors.hpp"
#include "etaforge/exact.hpp"
#include "etaforge/linalg.hpp"
#include "support.hpp"

using namespace etaforge;
using etaforge::testing::random_rational;
using etaforge::testing::rng;
using etaforge::testing::uniform;

namespace {

bool trial_division_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(Rational::parse("27/16"), Rational(BigInt(27), BigInt(16)));
  EXPECT_EQ(Rational::parse("-7/25").to_string(), "-7/25");
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_EQ(Rational::parse("-0"), Rational(0));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "a", "1.5", "1//2", "--3", " 2"})
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
}

TEST(Rational, FieldAxiomsOnRandomSamples) {
  auto g = rng(0xE7A1);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rational(g), b = random_rational(g), c = random_rational(g);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(Rational, IntegerPowers) {
  const Rational x = Rational::parse("-2/3");
  EXPECT_EQ(pow(x, 3), Rational::parse("-8/27"));
  EXPECT_EQ(pow(x, -2), Rational::parse("9/4"));
  EXPECT_EQ(pow(Rational(0), 0), Rational(1));
}

TEST(Valuation, MatchesRepeatedDivision) {
  EXPECT_EQ(ord_p(Rational::parse("27/16"), 3), 3);
  EXPECT_EQ(ord_p(Rational::parse("27/16"), 2), -4);
  EXPECT_EQ(ord_p(Rational::parse("27/16"), 5), 0);
  EXPECT_THROW(ord_p(Rational(0), 3), UndefinedValuation);
  auto g = rng(11);
  for (int i = 0; i < 300; ++i) {
    std::int64_t n = uniform(g, 1, 1'000'000);
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[uniform(g, 0, 3)];
    int expected = 0;
    for (std::int64_t m = n; m % p == 0; m /= p) ++expected;
    EXPECT_EQ(ord_p(BigInt(n), p), expected);
  }
}

TEST(Valuation, ReductionModPAndCongruence) {
  EXPECT_EQ(mod_p(Rational::parse("27/16"), 13), 27 * inverse_mod(16, 13) % 13);
  EXPECT_EQ(mod_p(std::int64_t{-1}, 7), 6);
  EXPECT_THROW(mod_p(Rational::parse("1/7"), 7), DomainError);
  EXPECT_TRUE(congruent_mod_p(Rational::parse("1/2"), Rational(4), 7));
  EXPECT_FALSE(congruent_mod_p(Rational::parse("1/2"), Rational(3), 7));
}

TEST(Primes, AgreeWithTrialDivision) {
  const auto ps = primes_up_to(2000);
  std::size_t k = 0;
  for (std::int64_t n = 0; n <= 2000; ++n) {
    EXPECT_EQ(is_prime(n), trial_division_prime(n)) << n;
    if (trial_division_prime(n)) {
      ASSERT_LT(k, ps.size());
      EXPECT_EQ(ps[k++], n);
    }
  }
  EXPECT_EQ(k, ps.size());
  EXPECT_EQ(primes_in_range(5, 29), (std::vector<std::int64_t>{5, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(Factorization, ReconstructsAndCountsDivisors) {
  for (std::int64_t n = 1; n <= 3000; ++n) {
    std::int64_t prod = 1, tau = 1;
    for (const auto& pp : factorize(n)) {
      EXPECT_TRUE(is_prime(pp.prime));
      for (int i = 0; i < pp.exponent; ++i) prod *= pp.prime;
      tau *= pp.exponent + 1;
    }
    EXPECT_EQ(prod, n);
    const auto ds = divisors(n);
    EXPECT_EQ(static_cast<std::int64_t>(ds.size()), tau);
    EXPECT_TRUE(std::is_sorted(ds.begin(), ds.end()));
    if (n <= 400) {
      std::int64_t coprime = 0;
      for (std::int64_t k = 1; k <= n; ++k) coprime += std::gcd(k, n) == 1;
      EXPECT_EQ(euler_phi(n), coprime) << n;
    }
  }
  EXPECT_EQ(prime_support(BigInt(-110592)), (std::vector<std::int64_t>{2, 3}));
}

TEST(Binomial, PascalRecurrence) {
  for (std::int64_t n = 1; n < 40; ++n)
    for (std::int64_t k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  EXPECT_EQ(binomial(5, 7), 0);
}

TEST(Cyclotomic, PolynomialDegreeAndValueAtOne) {
  EXPECT_EQ(cyclotomic_polynomial(12).to_string(), IntPolynomial({1, 0, -1, 0, 1}).to_string());
  for (std::int64_t m = 1; m <= 100; ++m) {
    const IntPolynomial phi = cyclotomic_polynomial(m);
    EXPECT_EQ(phi.degree(), euler_phi(m)) << m;
    BigInt at_one = 0;
    for (int i = 0; i <= phi.degree(); ++i) at_one += phi.coefficient(static_cast<std::size_t>(i));
    // Φ_m(1) is p for m = p^k and 1 for other m > 1.
    const auto f = factorize(m);
    if (m == 1)
      EXPECT_EQ(at_one, 0);
    else if (f.size() == 1)
      EXPECT_EQ(at_one, f[0].prime);
    else
      EXPECT_EQ(at_one, 1);
  }
}

TEST(Cyclotomic, RootOfUnityArithmetic) {
  for (std::int64_t m : {4, 6, 10, 12, 18, 22, 28, 30}) {
    const auto ring = CyclotomicRing::make(m);
    const auto z = CycloElement::root_power(ring, 1);
    CycloElement acc(ring, Rational(1)), sum(ring);
    for (std::int64_t k = 0; k < m; ++k) {
      sum += acc;
      acc = acc * z;
    }
    EXPECT_EQ(acc, CycloElement(ring, Rational(1))) << m;  // ζ^m = 1
    EXPECT_TRUE(sum.is_zero()) << m;                        // Σ ζ^k = 0
    EXPECT_EQ(CycloElement::root_power(ring, m / 2), CycloElement(ring, Rational(-1)));
    EXPECT_THROW(cyclo_project_rational(z), NotRational);
  }
}

TEST(Linalg, RankAndSolve) {
  RationalMatrix a = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  EXPECT_EQ(rank(a), 1u);
  EXPECT_THROW(solve_square(a, {Rational(1), Rational(1)}), SingularSystem);
  auto g = rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(g, 1, 5));
    RationalMatrix m(n, RationalVector(n));
    RationalVector x(n);
    for (auto& row : m)
      for (auto& v : row) v = random_rational(g, 9);
    for (auto& v : x) v = random_rational(g, 9);
    if (rank(m) < n) continue;
    RationalVector b(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] += m[i][j] * x[j];
    EXPECT_EQ(solve_square(m, b), x);
  }
}

TEST(Linalg, EchelonBasisTracksRank) {
  EchelonBasis basis(3);
  EXPECT_TRUE(basis.insert({Rational(1), Rational(1), Rational(0)}));
  EXPECT_TRUE(basis.insert({Rational(0), Rational(1), Rational(1)}));
  EXPECT_FALSE(basis.insert({Rational(2), Rational(3), Rational(1)}));
  EXPECT_EQ(basis.rank(), 2u);
  EXPECT_TRUE(basis.insert({Rational(0), Rational(0), Rational(5)}));
  EXPECT_EQ(basis.rank(), 3u);
}
