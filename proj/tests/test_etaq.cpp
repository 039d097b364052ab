#include <gtest/gtest.h>

#include "etaforge/basisfind.hpp"
#include "etaforge/errors.hpp"
#include "etaforge/etaq.hpp"
#include "support.hpp"

using namespace etaforge;
using etaforge::testing::rng;
using etaforge::testing::uniform;

namespace {

// The eleven quotients of the four tabulated identities plus the two weight-2 newforms
// [4^2 8^2] (level 32) and [6^4] (level 36) and the level-11 form [1^2 11^2].
std::vector<std::pair<std::string, std::int64_t>> table_quotients() {
  std::vector<std::pair<std::string, std::int64_t>> out;
  const std::vector<std::int64_t> levels = {33, 40, 42, 70};
  const auto& table = tabulated_representations();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (const auto& [c, q] : table[i].second) out.emplace_back(format_bracket(q), levels[i]);
  out.emplace_back("[4^2 8^2]", 32);
  out.emplace_back("[6^4]", 36);
  out.emplace_back("[1^2 11^2]", 11);
  return out;
}

}  // namespace

TEST(Bracket, ParseAndFormatRoundTrip) {
  const EtaQuotient f = parse_bracket("[1^-1 2^{2} 4^2 5 8^-1 40^1]");
  EXPECT_EQ(format_bracket(f), "[1^-1 2^2 4^2 5^1 8^-1 40^1]");
  EXPECT_EQ(parse_bracket(format_bracket(f)), f);
  EXPECT_EQ(f.exponent_sum(), 4);
  EXPECT_EQ(f.weight(), Rational(2));
  EXPECT_EQ(format_bracket(parse_bracket("[11^2 1^2]")), "[1^2 11^2]");
}

TEST(Bracket, RejectsMalformedInput) {
  for (const char* bad : {"", "[]", "[1^2", "1^2]", "[1^2 1^2]", "[2^0]", "[0^1]", "[1^2 x]", "[1^2]x", "[1^2,2^2]",
                          "[-1^2]", "[1^]"})
    EXPECT_THROW(parse_bracket(bad), ParseError) << bad;
}

TEST(Bracket, RandomRoundTrip) {
  auto g = rng(99);
  for (int i = 0; i < 300; ++i) {
    std::map<std::int64_t, std::int64_t> terms;
    const int k = static_cast<int>(uniform(g, 1, 6));
    for (int j = 0; j < k; ++j) {
      std::int64_t r = 0;
      while (r == 0) r = uniform(g, -5, 5);
      terms[uniform(g, 1, 100)] = r;
    }
    const EtaQuotient f(terms);
    EXPECT_EQ(parse_bracket(format_bracket(f)), f);
  }
}

TEST(Membership, KnownNewformsAreCuspForms) {
  for (const auto& [text, level] : table_quotients()) {
    const auto m = is_cusp_form(parse_bracket(text), level);
    EXPECT_TRUE(m.is_cusp_form) << text << " at " << level;
    EXPECT_TRUE(m.weight_ok && m.congruences_ok && m.orders_positive);
    EXPECT_EQ(m.report.entries.size(), divisors(level).size());
  }
}

TEST(Membership, FailureModes) {
  EXPECT_FALSE(is_cusp_form(parse_bracket("[1^2 11^1]"), 11).weight_ok);
  // weight 2 but Σδr_δ = 4 is not ≡ 0 mod 24
  EXPECT_FALSE(is_cusp_form(parse_bracket("[1^4]"), 1).congruences_ok);
  // η(z)^2 η(11z)^2 needs level 11; at level 22 it is still a cusp form
  EXPECT_TRUE(is_cusp_form(parse_bracket("[1^2 11^2]"), 22).is_cusp_form);
  EXPECT_THROW(is_cusp_form(parse_bracket("[1^2 11^2]"), 33 * 2 + 1), LevelMismatch);
  // weight 2, both congruences, positive orders, but ∏δ^r = 640 is not a square
  const auto twisted = is_cusp_form(parse_bracket("[1^1 2^-1 4^1 5^1 8^2]"), 40);
  EXPECT_TRUE(twisted.weight_ok && twisted.congruences_ok && twisted.orders_positive);
  EXPECT_FALSE(twisted.character_trivial);
  EXPECT_FALSE(twisted.is_cusp_form);
  EXPECT_FALSE(is_cusp_form(parse_bracket("[1^24 2^-20]"), 2).is_cusp_form);
  // [1^24] = Δ is level 1 weight 12, not weight 2.
  EXPECT_FALSE(is_cusp_form(parse_bracket("[1^24]"), 1).is_cusp_form);
}

TEST(CuspOrders, InfinityAndZeroMatchLeadingExponents) {
  // Order at 1/N is the leading exponent of the expansion; order at 0 is that of δ ↦ N/δ.
  for (const auto& [text, level] : table_quotients()) {
    const EtaQuotient f = parse_bracket(text);
    const QExpansion e = expand_eta_quotient(f, 20);
    EXPECT_EQ(cusp_order(f, level, level), e.offset()) << text;
    std::map<std::int64_t, std::int64_t> flipped;
    for (const auto& [d, r] : f.terms()) flipped[level / d] = r;
    const QExpansion e0 = expand_eta_quotient(EtaQuotient(flipped), 20);
    EXPECT_EQ(cusp_order(f, level, 1), e0.offset()) << text;
    EXPECT_EQ(e.coeffs().front(), 1) << text;  // every eta-quotient leads with 1
  }
}

TEST(CuspOrders, TotalOrderMatchesValenceFormula) {
  // Σ over cusps of order = k·μ/12 for a weight-k form with no zeros in the upper half plane.
  for (const auto& [text, level] : table_quotients()) {
    const EtaQuotient f = parse_bracket(text);
    Rational total(0);
    for (std::int64_t d : divisors(level)) total += Rational(euler_phi(std::gcd(d, level / d))) * cusp_order(f, level, d);
    Rational mu(level);
    for (const auto& pp : factorize(level)) mu *= Rational(pp.prime + 1) / Rational(pp.prime);
    EXPECT_EQ(total, mu / Rational(6)) << text;
  }
}

TEST(Expansion, MultiplicativeInExponents) {
  auto g = rng(123);
  for (int i = 0; i < 60; ++i) {
    std::map<std::int64_t, std::int64_t> a, b, merged;
    for (int j = 0; j < 3; ++j) {
      a[uniform(g, 1, 12)] = uniform(g, -3, 3);
      b[uniform(g, 1, 12)] = uniform(g, -3, 3);
    }
    for (const auto& [d, r] : a) merged[d] += r;
    for (const auto& [d, r] : b) merged[d] += r;
    const EtaQuotient fa(a), fb(b), fm(merged);
    EXPECT_EQ(expand_eta_quotient(fm, 40), series_mul(expand_eta_quotient(fa, 40), expand_eta_quotient(fb, 40)));
  }
  EXPECT_EQ(expand_eta_quotient(parse_bracket("[1]"), 30), eta_expansion(30));
}

TEST(Expansion, KnownLeadingTerms) {
  const QExpansion f = expand_eta_quotient(parse_bracket("[1^2 11^2]"), 12);
  const std::vector<std::int64_t> a = {1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, -2};
  for (std::size_t n = 1; n <= a.size(); ++n) EXPECT_EQ(f.coefficient(static_cast<std::int64_t>(n)), a[n - 1]) << n;
  const QExpansion g = expand_eta_quotient(parse_bracket("[6^4]"), 40);
  for (std::int64_t n = 1; n <= 40; ++n) {
    const BigInt want = n == 1 ? 1 : n == 7 ? -4 : n == 13 ? 2 : n == 19 ? 8 : n == 25 ? -5 : n == 31 ? -4 : n == 37 ? -10 : 0;
    EXPECT_EQ(g.coefficient(n), want) << n;
  }
}
