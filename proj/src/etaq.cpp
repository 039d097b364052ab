#include "etaforge/etaq.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace etaforge {

EtaQuotient::EtaQuotient(std::map<std::int64_t, std::int64_t> terms) {
  for (const auto& [delta, r] : terms) {
    if (delta < 1) throw DomainError("eta-quotient base must be positive");
    if (r != 0) terms_.emplace(delta, r);
  }
}

std::int64_t EtaQuotient::exponent_sum() const {
  std::int64_t s = 0;
  for (const auto& [delta, r] : terms_) s += r;
  return s;
}

std::int64_t EtaQuotient::weighted_sum() const {
  std::int64_t s = 0;
  for (const auto& [delta, r] : terms_) s += delta * r;
  return s;
}

EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b) {
  auto merged = a.terms_;
  for (const auto& [delta, r] : b.terms_) merged[delta] += r;
  return EtaQuotient(std::move(merged));
}

namespace {

class BracketScanner {
 public:
  explicit BracketScanner(std::string_view text) : text_(text) {}

  EtaQuotient parse() {
    skip_space();
    expect('[');
    std::map<std::int64_t, std::int64_t> terms;
    skip_space();
    while (!at(']')) {
      const std::int64_t base = integer(false);
      std::int64_t exponent = 1;
      if (at('^')) {
        ++pos_;
        const bool braced = at('{');
        if (braced) ++pos_;
        exponent = integer(true);
        if (braced) expect('}');
      }
      if (base < 1) fail("base must be positive");
      if (exponent == 0) fail("zero exponent for base " + std::to_string(base));
      if (!terms.emplace(base, exponent).second) fail("duplicate base " + std::to_string(base));
      if (!at(']') && !at_space()) fail("expected whitespace between terms");
      skip_space();
    }
    if (terms.empty()) fail("empty bracket");
    ++pos_;
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return EtaQuotient(std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad eta-quotient '" + std::string(text_) + "': " + why);
  }
  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool at_space() const { return pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])); }
  void skip_space() {
    while (at_space()) ++pos_;
  }
  void expect(char c) {
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::int64_t integer(bool allow_sign) {
    bool negative = false;
    if (allow_sign && (at('-') || at('+'))) negative = text_[pos_++] == '-';
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000'000) fail("number too large");
    }
    if (pos_ == start) fail("expected a number");
    return negative ? -v : v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require_divides_level(const EtaQuotient& f, std::int64_t level) {
  if (level < 1) throw DomainError("level must be positive");
  for (const auto& [delta, r] : f.terms())
    if (level % delta != 0)
      throw LevelMismatch("eta base " + std::to_string(delta) + " does not divide level " + std::to_string(level));
}

}  // namespace

EtaQuotient parse_bracket(std::string_view text) { return BracketScanner(text).parse(); }

std::string format_bracket(const EtaQuotient& f) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& [delta, r] : f.terms()) {
    if (!first) os << ' ';
    first = false;
    os << delta << '^' << r;
  }
  os << ']';
  return os.str();
}

bool weight_check(const EtaQuotient& f) { return f.exponent_sum() == 4; }

bool congruence_checks(const EtaQuotient& f, std::int64_t level) {
  require_divides_level(f, level);
  std::int64_t lower = 0, upper = 0;
  for (const auto& [delta, r] : f.terms()) {
    lower += delta * r;
    upper += (level / delta) * r;
  }
  return lower % 24 == 0 && upper % 24 == 0;
}

Rational cusp_order(const EtaQuotient& f, std::int64_t level, std::int64_t d) {
  require_divides_level(f, level);
  if (d < 1 || level % d != 0)
    throw LevelMismatch("cusp divisor " + std::to_string(d) + " does not divide level " + std::to_string(level));
  Rational sum(0);
  const std::int64_t g_cusp = std::gcd(d, level / d);
  for (const auto& [delta, r] : f.terms()) {
    const std::int64_t g = std::gcd(d, delta);
    sum += Rational(g * g * r) / Rational(g_cusp * d * delta);
  }
  return Rational(level) / Rational(24) * sum;
}

bool character_check(const EtaQuotient& f) {
  std::map<std::int64_t, std::int64_t> parity;
  for (const auto& [delta, r] : f.terms())
    for (const auto& pp : factorize(delta)) parity[pp.prime] += pp.exponent * r;
  return std::all_of(parity.begin(), parity.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

MembershipResult is_cusp_form(const EtaQuotient& f, std::int64_t level) {
  MembershipResult out;
  out.weight_ok = weight_check(f);
  out.congruences_ok = congruence_checks(f, level);
  out.character_trivial = character_check(f);
  out.report.level = level;
  out.orders_positive = true;
  for (std::int64_t d : divisors(level)) {
    Rational order = cusp_order(f, level, d);
    if (order.sign() <= 0) out.orders_positive = false;
    out.report.entries.push_back({d, std::move(order)});
  }
  out.is_cusp_form = out.weight_ok && out.congruences_ok && out.character_trivial && out.orders_positive;
  return out;
}

QExpansion expand_eta_quotient(const EtaQuotient& f, std::size_t truncation) {
  if (truncation == 0) throw DomainError("expansion needs T >= 1");
  QExpansion result = QExpansion::one(truncation);
  for (const auto& [delta, r] : f.terms()) {
    const auto d = static_cast<std::size_t>(delta);
    const QExpansion base = eta_expansion((truncation + d - 1) / d).dilate(delta);
    result = series_mul(result, series_int_pow(base, r));
  }
  return result.truncated(truncation);
}

}  // namespace etaforge
