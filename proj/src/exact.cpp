#include "etaforge/exact.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

namespace etaforge {

namespace {

bool valid_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(i), text.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_raw(mpq_class v) {
  Rational r;
  r.value_ = std::move(v);
  r.value_.canonicalize();
  return r;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!valid_integer_text(num)) throw ParseError("invalid rational: '" + std::string(text) + "'");
  std::string num_text(num.front() == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Rational(BigInt(num_text));
  const std::string_view den = text.substr(slash + 1);
  if (!valid_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("invalid rational: '" + std::string(text) + "'");
  const BigInt d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(BigInt(num_text), d);
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  value_.canonicalize();
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  value_.canonicalize();
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  value_.canonicalize();
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  value_.canonicalize();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

int ord_p(const BigInt& n, std::int64_t p) {
  if (n == 0) throw UndefinedValuation("ord_p(0) is undefined");
  if (p < 2) throw DomainError("ord_p needs a prime");
  BigInt m = abs(n);
  const BigInt bp(static_cast<long>(p));
  int k = 0;
  while (mpz_divisible_p(m.get_mpz_t(), bp.get_mpz_t())) {
    m /= bp;
    ++k;
  }
  return k;
}

int ord_p(const Rational& alpha, std::int64_t p) {
  if (alpha.is_zero()) throw UndefinedValuation("ord_p(0) is undefined");
  return ord_p(alpha.numerator(), p) - ord_p(alpha.denominator(), p);
}

std::int64_t mod_p(const BigInt& n, std::int64_t p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

std::int64_t mod_p(std::int64_t n, std::int64_t p) {
  const std::int64_t r = n % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_p(const Rational& alpha, std::int64_t p) {
  const std::int64_t den = mod_p(alpha.denominator(), p);
  if (den == 0) throw DomainError("denominator of " + alpha.to_string() + " is divisible by " + std::to_string(p));
  const std::int64_t num = mod_p(alpha.numerator(), p);
  return static_cast<std::int64_t>((static_cast<__int128>(num) * inverse_mod(den, p)) % p);
}

bool congruent_mod_p(const Rational& lhs, const Rational& rhs, std::int64_t p) {
  if (mod_p(lhs.denominator(), p) == 0 || mod_p(rhs.denominator(), p) == 0)
    throw DomainError("congruence mod " + std::to_string(p) + " between non p-integral rationals");
  const Rational diff = lhs - rhs;
  return diff.is_zero() || ord_p(diff, p) >= 1;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exponent, std::int64_t modulus) {
  if (modulus == 1) return 0;
  __int128 result = 1;
  __int128 b = mod_p(base, modulus);
  while (exponent > 0) {
    if (exponent & 1) result = (result * b) % modulus;
    b = (b * b) % modulus;
    exponent >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t inverse_mod(std::int64_t value, std::int64_t modulus) {
  std::int64_t old_r = mod_p(value, modulus), r = modulus;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) throw DomainError(std::to_string(value) + " is not invertible mod " + std::to_string(modulus));
  return mod_p(old_s, modulus);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t p : primes_up_to(hi))
    if (p >= lo) out.push_back(p);
  return out;
}

std::vector<PrimePower> factorize(std::int64_t n) {
  if (n == 0) throw DomainError("cannot factor 0");
  std::vector<PrimePower> out;
  n = n < 0 ? -n : n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::int64_t> prime_support(const BigInt& n) {
  if (n == 0) throw DomainError("cannot factor 0");
  BigInt m = abs(n);
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; BigInt(static_cast<long>(p)) * p <= m; ++p) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    out.push_back(p);
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) m /= static_cast<unsigned long>(p);
  }
  if (m > 1) {
    if (!m.fits_slong_p()) throw DomainError("prime factor too large: " + m.get_str());
    out.push_back(m.get_si());
  }
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& coefficient) {
  std::vector<BigInt> c(degree + 1, 0);
  c[degree] = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.coeffs_.empty() || divisor.coeffs_.back() != 1) throw DomainError("divisor must be monic");
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) {
    if (!rem.empty()) throw DomainError("inexact polynomial division");
    return {};
  }
  std::vector<BigInt> quot(rem.size() - dd, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt lead = rem[k + dd];
    quot[k] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= lead * divisor.coeffs_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw DomainError("inexact polynomial division");
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial cyclotomic_polynomial(std::int64_t m) {
  if (m < 1) throw DomainError("cyclotomic order must be positive");
  IntPolynomial result = IntPolynomial::monomial(static_cast<std::size_t>(m)) - IntPolynomial::monomial(0);
  for (std::int64_t d : divisors(m)) {
    if (d == m) continue;
    result = result.divide_exact(cyclotomic_polynomial(d));
  }
  return result;
}

}  // namespace etaforge
