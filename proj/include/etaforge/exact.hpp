#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "etaforge/errors.hpp"

namespace etaforge {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}
  Rational(int value) : value_(value) {}
  Rational(long long value) : value_(BigInt(std::to_string(value))) {}
  Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "a", "-a", "a/b" (whitespace not allowed).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  std::string to_string() const;

  Rational operator-() const { return from_raw(-value_); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  static Rational from_raw(mpq_class v);
  mpq_class value_{0};
};

Rational pow(const Rational& base, std::int64_t exponent);

/// Largest k with p^k | n. n must be nonzero.
int ord_p(const BigInt& n, std::int64_t p);
/// ord_p(numerator) - ord_p(denominator).
int ord_p(const Rational& alpha, std::int64_t p);

/// Residue of alpha in [0, p). The denominator must be prime to p.
std::int64_t mod_p(const Rational& alpha, std::int64_t p);
std::int64_t mod_p(const BigInt& n, std::int64_t p);
std::int64_t mod_p(std::int64_t n, std::int64_t p);

/// a/b ≡ c/d (mod p) in the sense ord_p(a/b - c/d) >= 1; both sides must be p-integral.
bool congruent_mod_p(const Rational& lhs, const Rational& rhs, std::int64_t p);

std::int64_t pow_mod(std::int64_t base, std::int64_t exponent, std::int64_t modulus);
std::int64_t inverse_mod(std::int64_t value, std::int64_t modulus);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t limit);
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

struct PrimePower {
  std::int64_t prime;
  int exponent;
};
/// Trial-division factorization of |n|, n != 0.
std::vector<PrimePower> factorize(std::int64_t n);
/// Distinct prime divisors of |n| by trial division; n != 0.
std::vector<std::int64_t> prime_support(const BigInt& n);

std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
BigInt binomial(std::int64_t n, std::int64_t k);

/// Dense polynomial with integer coefficients, coeffs[i] multiplies x^i.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(std::size_t degree, const BigInt& coefficient = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact division by a monic divisor; throws DomainError if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& monic_divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Φ_m, obtained by dividing x^m - 1 by Φ_d for every proper divisor d of m.
IntPolynomial cyclotomic_polynomial(std::int64_t m);

}  // namespace etaforge
