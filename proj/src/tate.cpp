// Tate's algorithm for the local reduction type and conductor exponent of an
// integral Weierstrass model, in the formulation of Cremona's "Algorithms for
// Modular Elliptic Curves" (§3.2). Coordinate changes at p = 2, 3 are found by
// search over residues; for p >= 5 the usual closed forms are used. Every
// change is followed by an exact-divisibility check so a wrong root fails loudly.

#include <sstream>

#include "etaforge/legendre.hpp"

namespace etaforge {

BigInt IntegralModel::discriminant() const {
  const BigInt B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

IntegralModel IntegralModel::rst_transform(const BigInt& r, const BigInt& s, const BigInt& t) const {
  IntegralModel m;
  m.a1 = a1 + 2 * s;
  m.a2 = a2 - s * a1 + 3 * r - s * s;
  m.a3 = a3 + r * a1 + 2 * t;
  m.a4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
  m.a6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
  return m;
}

IntegralModel IntegralModel::scaled(const BigInt& u) const {
  const BigInt u2 = u * u, u3 = u2 * u;
  return {u * a1, u2 * a2, u3 * a3, u2 * u2 * a4, u3 * u3 * a6};
}

std::string IntegralModel::to_string() const {
  std::ostringstream os;
  os << "[" << a1.get_str() << "," << a2.get_str() << "," << a3.get_str() << "," << a4.get_str() << ","
     << a6.get_str() << "]";
  return os.str();
}

std::string KodairaSymbol::to_string() const {
  switch (type) {
    case Kodaira::I0: return "I0";
    case Kodaira::In: return "I" + std::to_string(n);
    case Kodaira::II: return "II";
    case Kodaira::III: return "III";
    case Kodaira::IV: return "IV";
    case Kodaira::I0star: return "I0*";
    case Kodaira::Instar: return "I" + std::to_string(n) + "*";
    case Kodaira::IVstar: return "IV*";
    case Kodaira::IIIstar: return "III*";
    case Kodaira::IIstar: return "II*";
  }
  return "?";
}

namespace {

constexpr int kInfiniteValuation = 1 << 20;

int val(const BigInt& x, std::int64_t p) { return x == 0 ? kInfiniteValuation : ord_p(x, p); }

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

BigInt power(std::int64_t p, int k) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return out;
}

BigInt exact_div(const BigInt& x, const BigInt& d) {
  if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
    throw Error("Tate's algorithm: expected " + d.get_str() + " | " + x.get_str());
  return x / d;
}

std::int64_t res(const BigInt& x, std::int64_t p) { return mod_p(x, p); }

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod_p(a, p)) * mod_p(b, p) % p);
}

// Value of the cubic T³ + bT² + cT + d at x, mod p.
std::int64_t cubic_at(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t x, std::int64_t p) {
  std::int64_t v = 1;
  v = mod_p(mulmod(v, x, p) + b, p);
  v = mod_p(mulmod(v, x, p) + c, p);
  v = mod_p(mulmod(v, x, p) + d, p);
  return v;
}

// Multiplicity of x as a root of the monic cubic mod p, by synthetic division.
int root_multiplicity(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t x, std::int64_t p) {
  std::vector<std::int64_t> poly{1, mod_p(b, p), mod_p(c, p), mod_p(d, p)};  // high to low
  int m = 0;
  while (poly.size() > 1) {
    std::vector<std::int64_t> q(poly.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      acc = mod_p(mulmod(acc, x, p) + poly[i], p);
      if (i + 1 < poly.size()) q[i] = acc;
    }
    if (acc != 0) break;
    ++m;
    poly = std::move(q);
  }
  return m;
}

enum class CubicShape { Distinct, Double, Triple };

struct CubicAnalysis {
  CubicShape shape = CubicShape::Distinct;
  std::int64_t repeated_root = 0;
};

CubicAnalysis analyse_cubic(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t p) {
  if (p <= 3) {
    for (std::int64_t x = 0; x < p; ++x) {
      const int m = root_multiplicity(b, c, d, x, p);
      if (m == 3) return {CubicShape::Triple, x};
      if (m == 2) return {CubicShape::Double, x};
    }
    return {};
  }
  const auto B = big(b), C = big(c), D = big(d);
  const BigInt disc = B * B * C * C - 4 * C * C * C - 4 * B * B * B * D - 27 * D * D + 18 * B * C * D;
  if (res(disc, p) != 0) return {};
  const std::int64_t x = res(B * B - 3 * C, p);
  CubicAnalysis out;
  if (x != 0) {
    out.shape = CubicShape::Double;
    out.repeated_root = mulmod(res(9 * D - B * C, p), inverse_mod(2 * x, p), p);
  } else {
    out.shape = CubicShape::Triple;
    out.repeated_root = mulmod(mod_p(-b, p), inverse_mod(3, p), p);
  }
  const int want = out.shape == CubicShape::Double ? 2 : 3;
  if (root_multiplicity(b, c, d, out.repeated_root, p) < want || cubic_at(b, c, d, out.repeated_root, p) != 0)
    throw Error("Tate's algorithm: repeated root formula failed");
  return out;
}

// Double root of A·X² + B·X + C mod p (A a unit), whose discriminant is known to vanish mod p.
std::int64_t quadratic_double_root(const BigInt& A, const BigInt& B, const BigInt& C, std::int64_t p) {
  const std::int64_t a = res(A, p), b = res(B, p), c = res(C, p);
  if (p == 2) {
    for (std::int64_t x = 0; x < 2; ++x)
      if (mod_p(a * x * x + b * x + c, 2) == 0) return x;
    throw Error("Tate's algorithm: no double root mod 2");
  }
  const std::int64_t x = mulmod(mod_p(-b, p), inverse_mod(2 * a, p), p);
  if (mod_p(mulmod(mulmod(a, x, p), x, p) + mulmod(b, x, p) + c, p) != 0)
    throw Error("Tate's algorithm: quadratic root check failed");
  return x;
}

// Translation (r, t) moving the singular point of the reduction to (0, 0).
std::pair<BigInt, BigInt> singular_point_shift(const IntegralModel& m, std::int64_t p) {
  if (p <= 3) {
    const std::int64_t a1 = res(m.a1, p), a2 = res(m.a2, p), a3 = res(m.a3, p), a4 = res(m.a4, p),
                       a6 = res(m.a6, p);
    for (std::int64_t x = 0; x < p; ++x)
      for (std::int64_t y = 0; y < p; ++y) {
        const std::int64_t f = y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6;
        const std::int64_t fx = a1 * y - 3 * x * x - 2 * a2 * x - a4;
        const std::int64_t fy = 2 * y + a1 * x + a3;
        if (mod_p(f, p) == 0 && mod_p(fx, p) == 0 && mod_p(fy, p) == 0) return {big(x), big(y)};
      }
    throw Error("Tate's algorithm: no singular point mod " + std::to_string(p));
  }
  const BigInt b2 = m.b2(), c4 = m.c4(), c6 = m.c6();
  std::int64_t r;
  if (res(c4, p) == 0)
    r = mulmod(res(-b2, p), inverse_mod(12, p), p);
  else
    r = mulmod(res(-(c6 + b2 * c4), p), inverse_mod(mulmod(12, res(c4, p), p), p), p);
  const std::int64_t t = mulmod(res(-(m.a1 * big(r) + m.a3), p), inverse_mod(2, p), p);
  return {big(r), big(t)};
}

// (s, t) with p | a1, a2; p² | a3, a4; p³ | a6 after the change.
std::pair<BigInt, BigInt> additive_shift(const IntegralModel& m, std::int64_t p) {
  const auto ok = [&](const IntegralModel& c) {
    return val(c.a1, p) >= 1 && val(c.a2, p) >= 1 && val(c.a3, p) >= 2 && val(c.a4, p) >= 2 && val(c.a6, p) >= 3;
  };
  if (p <= 3) {
    const std::int64_t t_range = p * p * p;
    for (std::int64_t s = 0; s < p; ++s)
      for (std::int64_t t = 0; t < t_range; ++t)
        if (ok(m.rst_transform(0, big(s), big(t)))) return {big(s), big(t)};
    throw Error("Tate's algorithm: no additive shift at p = " + std::to_string(p));
  }
  const BigInt half = big((p + 1) / 2);
  std::pair<BigInt, BigInt> st{-m.a1 * half, -m.a3 * half};
  if (!ok(m.rst_transform(0, st.first, st.second))) throw Error("Tate's algorithm: additive shift failed");
  return st;
}

// Smooth points of the reduction: all projective points minus the singular one.
std::int64_t local_ap_from_points(const IntegralModel& m, std::int64_t p, bool good) {
  const std::int64_t total = count_points(m, p);
  return good ? p + 1 - total : p - (total - 1);
}

}  // namespace

std::int64_t count_points(const IntegralModel& model, std::int64_t p) {
  const std::int64_t a1 = res(model.a1, p), a2 = res(model.a2, p), a3 = res(model.a3, p),
                     a4 = res(model.a4, p), a6 = res(model.a6, p);
  std::int64_t count = 1;  // point at infinity
  if (p == 2) {
    for (std::int64_t x = 0; x < 2; ++x)
      for (std::int64_t y = 0; y < 2; ++y)
        if (mod_p(y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6, 2) == 0) ++count;
    return count;
  }
  const LegendreSymbolTable phi(p);
  for (std::int64_t x = 0; x < p; ++x) {
    // y² + (a1x + a3)y = f(x) has 1 + φ((a1x + a3)² + 4f(x)) solutions.
    const std::int64_t lin = mod_p(a1 * x + a3, p);
    const std::int64_t fx = cubic_at(a2, a4, a6, x, p);
    count += 1 + phi(mulmod(lin, lin, p) + mulmod(4, fx, p));
  }
  return count;
}

ReductionData tate_local(const IntegralModel& model, std::int64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (model.discriminant() == 0) throw DomainError("singular Weierstrass model");
  IntegralModel C = model;
  for (;;) {
    ReductionData out;
    out.prime = p;
    const int vpd = val(C.discriminant(), p);
    out.discriminant_valuation = vpd;
    if (vpd == 0) {
      out.minimal_model = C;
      out.local_ap = local_ap_from_points(C, p, true);
      return out;
    }

    const auto [r0, t0] = singular_point_shift(C, p);
    C = C.rst_transform(r0, 0, t0);
    if (val(C.a3, p) < 1 || val(C.a4, p) < 1 || val(C.a6, p) < 1)
      throw Error("Tate's algorithm: singular point not moved to the origin");

    const auto finish = [&](Kodaira type, int n, int f) {
      out.kodaira = {type, n};
      out.conductor_exponent = f;
      out.minimal_model = C;
      out.local_ap = local_ap_from_points(C, p, false);
      return out;
    };

    if (val(C.b2(), p) == 0) return finish(Kodaira::In, vpd, 1);
    if (val(C.a6, p) < 2) return finish(Kodaira::II, 0, vpd);
    if (val(C.b8(), p) < 3) return finish(Kodaira::III, 0, vpd - 1);
    if (val(C.b6(), p) < 3) return finish(Kodaira::IV, 0, vpd - 2);

    const auto [s1, t1] = additive_shift(C, p);
    C = C.rst_transform(0, s1, t1);

    const BigInt P = big(p), P2 = P * P, P3 = P2 * P;
    const CubicAnalysis cubic =
        analyse_cubic(res(exact_div(C.a2, P), p), res(exact_div(C.a4, P2), p), res(exact_div(C.a6, P3), p), p);

    if (cubic.shape == CubicShape::Distinct) return finish(Kodaira::I0star, 0, vpd - 4);

    if (cubic.shape == CubicShape::Double) {
      C = C.rst_transform(P * cubic.repeated_root, 0, 0);
      int ix = 3, iy = 3;
      BigInt mx = P2, my = P2;
      for (;;) {
        BigInt a2t = exact_div(C.a2, P);
        BigInt a3t = exact_div(C.a3, my);
        BigInt a4t = exact_div(C.a4, P * mx);
        BigInt a6t = exact_div(C.a6, mx * my);
        if (res(a3t * a3t + 4 * a6t, p) != 0) break;
        C = C.rst_transform(0, 0, my * quadratic_double_root(1, a3t, -a6t, p));
        my *= P;
        ++iy;
        a2t = exact_div(C.a2, P);
        a4t = exact_div(C.a4, P * mx);
        a6t = exact_div(C.a6, mx * my);
        if (res(a4t * a4t - 4 * a2t * a6t, p) != 0) break;
        C = C.rst_transform(mx * quadratic_double_root(a2t, a4t, a6t, p), 0, 0);
        mx *= P;
        ++ix;
      }
      return finish(Kodaira::Instar, ix + iy - 5, vpd - ix - iy + 1);
    }

    // Triple root: move it to 0.
    C = C.rst_transform(P * cubic.repeated_root, 0, 0);
    const BigInt a3t = exact_div(C.a3, P2);
    const BigInt a6t = exact_div(C.a6, P2 * P2);
    if (res(a3t * a3t + 4 * a6t, p) != 0) return finish(Kodaira::IVstar, 0, vpd - 6);
    C = C.rst_transform(0, 0, P2 * quadratic_double_root(1, a3t, -a6t, p));
    if (val(C.a3, p) < 3 || val(C.a6, p) < 5) throw Error("Tate's algorithm: IV* shift failed");
    if (val(C.a4, p) < 4) return finish(Kodaira::IIIstar, 0, vpd - 7);
    if (val(C.a6, p) < 6) return finish(Kodaira::IIstar, 0, vpd - 8);

    // Not minimal at p: divide a_i by p^i and start over.
    C = {exact_div(C.a1, P), exact_div(C.a2, P2), exact_div(C.a3, P3), exact_div(C.a4, power(p, 4)),
         exact_div(C.a6, power(p, 6))};
  }
}

}  // namespace etaforge
