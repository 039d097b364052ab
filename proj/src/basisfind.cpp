#include "etaforge/basisfind.hpp"

#include <algorithm>
#include <numeric>

namespace etaforge {

namespace {

struct SearchState {
  std::int64_t level;
  int bound;
  std::vector<std::int64_t> divs;
  std::vector<std::int64_t> exps;
  std::vector<EtaQuotient> found;
};

bool orders_positive(const SearchState& s) {
  // Sign of the cusp order at d is the sign of Σ_δ gcd(d,δ)²·r_δ·(N/δ).
  for (std::int64_t d : s.divs) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < s.divs.size(); ++i) {
      if (s.exps[i] == 0) continue;
      const std::int64_t g = std::gcd(d, s.divs[i]);
      acc += g * g * s.exps[i] * (s.level / s.divs[i]);
    }
    if (acc <= 0) return false;
  }
  return true;
}

void search(SearchState& s, std::size_t pos, std::int64_t sum, std::int64_t lower, std::int64_t upper) {
  const std::size_t n = s.divs.size();
  const auto remaining = static_cast<std::int64_t>(n - pos);
  if (std::abs(4 - sum) > remaining * s.bound) return;
  if (pos + 1 == n) {
    const std::int64_t r = 4 - sum;
    const std::int64_t delta = s.divs[pos];
    if ((lower + delta * r) % 24 != 0 || (upper + (s.level / delta) * r) % 24 != 0) return;
    s.exps[pos] = r;
    if (orders_positive(s)) {
      std::map<std::int64_t, std::int64_t> terms;
      for (std::size_t i = 0; i < n; ++i)
        if (s.exps[i] != 0) terms.emplace(s.divs[i], s.exps[i]);
      EtaQuotient q(std::move(terms));
      if (character_check(q)) s.found.push_back(std::move(q));
    }
    return;
  }
  const std::int64_t delta = s.divs[pos];
  for (std::int64_t r = -s.bound; r <= s.bound; ++r) {
    s.exps[pos] = r;
    search(s, pos + 1, sum + r, lower + delta * r, upper + (s.level / delta) * r);
  }
  s.exps[pos] = 0;
}

RationalVector coefficient_vector(const QExpansion& f, std::size_t terms) {
  RationalVector v(terms);
  for (std::size_t n = 1; n <= terms; ++n) v[n - 1] = Rational(f.coefficient_at(Rational(static_cast<long>(n))));
  return v;
}

}  // namespace

CandidateSet enumerate_candidates(std::int64_t level, int bound) {
  if (level < 1 || bound < 1) throw DomainError("candidate search needs N >= 1 and B >= 1");
  SearchState s{level, bound, divisors(level), {}, {}};
  s.exps.assign(s.divs.size(), 0);
  search(s, 0, 0, 0, 0);
  // Everything found must pass the reference membership test.
  for (const auto& q : s.found)
    if (!is_cusp_form(q, level).is_cusp_form) throw Error("candidate search admitted " + format_bracket(q));
  std::sort(s.found.begin(), s.found.end(),
            [](const EtaQuotient& a, const EtaQuotient& b) { return format_bracket(a) < format_bracket(b); });
  return {level, bound, std::move(s.found)};
}

IndexWitness independence_indices(const std::vector<QExpansion>& series, std::size_t d, std::size_t scan_limit) {
  if (d == 0) return {};
  if (series.size() < d) throw DomainError("fewer series than the target dimension");
  const std::size_t k = series.size();
  IndexWitness w;
  EchelonBasis columns(k);
  std::vector<RationalVector> chosen_columns;
  for (std::size_t n = 1; n <= scan_limit && w.indices.size() < d; ++n) {
    RationalVector col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = Rational(series[i].coefficient_at(Rational(static_cast<long>(n))));
    if (columns.insert(col)) {
      w.indices.push_back(static_cast<std::int64_t>(n));
      chosen_columns.push_back(std::move(col));
    }
  }
  if (w.indices.size() < d)
    throw InsufficientPrecision("only rank " + std::to_string(w.indices.size()) + " of " + std::to_string(d) +
                                " reached within " + std::to_string(scan_limit) + " coefficients");
  EchelonBasis rows(d);
  for (std::size_t i = 0; i < k && w.rows.size() < d; ++i) {
    RationalVector row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = chosen_columns[j][i];
    if (rows.insert(row)) {
      w.rows.push_back(i);
      w.matrix.push_back(std::move(row));
    }
  }
  return w;
}

std::size_t sturm_bound(std::int64_t level) {
  const std::int64_t mu = gamma0_index(level);
  return static_cast<std::size_t>((mu + 5) / 6);
}

std::size_t default_verification_precision(std::int64_t level) {
  return std::max<std::size_t>(2 * sturm_bound(level), 100);
}

VerificationResult verify_against(const NewformSeries& target, const Combination& combo, std::size_t precision) {
  const std::int64_t level = target.level;
  if (precision < sturm_bound(level))
    throw InsufficientPrecision("verification to " + std::to_string(precision) + " is below the Sturm bound " +
                                std::to_string(sturm_bound(level)) + " at level " + std::to_string(level));
  if (precision > target.size())
    throw InsufficientPrecision("target newform has only " + std::to_string(target.size()) + " coefficients");
  for (const auto& [c, g] : combo)
    if (!is_cusp_form(g, level).is_cusp_form)
      throw DomainError(format_bracket(g) + " is not in S2(Gamma0(" + std::to_string(level) + "))");

  EtaQuotientExpander expander(precision);
  RationalVector sum(precision, Rational(0));
  for (const auto& [c, g] : combo) {
    const QExpansion e = expander.expand(g);
    for (std::size_t n = 1; n <= precision; ++n) {
      const BigInt v = e.coefficient_at(Rational(static_cast<long>(n)));
      if (v != 0) sum[n - 1] += c * Rational(v);
    }
  }
  VerificationResult out;
  out.checked_to = precision;
  out.matches = true;
  for (std::size_t n = 1; n <= precision; ++n) {
    const Rational expected(target.a(n));
    if (expected != sum[n - 1]) {
      out.matches = false;
      out.first_mismatch = n;
      out.expected = expected;
      out.actual = sum[n - 1];
      break;
    }
  }
  return out;
}

VerificationResult verify_identity(const Rational& lam, const Combination& combo, std::size_t precision) {
  return verify_against(newform_coefficients(lam, precision), combo, precision);
}

CombinationSolution solve_combination(const NewformSeries& target, const std::vector<EtaQuotient>& basis,
                                      const IndexWitness& witness) {
  const std::size_t d = witness.indices.size();
  if (basis.size() != d || witness.rows.size() != d)
    throw DomainError("witness does not match the basis size");
  // Σ_i c_i·g_{i,t_j} = a(t_j): the transpose of the witness matrix.
  RationalMatrix system(d, RationalVector(d));
  RationalVector rhs(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) system[j][i] = witness.matrix[i][j];
    rhs[j] = Rational(target.a(static_cast<std::size_t>(witness.indices[j])));
  }
  const RationalVector coeffs = solve_square(std::move(system), std::move(rhs));
  // solve_square is indexed by witness row; map back to basis order.
  CombinationSolution out;
  out.coefficients.assign(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) out.coefficients[witness.rows[i]] = coeffs[i];

  Combination combo;
  for (std::size_t i = 0; i < d; ++i) combo.emplace_back(out.coefficients[i], basis[i]);
  const VerificationResult check = verify_against(target, combo, target.size());
  if (!check.matches)
    throw Mismatch("target is not in the span: coefficient " + std::to_string(*check.first_mismatch) +
                   " expected " + check.expected.to_string() + ", combination gives " + check.actual.to_string());
  out.verified_to = check.checked_to;
  return out;
}

const QExpansion& EtaQuotientExpander::factor(std::int64_t delta, std::int64_t r) {
  const auto key = std::make_pair(delta, r);
  auto it = factors_.find(key);
  if (it != factors_.end()) return it->second;
  const auto d = static_cast<std::size_t>(delta);
  const QExpansion base = eta_expansion((truncation_ + d - 1) / d).dilate(delta);
  return factors_.emplace(key, series_int_pow(base, r).truncated(truncation_)).first->second;
}

QExpansion EtaQuotientExpander::expand(const EtaQuotient& f) {
  QExpansion result = QExpansion::one(truncation_);
  for (const auto& [delta, r] : f.terms()) result = series_mul(result, factor(delta, r));
  return result;
}

std::vector<EtaQuotient> select_basis(const std::vector<EtaQuotient>& preferred,
                                      const std::vector<EtaQuotient>& candidates, std::size_t dimension,
                                      EtaQuotientExpander& expander) {
  std::vector<EtaQuotient> basis;
  EchelonBasis span(expander.truncation());
  const auto consider = [&](const EtaQuotient& q) {
    if (basis.size() >= dimension) return;
    if (std::find(basis.begin(), basis.end(), q) != basis.end()) return;
    if (span.insert(coefficient_vector(expander.expand(q), expander.truncation()))) basis.push_back(q);
  };
  for (const auto& q : preferred) consider(q);
  for (const auto& q : candidates) consider(q);
  return basis;
}

const std::vector<std::pair<Rational, Combination>>& tabulated_representations() {
  static const std::vector<std::pair<Rational, Combination>> table = [] {
    const auto q = [](const char* text) { return parse_bracket(text); };
    std::vector<std::pair<Rational, Combination>> t;
    t.push_back({Rational(27) / Rational(16),
                 {{Rational(1), q("[1^2 11^2]")}, {Rational(3), q("[3^2 33^2]")},
                  {Rational(3), q("[1^1 3^1 11^1 33^1]")}}});
    t.push_back({Rational(5),
                 {{Rational(1), q("[1^-1 2^2 4^2 5^1 8^-1 40^1]")},
                  {Rational(1), q("[1^1 5^-1 8^1 10^2 20^2 40^-1]")}}});
    t.push_back({Rational(81) / Rational(49),
                 {{Rational(2), q("[1^-1 2^2 3^1 7^2 14^-1 42^1]")},
                  {Rational(-3), q("[3^1 6^1 21^1 42^1]")},
                  {Rational(1), q("[2^1 3^2 6^-1 7^1 21^-1 42^2]")},
                  {Rational(1), q("[1^1 3^-1 6^2 14^1 21^2 42^-1]")}}});
    t.push_back({Rational(-7) / Rational(25),
                 {{Rational(1), q("[1^-1 2^2 5^2 7^-1 10^-1 14^2 35^2 70^-1]")},
                  {Rational(-1), q("[1^2 2^-1 5^-1 7^2 10^2 14^-1 35^-1 70^2]")}}});
    return t;
  }();
  return table;
}

std::optional<Combination> tabulated_representation(const Rational& lam) {
  for (const auto& [l, combo] : tabulated_representations())
    if (l == lam) return combo;
  return std::nullopt;
}

Combination DiscoveryReport::combination() const {
  Combination out;
  for (std::size_t i = 0; i < basis.size() && i < solution.coefficients.size(); ++i)
    if (!solution.coefficients[i].is_zero()) out.emplace_back(solution.coefficients[i], basis[i]);
  return out;
}

DiscoveryReport discover_representation(const Rational& lam, const DiscoveryOptions& options) {
  DiscoveryReport report;
  report.lam = lam;
  report.conductor = conductor(lam);
  const std::int64_t level = report.conductor.conductor;
  report.dimension = dim_S2(level);
  report.candidates = enumerate_candidates(level, options.bound);
  report.precision = std::max(options.precision.value_or(default_verification_precision(level)), sturm_bound(level));

  const auto d = static_cast<std::size_t>(report.dimension.dimension);
  std::vector<EtaQuotient> preferred;
  for (const auto& q : options.preferred)
    if (is_cusp_form(q, level).is_cusp_form) preferred.push_back(q);

  EtaQuotientExpander expander(report.precision);
  report.basis = select_basis(preferred, report.candidates.quotients, d, expander);
  report.complete_basis = report.basis.size() == d;
  if (report.basis.empty()) {
    report.failure = "no eta-quotient candidates at level " + std::to_string(level);
    return report;
  }

  std::vector<QExpansion> expansions;
  for (const auto& q : report.basis) expansions.push_back(expander.expand(q));
  report.witness = independence_indices(expansions, report.basis.size(), report.precision);

  const NewformSeries target = newform_coefficients(lam, report.precision);
  try {
    report.solution = solve_combination(target, report.basis, report.witness);
    report.in_span = true;
  } catch (const Mismatch& e) {
    report.failure = e.what();
  }
  return report;
}

}  // namespace etaforge
