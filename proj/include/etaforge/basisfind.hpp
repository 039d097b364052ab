#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etaforge/dims.hpp"
#include "etaforge/etaq.hpp"
#include "etaforge/legendre.hpp"
#include "etaforge/linalg.hpp"

namespace etaforge {

/// Eta-quotients supported on the divisors of N that lie in S₂(Γ₀(N)).
struct CandidateSet {
  std::int64_t level = 0;
  int bound = 0;
  std::vector<EtaQuotient> quotients;  // sorted by canonical bracket text
};

/// Every δ ↦ r_δ over δ | N with |r_δ| <= bound that passes is_cusp_form(·, N).
CandidateSet enumerate_candidates(std::int64_t level, int bound);

/// Coefficient indices t₁ < … < t_d at which the selected series are independent.
struct IndexWitness {
  std::vector<std::int64_t> indices;
  std::vector<std::size_t> rows;  // which input series form the d×d system
  RationalMatrix matrix;          // matrix[i][j] = coefficient of q^{t_j} in series rows[i]
};

/// Greedy "first ascending" index search over n = 1..scan_limit.
/// Throws InsufficientPrecision if rank d is not reached.
IndexWitness independence_indices(const std::vector<QExpansion>& series, std::size_t d, std::size_t scan_limit);

using Combination = std::vector<std::pair<Rational, EtaQuotient>>;

struct VerificationResult {
  bool matches = false;
  std::size_t checked_to = 0;
  std::optional<std::size_t> first_mismatch;  // index n of the first disagreement
  Rational expected;                           // a(n) of the newform at first_mismatch
  Rational actual;                             // the combination's coefficient there
};

/// ⌈μ/6⌉ with μ = [SL₂(ℤ) : Γ₀(N)]; agreement up to this index forces equality in S₂(Γ₀(N)).
std::size_t sturm_bound(std::int64_t level);
/// max(2·⌈μ/6⌉, 100).
std::size_t default_verification_precision(std::int64_t level);

/// Compares Σ cᵢ·gᵢ with the target newform for n = 1..T. Every gᵢ must be in
/// S₂(Γ₀(target.level)) and T must reach the Sturm bound.
VerificationResult verify_against(const NewformSeries& target, const Combination& combo, std::size_t precision);
VerificationResult verify_identity(const Rational& lam, const Combination& combo, std::size_t precision);

struct CombinationSolution {
  std::vector<Rational> coefficients;  // one per basis element
  std::size_t verified_to = 0;
};

/// Solves at the witness indices, then verifies against all of `target`.
/// Throws SingularSystem for a stale witness and Mismatch if the target is not in the span.
CombinationSolution solve_combination(const NewformSeries& target, const std::vector<EtaQuotient>& basis,
                                      const IndexWitness& witness);

/// Memoised expansions of η(δz)^r, shared by all quotients expanded to the same precision.
class EtaQuotientExpander {
 public:
  explicit EtaQuotientExpander(std::size_t truncation) : truncation_(truncation) {}
  QExpansion expand(const EtaQuotient& f);
  std::size_t truncation() const { return truncation_; }

 private:
  const QExpansion& factor(std::int64_t delta, std::int64_t r);
  std::size_t truncation_;
  std::map<std::pair<std::int64_t, std::int64_t>, QExpansion> factors_;
};

/// Greedy rank-increasing selection: `preferred` first, then `candidates` in order.
std::vector<EtaQuotient> select_basis(const std::vector<EtaQuotient>& preferred,
                                      const std::vector<EtaQuotient>& candidates, std::size_t dimension,
                                      EtaQuotientExpander& expander);

/// Combinations of eta-quotients known to represent f_λ, keyed by λ.
const std::vector<std::pair<Rational, Combination>>& tabulated_representations();
std::optional<Combination> tabulated_representation(const Rational& lam);

struct DiscoveryOptions {
  int bound = 3;
  std::optional<std::size_t> precision;  // defaults to default_verification_precision(N)
  std::vector<EtaQuotient> preferred;    // tried before the canonical candidate order
};

/// The whole pipeline: conductor, dimension, candidates, basis, witness, solve, verify.
struct DiscoveryReport {
  Rational lam;
  ConductorResult conductor;
  DimensionBreakdown dimension;
  CandidateSet candidates;
  std::vector<EtaQuotient> basis;
  IndexWitness witness;
  std::size_t precision = 0;
  bool complete_basis = false;
  bool in_span = false;
  CombinationSolution solution;
  std::string failure;  // set when the newform is not in the span of the basis

  /// Nonzero terms of the solution.
  Combination combination() const;
};

DiscoveryReport discover_representation(const Rational& lam, const DiscoveryOptions& options = {});

}  // namespace etaforge
