#pragma once

#include <cstdint>

#include "etaforge/exact.hpp"

namespace etaforge {

/// Every term of the dimension formula for S₂(Γ₀(N)).
struct DimensionBreakdown {
  std::int64_t level = 0;
  Rational index_term;          // (N/12)·∏_{p|N}(1 + 1/p)
  Rational ramification_term;   // (1/2)·∏_{p|N} λ_p
  std::int64_t elliptic4_count = 0;  // #{x mod N : x² + 1 ≡ 0}
  std::int64_t elliptic3_count = 0;  // #{x mod N : x² + x + 1 ≡ 0}
  std::int64_t dimension = 0;
};

/// λ_p = p^{r/2} + p^{r/2-1} for even r, 2p^{(r-1)/2} for odd r.
std::int64_t ramification_factor(std::int64_t p, int r);

/// Throws Error if the terms fail to sum to a nonnegative integer.
DimensionBreakdown dim_S2(std::int64_t level);

/// μ = N·∏_{p|N}(1 + 1/p), the index of Γ₀(N) in SL₂(ℤ).
std::int64_t gamma0_index(std::int64_t level);

}  // namespace etaforge
