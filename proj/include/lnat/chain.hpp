#ifndef LNAT_CHAIN_HPP
#define LNAT_CHAIN_HPP

// Maximal chains: base point, insertion order and convex-combination weights
// expressing a hull point x as z + sum_k mu_k * chi(A_k) with every chain
// point z + chi(A_k) a member of K.

#include <vector>

#include "lnat/domain.hpp"
#include "lnat/rational.hpp"

namespace lnat {

struct MaximalChain {
  LatticePoint base;         // z with z <= x <= z + 1 and z in K
  std::vector<int> order;    // coordinate added at each step (0-based)
  RatVec coeffs;             // mu_0 .. mu_d, nonnegative, summing to one
  RatVec point;              // the x the chain was built from

  int dim() const { return static_cast<int>(order.size()); }

  /// base + indicator of the first k coordinates in `order`.
  LatticePoint chain_point(int k) const;

  /// Exact reconstruction base + sum mu_k chi(A_k); equals `point`.
  RatVec reconstruct() const;
};

/// Computes a maximal chain associated with x (deterministic; ties in the
/// topological order go to the larger fractional part, then the smaller
/// index). Throws OutOfDomainError when x is outside conv(K).
MaximalChain maximal_chain(const LNatDomain& domain, const RatVec& x);

/// Weights mu for a given base and insertion order; requires the fractional
/// parts of x - base to be non-increasing along `order`.
RatVec decompose(const LatticePoint& base, const std::vector<int>& order, const RatVec& x);

/// Level-set rounding z + chi({i : x_i > base_i + threshold}); the result is
/// the chain point of index |S_threshold|, hence a member of K.
LatticePoint round_by_threshold(const MaximalChain& chain, const Rat& threshold);

/// Number of coordinates with fractional part strictly above the threshold.
int level_set_size(const MaximalChain& chain, const Rat& threshold);

}  // namespace lnat

#endif
