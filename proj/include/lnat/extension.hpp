#ifndef LNAT_EXTENSION_HPP
#define LNAT_EXTENSION_HPP

// Convex extension of an L-natural-convex cost and its chain subgradients.

#include <functional>
#include <memory>

#include "lnat/chain.hpp"
#include "lnat/domain.hpp"

namespace lnat {

/// A discrete cost with declared range and smoothness bounds.
///
/// `eval` must be defined on all of K, reentrant, with |eval(z)| <= bound and
/// |eval(z) - eval(z')| <= lipschitz * max_i |z_i - z'_i|.
struct CostOracle {
  std::shared_ptr<const LNatDomain> domain;
  std::function<double(const LatticePoint&)> eval;
  double bound = 0;      // M
  double lipschitz = 0;  // l-infinity Lipschitz constant
};

using Subgradient = std::vector<double>;

/// Extension value sum_k mu_k f(chain point k); exactly dim+1 oracle calls.
double extension_value(const CostOracle& f, const MaximalChain& chain);

/// Subgradient of the extension at the chain's point: consecutive chain-value
/// differences land on the coordinate added at each step.
Subgradient subgradient(const CostOracle& f, const MaximalChain& chain);

/// Expectation of f(level-set rounding) over a uniform threshold, integrated
/// exactly over the fractional-part breakpoints. Agrees with extension_value.
double expected_rounding_value(const CostOracle& f, const MaximalChain& chain);

double l1_norm(const Subgradient& g);

}  // namespace lnat

#endif
