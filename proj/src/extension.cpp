#include "lnat/extension.hpp"

#include <cmath>

namespace lnat {

namespace {

std::vector<double> chain_values(const CostOracle& f, const MaximalChain& chain) {
  const int d = chain.dim();
  std::vector<double> v(d + 1);
  for (int k = 0; k <= d; ++k) v[k] = f.eval(chain.chain_point(k));
  return v;
}

}  // namespace

double extension_value(const CostOracle& f, const MaximalChain& chain) {
  const auto v = chain_values(f, chain);
  double sum = 0;
  for (int k = 0; k <= chain.dim(); ++k) sum += rat_to_double(chain.coeffs[k]) * v[k];
  return sum;
}

Subgradient subgradient(const CostOracle& f, const MaximalChain& chain) {
  const auto v = chain_values(f, chain);
  Subgradient g(chain.dim(), 0.0);
  for (int k = 1; k <= chain.dim(); ++k) g[chain.order[k - 1]] = v[k] - v[k - 1];
  return g;
}

double expected_rounding_value(const CostOracle& f, const MaximalChain& chain) {
  const int d = chain.dim();
  const auto v = chain_values(f, chain);
  // The level set has size k exactly for thresholds between the k-th and
  // (k+1)-th largest fractional parts; integrate the piecewise-constant
  // value over those segments. Segment lengths are formed from the sorted
  // fractional parts directly, not from the chain coefficients.
  RatVec frac(d);
  for (int i = 0; i < d; ++i) frac[i] = chain.point[i] - chain.base[i];
  double sum = 0;
  Rat upper_break(1);
  for (int k = 0; k <= d; ++k) {
    const Rat lower_break = (k == d) ? Rat(0) : frac[chain.order[k]];
    sum += rat_to_double(Rat(upper_break - lower_break)) * v[k];
    upper_break = lower_break;
  }
  return sum;
}

double l1_norm(const Subgradient& g) {
  double n = 0;
  for (double x : g) n += std::fabs(x);
  return n;
}

}  // namespace lnat
