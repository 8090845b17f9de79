#include "lnat/chain.hpp"

#include <algorithm>

namespace lnat {

LatticePoint MaximalChain::chain_point(int k) const {
  LatticePoint z = base;
  for (int s = 0; s < k; ++s) ++z[order[s]];
  return z;
}

RatVec MaximalChain::reconstruct() const {
  const int d = dim();
  RatVec x(d);
  for (int i = 0; i < d; ++i) x[i] = rat(base[i]);
  Rat acc = coeffs[d];  // sum of mu over chain sets containing order[k]
  for (int k = d - 1; k >= 0; --k) {
    x[order[k]] += acc;
    acc += coeffs[k];
  }
  return x;
}

RatVec decompose(const LatticePoint& base, const std::vector<int>& order, const RatVec& x) {
  const int d = static_cast<int>(base.size());
  if (static_cast<int>(order.size()) != d || static_cast<int>(x.size()) != d)
    throw DimensionMismatchError("decompose: base/order/x dimensions disagree");
  std::vector<bool> seen(d, false);
  for (int k : order) {
    if (k < 0 || k >= d || seen[k]) throw std::invalid_argument("decompose: order is not a permutation");
    seen[k] = true;
  }
  RatVec frac(d);
  for (int i = 0; i < d; ++i) {
    frac[i] = x[i] - base[i];
    if (frac[i] < 0 || frac[i] > 1)
      throw std::invalid_argument("decompose: x is not inside the unit cube above base");
  }
  for (int k = 0; k + 1 < d; ++k)
    if (frac[order[k]] < frac[order[k + 1]])
      throw std::invalid_argument("decompose: fractional parts are not non-increasing along order");

  RatVec mu(d + 1);
  mu[0] = 1 - frac[order[0]];
  for (int k = 1; k < d; ++k) mu[k] = frac[order[k - 1]] - frac[order[k]];
  mu[d] = frac[order[d - 1]];
  return mu;
}

// Base-point selection. Fractional coordinates take their floor. An integer
// coordinate x_i sits on a face of the unit cell; it becomes the cell's top
// (base x_i - 1) exactly when the refined region built so far cannot reach
// above x_i, otherwise the cell's bottom (base x_i). Each step pins the
// region to one unit interval, keeping it full-dimensional.
MaximalChain maximal_chain(const LNatDomain& domain, const RatVec& x) {
  const int d = domain.dim();
  if (static_cast<int>(x.size()) != d) throw DimensionMismatchError("chain point dimension mismatch");
  if (!domain.contains(x)) throw OutOfDomainError("maximal_chain: x is outside conv(K)");

  MaximalChain chain;
  chain.point = x;
  chain.base.resize(d);
  BoxRefinement refined(d);
  for (int i = 0; i < d; ++i) {
    Int b;
    if (!is_integral(x[i])) {
      b = floor_to_int(x[i]);
    } else {
      const Int xi = floor_to_int(x[i]);
      const Int reach = domain.coordinate_max(refined, i);
      b = (reach == xi) ? xi - 1 : xi;
    }
    chain.base[i] = b;
    refined[i] = {b, b + 1};
  }

  // Poset of the cell's lattice: adding i without j is infeasible whenever
  // the difference bound base_i - base_j = delta_ij is tight.
  std::vector<std::vector<bool>> requires_before(d, std::vector<bool>(d, false));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && chain.base[i] - chain.base[j] == domain.tightest_difference(i, j))
        requires_before[i][j] = true;

  RatVec frac(d);
  for (int i = 0; i < d; ++i) frac[i] = x[i] - chain.base[i];

  // Topological order; among available coordinates pick the largest
  // fractional part, then the smallest index.
  std::vector<bool> placed(d, false);
  chain.order.reserve(d);
  for (int step = 0; step < d; ++step) {
    int pick = -1;
    for (int i = 0; i < d; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (int j = 0; j < d && ready; ++j)
        if (!placed[j] && requires_before[i][j]) ready = false;
      if (!ready) continue;
      if (pick < 0 || frac[i] > frac[pick]) pick = i;
    }
    if (pick < 0)
      throw std::logic_error("maximal_chain: cyclic poset in a full-dimensional domain");
    placed[pick] = true;
    chain.order.push_back(pick);
  }

  chain.coeffs = decompose(chain.base, chain.order, x);

  for (int k = 0; k <= d; ++k)
    if (!domain.contains(chain.chain_point(k)))
      throw std::logic_error("maximal_chain: chain point escaped K");
  return chain;
}

int level_set_size(const MaximalChain& chain, const Rat& threshold) {
  int size = 0;
  for (int i = 0; i < chain.dim(); ++i)
    if (chain.point[i] - chain.base[i] > threshold) ++size;
  return size;
}

LatticePoint round_by_threshold(const MaximalChain& chain, const Rat& threshold) {
  if (threshold < 0 || threshold > 1) throw std::invalid_argument("threshold must lie in [0,1]");
  return chain.chain_point(level_set_size(chain, threshold));
}

}  // namespace lnat
