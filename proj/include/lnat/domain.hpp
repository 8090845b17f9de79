#ifndef LNAT_DOMAIN_HPP
#define LNAT_DOMAIN_HPP

// Bounded L-natural-convex sets given by their linear-inequality expression
//
//   K = { z integer : lower_i <= z_i <= upper_i,  z_i - z_j <= gamma_ij }
//
// Extremal queries (max y_i - y_j, max y_i over a refined box) are shortest
// paths in the induced difference-constraint graph, so they are exact
// integers. conv(K) equals the fractional relaxation of the same system.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lnat/errors.hpp"
#include "lnat/rational.hpp"

namespace lnat {

/// Sparse matrix of difference bounds gamma_ij; absent entry means +infinity.
class DiffBounds {
 public:
  DiffBounds() = default;
  explicit DiffBounds(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {}

  int dim() const { return dim_; }

  void set(int i, int j, Int bound);
  std::optional<Int> get(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  }

 private:
  int dim_ = 0;
  std::vector<std::optional<Int>> entries_;  // row-major; diagonal implicitly 0
};

/// Optional per-coordinate interval refinements for coordinate_max queries.
using BoxRefinement = std::vector<std::optional<std::pair<Int, Int>>>;

class LNatDomain {
 public:
  /// Validates bounds, certifies K nonempty and conv(K) full-dimensional.
  /// Throws EmptyDomainError / NotFullDimensionalError / DomainError.
  LNatDomain(std::vector<Int> lower, std::vector<Int> upper, DiffBounds diff);

  static LNatDomain box(std::vector<Int> lower, std::vector<Int> upper) {
    DiffBounds none(static_cast<int>(lower.size()));
    return LNatDomain(std::move(lower), std::move(upper), std::move(none));
  }

  /// Uniform box [lo, hi]^d.
  static LNatDomain cube(int dim, Int lo, Int hi) {
    return box(std::vector<Int>(dim, lo), std::vector<Int>(dim, hi));
  }

  int dim() const { return static_cast<int>(lower_.size()); }
  Int lower(int i) const { return lower_[i]; }
  Int upper(int i) const { return upper_[i]; }
  const std::vector<Int>& lower_bounds() const { return lower_; }
  const std::vector<Int>& upper_bounds() const { return upper_; }
  std::optional<Int> diff_bound(int i, int j) const { return diff_.get(i, j); }
  const DiffBounds& diff_bounds() const { return diff_; }
  bool has_difference_arcs() const { return arc_count_ > 0; }

  /// N = max_i (upper_i - lower_i).
  Int max_range() const;

  bool contains(const LatticePoint& z) const;
  /// Exact membership of a rational point in conv(K).
  bool contains(const RatVec& x) const;
  /// Worst constraint violation of a real point (0 when inside conv(K)).
  double hull_violation(const RealVec& x) const;

  /// max over conv(K) of y_i - y_j (Algorithm 1's delta_ij); exact.
  Int tightest_difference(int i, int j) const;

  /// max of y_i over conv(K) intersected with the refined box; exact.
  /// Throws InfeasibleRegionError when the intersection is empty.
  Int coordinate_max(const BoxRefinement& extra_box, int i) const;
  Int coordinate_min(const BoxRefinement& extra_box, int i) const;

  /// Recheck of the construction certificate.
  bool is_full_dimensional() const;

  /// Full-dimensionality test on raw data (no nonempty certificate needed).
  static bool is_full_dimensional(const std::vector<Int>& lower, const std::vector<Int>& upper,
                                  const DiffBounds& diff);
  /// Feasibility (K nonempty) test on raw data.
  static bool is_feasible(const std::vector<Int>& lower, const std::vector<Int>& upper,
                          const DiffBounds& diff);

  /// All members of K in lexicographic order. Throws TooLargeError past cap.
  std::vector<LatticePoint> enumerate(std::size_t cap = 1000000) const;
  std::size_t count(std::size_t cap = 1000000) const;

  /// Nearest exactly-feasible rational point to x, assuming x is within
  /// `slack` of conv(K) in every constraint. Used to re-enter the domain
  /// after floating-point projection.
  RatVec nearest_feasible(const RealVec& x, double slack = 1e-8) const;

  std::string to_text() const;
  static LNatDomain from_text(const std::string& text);

 private:
  std::vector<Int> lower_;
  std::vector<Int> upper_;
  DiffBounds diff_;
  std::size_t arc_count_ = 0;
  // dist_[u][v] = shortest path u -> v in the constraint graph over nodes
  // {0 = origin, 1..d = coordinates}; equals max over conv(K) of y_v - y_u.
  std::vector<std::vector<Int>> dist_;

  void enumerate_impl(std::size_t cap, std::vector<LatticePoint>* out, std::size_t* count) const;
};

/// Definition check: closed under componentwise rounded midpoints.
bool verify_lnatural_set(const std::vector<LatticePoint>& points);

}  // namespace lnat

#endif
