#include "lnat/projection.hpp"

#include <cmath>

namespace lnat {

namespace {

// Half-space a.x <= b with a having one or two unit entries.
struct HalfSpace {
  int plus = -1;   // coefficient +1
  int minus = -1;  // coefficient -1, or absent
  double rhs = 0;
  double norm_sq = 1;
};

double signed_violation(const HalfSpace& h, const RealVec& x) {
  double v = -h.rhs;
  if (h.plus >= 0) v += x[h.plus];
  if (h.minus >= 0) v -= x[h.minus];
  return v;
}

}  // namespace

RealVec project_box(const RealVec& y, const std::vector<Int>& lower, const std::vector<Int>& upper) {
  if (y.size() != lower.size() || lower.size() != upper.size())
    throw DimensionMismatchError("project_box: dimension mismatch");
  RealVec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (lower[i] > upper[i]) throw std::invalid_argument("project_box: lower exceeds upper");
    out[i] = std::min(std::max(y[i], static_cast<double>(lower[i])), static_cast<double>(upper[i]));
  }
  return out;
}

RealVec project(const LNatDomain& domain, const RealVec& y, const ProjectionConfig& cfg) {
  const int d = domain.dim();
  if (static_cast<int>(y.size()) != d) throw DimensionMismatchError("project: dimension mismatch");
  if (cfg.tolerance <= 0 || cfg.max_sweeps < 1)
    throw std::invalid_argument("project: tolerance must be positive and max_sweeps >= 1");
  if (!domain.has_difference_arcs())
    return project_box(y, domain.lower_bounds(), domain.upper_bounds());

  std::vector<HalfSpace> walls;
  for (int i = 0; i < d; ++i) {
    walls.push_back({-1, i, -static_cast<double>(domain.lower(i)), 1.0});  // -x_i <= -lower
    walls.push_back({i, -1, static_cast<double>(domain.upper(i)), 1.0});   //  x_i <= upper
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j)
        if (auto g = domain.diff_bound(i, j)) walls.push_back({i, j, static_cast<double>(*g), 2.0});

  RealVec x = y;
  std::vector<double> correction(walls.size(), 0.0);
  RealVec prev(x);
  for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
    prev = x;
    for (std::size_t m = 0; m < walls.size(); ++m) {
      const HalfSpace& h = walls[m];
      // add back this wall's correction, then project onto the half-space
      if (correction[m] != 0.0) {
        if (h.plus >= 0) x[h.plus] += correction[m];
        if (h.minus >= 0) x[h.minus] -= correction[m];
      }
      const double v = signed_violation(h, x);
      if (v > 0) {
        const double step = v / h.norm_sq;
        if (h.plus >= 0) x[h.plus] -= step;
        if (h.minus >= 0) x[h.minus] += step;
        correction[m] = step;
      } else {
        correction[m] = 0.0;
      }
    }
    double drift_sq = 0;
    for (int i = 0; i < d; ++i) drift_sq += (x[i] - prev[i]) * (x[i] - prev[i]);
    if (std::sqrt(drift_sq) <= cfg.tolerance && sweep > 0) return x;
  }
  double drift_sq = 0;
  for (int i = 0; i < d; ++i) drift_sq += (x[i] - prev[i]) * (x[i] - prev[i]);
  throw NonConvergenceError("projection did not converge within the sweep budget",
                            std::sqrt(drift_sq));
}

}  // namespace lnat
