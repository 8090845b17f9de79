#ifndef LNAT_PROJECTION_HPP
#define LNAT_PROJECTION_HPP

// Euclidean projection onto conv(K): componentwise clamp for boxes, cyclic
// corrected half-space projection (Dykstra) when difference arcs are present.

#include "lnat/domain.hpp"

namespace lnat {

struct ProjectionConfig {
  double tolerance = 1e-10;  // l2 distance between successive sweeps
  int max_sweeps = 100000;
};

RealVec project_box(const RealVec& y, const std::vector<Int>& lower, const std::vector<Int>& upper);

/// Projection of y onto conv(K) within cfg.tolerance. Sweep order is fixed:
/// per-coordinate bounds first, then difference arcs in (i, j) lexicographic
/// order. Throws NonConvergenceError past cfg.max_sweeps.
RealVec project(const LNatDomain& domain, const RealVec& y, const ProjectionConfig& cfg = {});

}  // namespace lnat

#endif
