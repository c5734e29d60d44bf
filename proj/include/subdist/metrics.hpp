#pragma once

#include "subdist/distances.hpp"

namespace subdist {

/// How a metric on subspaces of all dimensions combines the equidimensional
/// distance with the dimension gap |k - l|.
enum class MetricFamily {
  rms,        // sqrt(delta^2 + c^2 |k - l|): grassmann, chordal, procrustes
  indicator,  // distance when k == l, the constant c otherwise
};

MetricFamily metric_family(DistanceKind kind);

/// The constant c_* attached to each kind. Indicator family:
/// asimov pi/2, spectral sqrt(2), martin +inf, binet_cauchy / fubini_study /
/// projection 1. Rms family: grassmann pi/2, chordal 1, procrustes sqrt(2)
/// (the value that makes each missing dimension count as one right angle
/// under the Procrustes formula).
double metric_constant(DistanceKind kind);

/// |k - l|^{1/2}.
double epsilon_term(const Subspace& a, const Subspace& b);

/// Metric on subspaces of all dimensions. Requires a common ambient space;
/// embed first to compare subspaces from different ambients.
double metric_infty(DistanceKind kind, const Subspace& a, const Subspace& b);

}  // namespace subdist
