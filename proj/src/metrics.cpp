#include "subdist/metrics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace subdist {

MetricFamily metric_family(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::grassmann:
    case DistanceKind::chordal:
    case DistanceKind::procrustes:
      return MetricFamily::rms;
    default:
      return MetricFamily::indicator;
  }
}

double metric_constant(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::grassmann:
    case DistanceKind::asimov:
      return std::numbers::pi / 2.0;
    case DistanceKind::spectral:
    case DistanceKind::procrustes:
      return std::numbers::sqrt2;
    case DistanceKind::martin:
      return std::numeric_limits<double>::infinity();
    case DistanceKind::binet_cauchy:
    case DistanceKind::chordal:
    case DistanceKind::fubini_study:
    case DistanceKind::projection:
      return 1.0;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double epsilon_term(const Subspace& a, const Subspace& b) {
  return std::sqrt(static_cast<double>(std::abs(a.dim() - b.dim())));
}

double metric_infty(DistanceKind kind, const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.dim() == b.dim()) return delta(kind, a, b);
  if (metric_family(kind) == MetricFamily::indicator) return metric_constant(kind);
  const double d = delta(kind, a, b);
  const double c = metric_constant(kind);
  const double gap = static_cast<double>(std::abs(a.dim() - b.dim()));
  return std::sqrt(d * d + c * c * gap);
}

}  // namespace subdist
