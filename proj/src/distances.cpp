#include "subdist/distances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace subdist {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

bool reaches_right_angle(std::span<const double> angles) {
  return std::any_of(angles.begin(), angles.end(), [](double t) { return t >= kHalfPi; });
}

// sum_i log cos(theta_i), via log1p(-2 sin^2(theta/2)) so small angles keep
// full relative accuracy. Caller guarantees every angle < pi/2.
double sum_log_cos(std::span<const double> angles) {
  double acc = 0.0;
  for (double t : angles) {
    const double s = std::sin(0.5 * t);
    acc += std::log1p(-2.0 * s * s);
  }
  return acc;
}

double largest(std::span<const double> angles) {
  return angles.empty() ? 0.0 : *std::max_element(angles.begin(), angles.end());
}

}  // namespace

std::string_view to_string(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::grassmann: return "grassmann";
    case DistanceKind::asimov: return "asimov";
    case DistanceKind::binet_cauchy: return "binet_cauchy";
    case DistanceKind::chordal: return "chordal";
    case DistanceKind::fubini_study: return "fubini_study";
    case DistanceKind::martin: return "martin";
    case DistanceKind::procrustes: return "procrustes";
    case DistanceKind::projection: return "projection";
    case DistanceKind::spectral: return "spectral";
  }
  return "unknown";
}

std::optional<DistanceKind> parse_distance_kind(std::string_view name) {
  for (DistanceKind kind : kAllDistanceKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

double distance_from_angles(DistanceKind kind, std::span<const double> angles) {
  switch (kind) {
    case DistanceKind::grassmann: {
      double acc = 0.0;
      for (double t : angles) acc += t * t;
      return std::sqrt(acc);
    }
    case DistanceKind::asimov:
      return largest(angles);
    case DistanceKind::binet_cauchy:
      if (reaches_right_angle(angles)) return 1.0;
      return std::sqrt(std::max(0.0, -std::expm1(2.0 * sum_log_cos(angles))));
    case DistanceKind::chordal: {
      double acc = 0.0;
      for (double t : angles) acc += std::sin(t) * std::sin(t);
      return std::sqrt(acc);
    }
    case DistanceKind::fubini_study: {
      if (reaches_right_angle(angles)) return kHalfPi;
      // arccos(P) = 2 asin(sqrt((1 - P) / 2)), with 1 - P = -expm1(log P)
      const double one_minus = std::max(0.0, -std::expm1(sum_log_cos(angles)));
      return 2.0 * std::asin(std::min(1.0, std::sqrt(0.5 * one_minus)));
    }
    case DistanceKind::martin:
      if (reaches_right_angle(angles)) return std::numeric_limits<double>::infinity();
      return std::sqrt(std::max(0.0, -2.0 * sum_log_cos(angles)));
    case DistanceKind::procrustes: {
      double acc = 0.0;
      for (double t : angles) {
        const double s = std::sin(0.5 * t);
        acc += s * s;
      }
      return 2.0 * std::sqrt(acc);
    }
    case DistanceKind::projection:
      return std::sin(largest(angles));
    case DistanceKind::spectral:
      return 2.0 * std::sin(0.5 * largest(angles));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double grassmann_distance(const Subspace& a, const Subspace& b) {
  return distance(DistanceKind::grassmann, a, b);
}

double distance(DistanceKind kind, const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "distance needs equal dimensions (" + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()) + "); use delta for unequal dimensions");
  }
  return delta(kind, a, b);
}

double delta(DistanceKind kind, const Subspace& a, const Subspace& b) {
  const std::vector<double> angles = principal_angles(a, b);
  return distance_from_angles(kind, angles);
}

double containment_gap(const Subspace& a, const Subspace& b) {
  return delta(DistanceKind::projection, a, b);
}

double symmetric_directional(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  // max(k, l) - ||A^T B||_F^2 = |k - l| + ||(I - B B^T) A||_F^2 with A the
  // smaller frame; the right side avoids cancellation near containment.
  const Matrix& small = a.dim() <= b.dim() ? a.basis() : b.basis();
  const Matrix& large = a.dim() <= b.dim() ? b.basis() : a.basis();
  const double residual = (small - large * (large.transpose() * small)).squaredNorm();
  const double gap = static_cast<double>(std::abs(a.dim() - b.dim()));
  return std::sqrt(gap + residual);
}

}  // namespace subdist
