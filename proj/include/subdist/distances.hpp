#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "subdist/subspace.hpp"

namespace subdist {

/// Distances on Gr(k, n) expressed through principal angles.
enum class DistanceKind {
  grassmann,
  asimov,
  binet_cauchy,
  chordal,
  fubini_study,
  martin,
  procrustes,
  projection,
  spectral,
};

inline constexpr std::array<DistanceKind, 9> kAllDistanceKinds = {
    DistanceKind::grassmann,    DistanceKind::asimov,     DistanceKind::binet_cauchy,
    DistanceKind::chordal,      DistanceKind::fubini_study, DistanceKind::martin,
    DistanceKind::procrustes,   DistanceKind::projection, DistanceKind::spectral,
};

std::string_view to_string(DistanceKind kind);
std::optional<DistanceKind> parse_distance_kind(std::string_view name);

/// Evaluates the formula for `kind` on an ascending list of principal
/// angles. The list may be empty only for the (unused) zero-dimensional
/// case, which yields 0. Martin returns +inf when any angle reaches pi/2.
double distance_from_angles(DistanceKind kind, std::span<const double> angles);

/// Geodesic distance on Gr(k, n): the 2-norm of the principal angles.
/// Requires dim A == dim B.
double grassmann_distance(const Subspace& a, const Subspace& b);

/// Equidimensional distance; throws DimensionMismatch if dims differ.
double distance(DistanceKind kind, const Subspace& a, const Subspace& b);

/// Distance between subspaces of any dimensions: the same formula taken
/// over the first min(k, l) principal angles. It equals the distance from
/// the smaller subspace to the nearest subspace of its dimension inside the
/// larger one, and the distance from the larger subspace to the nearest
/// subspace of its dimension containing the smaller one. Zero iff one
/// subspace contains the other. Not a metric.
double delta(DistanceKind kind, const Subspace& a, const Subspace& b);

/// sin of the largest of the min(k, l) principal angles.
double containment_gap(const Subspace& a, const Subspace& b);

/// (max(k, l) - ||A^T B||_F^2)^{1/2}, evaluated in a cancellation-free form.
double symmetric_directional(const Subspace& a, const Subspace& b);

}  // namespace subdist
