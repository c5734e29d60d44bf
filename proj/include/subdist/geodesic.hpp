#pragma once

#include <vector>

#include "subdist/subspace.hpp"

namespace subdist {

/// Minimizing geodesic t -> span(start_frame cos(t Theta) + direction sin(t Theta))
/// between two k-planes whose principal angles are all below pi/2.
class GeodesicPath {
 public:
  GeodesicPath(Matrix start_frame, Matrix direction, std::vector<double> angles);

  const Matrix& start_frame() const { return start_frame_; }
  const Matrix& direction() const { return direction_; }
  const std::vector<double>& angles() const { return angles_; }
  Eigen::Index ambient_dim() const { return start_frame_.rows(); }
  Eigen::Index dim() const { return start_frame_.cols(); }

  /// Grassmann length of the whole path, ||Theta||.
  double length() const;

 private:
  Matrix start_frame_;
  Matrix direction_;
  std::vector<double> angles_;
};

/// Throws DimensionMismatch for unequal dimensions and SingularPencil when
/// sigma_min(A^T B) < 1e-12 (some principal angle is pi/2 and the geodesic
/// is not unique).
GeodesicPath geodesic(const Subspace& a, const Subspace& b);

/// Point at parameter t; t outside [0, 1] extends the same curve.
Subspace evaluate(const GeodesicPath& path, double t);

/// Sum of Grassmann distances between consecutive points of a uniform
/// partition of [0, 1] into `segments` pieces.
double polyline_length(const GeodesicPath& path, int segments);

}  // namespace subdist
