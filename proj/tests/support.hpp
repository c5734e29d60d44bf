#pragma once

// Test-only helpers and oracles. Nothing here calls the principal-angle
// machinery under test except where noted.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <vector>

#include "subdist/subspace.hpp"

namespace testing {

using subdist::Matrix;
using subdist::Subspace;
using subdist::Vector;

inline constexpr double kPi = std::numbers::pi;

inline Vector unit(Eigen::Index i, Eigen::Index n) {
  Vector v = Vector::Zero(n);
  v(i) = 1.0;
  return v;
}

inline Subspace span(std::initializer_list<Vector> columns) {
  Matrix m(columns.begin()->size(), static_cast<Eigen::Index>(columns.size()));
  Eigen::Index j = 0;
  for (const auto& c : columns) m.col(j++) = c;
  return subdist::orthonormal_basis(m);
}

/// Standard basis vectors e_{i} (1-based, as in the usual notation).
inline Subspace coordinate_span(std::initializer_list<int> indices, Eigen::Index n) {
  Matrix m = Matrix::Zero(n, static_cast<Eigen::Index>(indices.size()));
  Eigen::Index j = 0;
  for (int i : indices) m(i - 1, j++) = 1.0;
  return subdist::Subspace::from_orthonormal(m);
}

/// Orthogonal projector onto col(M) by the normal equations, independent of
/// any QR or SVD routine.
inline Matrix least_squares_projector(const Matrix& m) {
  const Matrix gram = m.transpose() * m;
  return m * gram.ldlt().solve(m.transpose());
}

/// Principal angles from the eigenvalues of (A^T B)(A^T B)^T (or the
/// transpose product when k > l): cos^2 of the min(k, l) angles. Accurate
/// only to about sqrt(eps) for tiny angles.
inline std::vector<double> eigen_angle_oracle(const Matrix& a, const Matrix& b) {
  Matrix c = a.transpose() * b;
  if (c.rows() > c.cols()) c.transposeInPlace();
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(c * c.transpose());
  std::vector<double> out;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    out.push_back(std::acos(std::sqrt(std::clamp(eig.eigenvalues()(i), 0.0, 1.0))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Dimension of col(A) ∩ col(B) = nullity of [A, -B], by full-pivot LU.
inline Eigen::Index intersection_dim_oracle(const Matrix& a, const Matrix& b) {
  Matrix stacked(a.rows(), a.cols() + b.cols());
  stacked << a, -b;
  Eigen::FullPivLU<Matrix> lu(stacked);
  lu.setThreshold(1e-10);
  return stacked.cols() - lu.rank();
}

inline double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double worst = x.size() == y.size() ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    worst = std::max(worst, std::abs(x[i] - y[i]));
  }
  return worst;
}

}  // namespace testing
