#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "subdist/error.hpp"

namespace subdist {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr double kDefaultOrthoTol = 1e-10;
inline constexpr double kDefaultContainTol = 1e-8;
inline constexpr double kDefaultIntersectionTau = 1e-12;
inline constexpr double kDefaultProjectionTol = 1e-8;

/// A k-dimensional linear subspace of R^n, held as an n x k matrix with
/// orthonormal columns. Two Subspace values with different bases may
/// describe the same subspace; compare them through principal angles.
class Subspace {
 public:
  /// Wraps a basis that is already column-orthonormal. Throws
  /// DimensionError for an empty or wide matrix and RankDeficient when
  /// ||B^T B - I||_F exceeds ortho_tol * sqrt(k).
  static Subspace from_orthonormal(Matrix basis, double ortho_tol = kDefaultOrthoTol);

  Eigen::Index ambient_dim() const { return basis_.rows(); }
  Eigen::Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

  Matrix basis_;
};

/// Angles ascending in [0, pi/2]; left = A U (n x k), right = B V (n x l).
struct PrincipalDecomposition {
  std::vector<double> angles;
  Matrix left_vectors;
  Matrix right_vectors;
};

struct Intersection {
  Eigen::Index dim = 0;
  Matrix basis;  // n x dim, empty when dim == 0
};

/// Orthonormalizes the columns of m (Householder QR, R with nonnegative
/// diagonal). Throws RankDeficient when sigma_min <= rank_tol * sigma_max.
Subspace orthonormal_basis(const Matrix& m, double rank_tol = kDefaultRankTol);

/// Principal angles only, ascending, min(k, l) of them.
///
/// Angles above pi/4 come from arccos of the singular values of A^T B;
/// angles at or below pi/4 come from arcsin of the singular values of the
/// residual of the smaller subspace against the larger one, which keeps
/// nearly-coincident directions accurate to working precision. The
/// result does not depend on argument order.
std::vector<double> principal_angles(const Subspace& a, const Subspace& b);

PrincipalDecomposition principal_decomposition(const Subspace& a, const Subspace& b);

/// A ∩ B as span{p_1..p_m}, m = #{i : cos(theta_i) > 1 - tau}.
Intersection intersection(const Subspace& a, const Subspace& b,
                          double tau = kDefaultIntersectionTau);

Subspace orthogonal_complement(const Subspace& a);

/// Embeds Gr(k, n) into Gr(l, m) via span [[A, 0], [0, 0], [0, I_{l-k}]].
Subspace embed(const Subspace& a, Eigen::Index target_dim, Eigen::Index target_ambient);

Matrix projection_matrix(const Subspace& a);
Subspace subspace_from_projection(const Matrix& p, double tol = kDefaultProjectionTol);

/// True iff a ⊆ b, i.e. ||(I - B B^T) A||_F <= tol.
bool contains(const Subspace& b, const Subspace& a, double tol = kDefaultContainTol);

void require_same_ambient(const Subspace& a, const Subspace& b);

}  // namespace subdist
