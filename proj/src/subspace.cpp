#include "subdist/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace subdist {
namespace {

std::string dims(Eigen::Index rows, Eigen::Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

// Orders the pair so that the first member has the smaller dimension; ties
// are broken lexicographically on the basis entries so that f(A, B) and
// f(B, A) run the identical floating-point computation.
bool should_swap(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() > b.dim();
  const double* pa = a.basis().data();
  const double* pb = b.basis().data();
  const auto size = a.basis().size();
  return std::lexicographical_compare(pb, pb + size, pa, pa + size);
}

// x has dimension p <= dimension of y. sigma holds the singular values of
// x^T y in descending order.
std::vector<double> angles_from(const Matrix& x, const Matrix& y, const Vector& sigma) {
  const Eigen::Index p = x.cols();
  // identical frames, or y spanning the whole space: every angle is exactly 0
  if ((x.cols() == y.cols() && x == y) || y.cols() == y.rows()) {
    return std::vector<double>(static_cast<std::size_t>(p), 0.0);
  }
  const Matrix residual = x - y * (y.transpose() * x);
  const Vector sines = Eigen::JacobiSVD<Matrix>(residual).singularValues();

  std::vector<double> angles(static_cast<std::size_t>(p));
  for (Eigen::Index i = 0; i < p; ++i) {
    const double c = std::clamp(sigma(i), 0.0, 1.0);
    // sines are descending; the i-th smallest angle pairs with sines(p-1-i)
    const double s = std::clamp(sines(p - 1 - i), 0.0, 1.0);
    angles[static_cast<std::size_t>(i)] = (c * c >= 0.5) ? std::asin(s) : std::acos(c);
  }
  // The two branches meet at pi/4; enforce monotonicity across the seam.
  for (std::size_t i = 1; i < angles.size(); ++i) {
    angles[i] = std::max(angles[i], angles[i - 1]);
  }
  return angles;
}

}  // namespace

Subspace Subspace::from_orthonormal(Matrix basis, double ortho_tol) {
  if (basis.rows() < 1 || basis.cols() < 1) {
    throw Error(ErrorKind::DimensionError, "basis must be at least 1x1, got " +
                                               dims(basis.rows(), basis.cols()));
  }
  if (basis.cols() > basis.rows()) {
    throw Error(ErrorKind::DimensionError,
                "subspace dimension exceeds ambient dimension (" +
                    dims(basis.rows(), basis.cols()) + ")");
  }
  if (!basis.allFinite()) {
    throw Error(ErrorKind::InvalidArgument, "basis has non-finite entries");
  }
  const auto k = basis.cols();
  const double defect = (basis.transpose() * basis - Matrix::Identity(k, k)).norm();
  if (defect > ortho_tol * std::sqrt(static_cast<double>(k))) {
    throw Error(ErrorKind::RankDeficient,
                "basis columns are not orthonormal (||B^T B - I||_F = " +
                    std::to_string(defect) + ")");
  }
  return Subspace(std::move(basis));
}

Subspace orthonormal_basis(const Matrix& m, double rank_tol) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw Error(ErrorKind::DimensionError,
                "matrix must be at least 1x1, got " + dims(m.rows(), m.cols()));
  }
  if (m.cols() > m.rows()) {
    throw Error(ErrorKind::DimensionError, "more spanning vectors than ambient dimension (" +
                                               dims(m.rows(), m.cols()) + ")");
  }
  if (!m.allFinite()) {
    throw Error(ErrorKind::InvalidArgument, "matrix has non-finite entries");
  }
  const Vector sv = Eigen::JacobiSVD<Matrix>(m).singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (!(smin > rank_tol * smax)) {
    throw Error(ErrorKind::RankDeficient,
                "columns are not linearly independent (sigma_min/sigma_max = " +
                    std::to_string(smax > 0 ? smin / smax : 0.0) + ")");
  }

  const Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
  const Vector r_diag = qr.matrixQR().diagonal();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (r_diag(j) < 0) q.col(j) *= -1.0;
  }
  return Subspace::from_orthonormal(std::move(q));
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::AmbientMismatch, "ambient dimensions differ (" +
                                                std::to_string(a.ambient_dim()) + " vs " +
                                                std::to_string(b.ambient_dim()) + ")");
  }
}

std::vector<double> principal_angles(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const bool swap = should_swap(a, b);
  const Matrix& x = swap ? b.basis() : a.basis();
  const Matrix& y = swap ? a.basis() : b.basis();
  const Vector sigma = Eigen::JacobiSVD<Matrix>(x.transpose() * y).singularValues();
  return angles_from(x, y, sigma);
}

PrincipalDecomposition principal_decomposition(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const bool swap = should_swap(a, b);
  const Matrix& x = swap ? b.basis() : a.basis();
  const Matrix& y = swap ? a.basis() : b.basis();
  const Eigen::JacobiSVD<Matrix> svd(x.transpose() * y,
                                     Eigen::ComputeFullU | Eigen::ComputeFullV);

  PrincipalDecomposition out;
  out.angles = angles_from(x, y, svd.singularValues());
  // x^T y = U S V^T; when swapped, a^T b = V S^T U^T.
  if (swap) {
    out.left_vectors = a.basis() * svd.matrixV();
    out.right_vectors = b.basis() * svd.matrixU();
  } else {
    out.left_vectors = a.basis() * svd.matrixU();
    out.right_vectors = b.basis() * svd.matrixV();
  }
  return out;
}

Intersection intersection(const Subspace& a, const Subspace& b, double tau) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "tau must lie in (0, 1)");
  }
  const PrincipalDecomposition pd = principal_decomposition(a, b);
  Eigen::Index m = 0;
  for (double theta : pd.angles) {
    if (std::cos(theta) > 1.0 - tau) ++m;
  }
  Intersection out;
  out.dim = m;
  if (m > 0) out.basis = pd.left_vectors.leftCols(m);
  return out;
}

Subspace orthogonal_complement(const Subspace& a) {
  const auto n = a.ambient_dim();
  const auto k = a.dim();
  if (k >= n) {
    throw Error(ErrorKind::DimensionError, "the whole space has no nonzero complement");
  }
  const Eigen::HouseholderQR<Matrix> qr(a.basis());
  const Matrix q = qr.householderQ();
  return Subspace::from_orthonormal(q.rightCols(n - k));
}

Subspace embed(const Subspace& a, Eigen::Index target_dim, Eigen::Index target_ambient) {
  const auto k = a.dim();
  const auto n = a.ambient_dim();
  const auto l = target_dim;
  const auto m = target_ambient;
  if (l < k || m < n || l - k > m - n) {
    throw Error(ErrorKind::DimensionError,
                "embedding Gr(" + std::to_string(k) + "," + std::to_string(n) + ") into Gr(" +
                    std::to_string(l) + "," + std::to_string(m) +
                    ") needs k <= l, n <= m and l - k <= m - n");
  }
  Matrix out = Matrix::Zero(m, l);
  out.topLeftCorner(n, k) = a.basis();
  out.bottomRightCorner(l - k, l - k).setIdentity();
  return Subspace::from_orthonormal(std::move(out));
}

Matrix projection_matrix(const Subspace& a) {
  return a.basis() * a.basis().transpose();
}

Subspace subspace_from_projection(const Matrix& p, double tol) {
  if (p.rows() != p.cols() || p.rows() < 1) {
    throw Error(ErrorKind::NotAProjection, "projection matrix must be square");
  }
  if (!p.allFinite()) {
    throw Error(ErrorKind::NotAProjection, "projection matrix has non-finite entries");
  }
  const double asym = (p.transpose() - p).norm();
  if (asym > tol) {
    throw Error(ErrorKind::NotAProjection,
                "matrix is not symmetric (||P^T - P||_F = " + std::to_string(asym) + ")");
  }
  const double idem = (p * p - p).norm();
  if (idem > tol) {
    throw Error(ErrorKind::NotAProjection,
                "matrix is not idempotent (||P^2 - P||_F = " + std::to_string(idem) + ")");
  }
  const double tr = p.trace();
  const double rounded = std::round(tr);
  if (std::abs(tr - rounded) > tol || rounded < 1.0) {
    throw Error(ErrorKind::NotAProjection,
                "trace " + std::to_string(tr) + " is not a positive integer");
  }
  const auto k = static_cast<Eigen::Index>(rounded);
  const Matrix sym = 0.5 * (p + p.transpose());
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
  // eigenvalues ascending: the range is spanned by the last k eigenvectors
  return orthonormal_basis(eig.eigenvectors().rightCols(k));
}

bool contains(const Subspace& b, const Subspace& a, double tol) {
  require_same_ambient(a, b);
  const Matrix residual = a.basis() - b.basis() * (b.basis().transpose() * a.basis());
  return residual.norm() <= tol;
}

}  // namespace subdist
