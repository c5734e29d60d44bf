#include "subdist/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace subdist {

double SeededGenerator::uniform() {
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double SeededGenerator::normal() {
  if (spare_) {
    const double out = *spare_;
    spare_.reset();
    return out;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform()));
  const double phase = 2.0 * std::numbers::pi * uniform();
  spare_ = radius * std::sin(phase);
  return radius * std::cos(phase);
}

Matrix SeededGenerator::gaussian(Eigen::Index rows, Eigen::Index cols) {
  Matrix out(rows, cols);
  // column-major fill order is part of the stream definition
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = normal();
  }
  return out;
}

Subspace random_subspace(Eigen::Index k, Eigen::Index n, SeededGenerator& g) {
  if (k < 1 || k > n) {
    throw Error(ErrorKind::DimensionError,
                "need 1 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  // A Gaussian matrix is rank deficient with probability zero; redraw if the
  // rank test ever trips.
  for (;;) {
    try {
      return orthonormal_basis(g.gaussian(n, k));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RankDeficient) throw;
    }
  }
}

Subspace random_contained(const Subspace& b, Eigen::Index k, SeededGenerator& g) {
  if (k < 1 || k > b.dim()) {
    throw Error(ErrorKind::DimensionError, "need 1 <= k <= dim B, got k=" + std::to_string(k));
  }
  if (k == b.dim()) return b;
  const Subspace inner = random_subspace(k, b.dim(), g);
  return Subspace::from_orthonormal(b.basis() * inner.basis());
}

Subspace random_containing(const Subspace& a, Eigen::Index l, SeededGenerator& g) {
  const auto k = a.dim();
  const auto n = a.ambient_dim();
  if (l < k || l > n) {
    throw Error(ErrorKind::DimensionError,
                "need dim A <= l <= n, got l=" + std::to_string(l));
  }
  if (l == k) return a;
  const Subspace complement = orthogonal_complement(a);
  const Subspace extra = random_subspace(l - k, n - k, g);
  Matrix basis(n, l);
  basis << a.basis(), complement.basis() * extra.basis();
  return Subspace::from_orthonormal(std::move(basis));
}

Matrix random_orthogonal(Eigen::Index n, SeededGenerator& g) {
  if (n < 1) throw Error(ErrorKind::DimensionError, "need n >= 1");
  const Eigen::HouseholderQR<Matrix> qr(g.gaussian(n, n));
  Matrix q = qr.householderQ();
  const Vector r_diag = qr.matrixQR().diagonal();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (r_diag(j) < 0) q.col(j) *= -1.0;
  }
  return q;
}

Subspace rotate(const Matrix& q, const Subspace& a) {
  if (q.rows() != a.ambient_dim() || q.cols() != a.ambient_dim()) {
    throw Error(ErrorKind::AmbientMismatch, "rotation size does not match ambient dimension");
  }
  return orthonormal_basis(q * a.basis());
}

}  // namespace subdist
