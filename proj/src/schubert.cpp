#include "subdist/schubert.hpp"

#include <string>

namespace subdist {
namespace {

void require_target_matches(const Subspace& b, Eigen::Index l, const char* op) {
  if (l != b.dim()) {
    throw Error(ErrorKind::DimensionError, std::string(op) + ": l=" + std::to_string(l) +
                                               " must equal dim B=" + std::to_string(b.dim()));
  }
}

}  // namespace

SchubertVariety::SchubertVariety(SchubertFlavor flavor, Subspace anchor, Eigen::Index target_dim)
    : flavor_(flavor), anchor_(std::move(anchor)), target_dim_(target_dim) {
  const auto a = anchor_.dim();
  const auto n = anchor_.ambient_dim();
  const bool ok = flavor_ == SchubertFlavor::contains_anchor
                      ? (a <= target_dim_ && target_dim_ <= n)
                      : (1 <= target_dim_ && target_dim_ <= a);
  if (!ok) {
    throw Error(ErrorKind::DimensionError,
                "target dimension " + std::to_string(target_dim_) +
                    " is incompatible with an anchor of dimension " + std::to_string(a) +
                    " in R^" + std::to_string(n));
  }
}

bool member(const SchubertVariety& v, const Subspace& x, double tol) {
  if (x.ambient_dim() != v.ambient_dim()) {
    throw Error(ErrorKind::AmbientMismatch, "candidate lives in a different ambient space");
  }
  if (x.dim() != v.target_dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "candidate has dimension " + std::to_string(x.dim()) + ", variety expects " +
                    std::to_string(v.target_dim()));
  }
  return v.flavor() == SchubertFlavor::contains_anchor ? contains(x, v.anchor(), tol)
                                                       : contains(v.anchor(), x, tol);
}

Subspace nearest_containing(const Subspace& a, const Subspace& b, Eigen::Index l) {
  require_same_ambient(a, b);
  const auto k = a.dim();
  if (l < k || l > a.ambient_dim()) {
    throw Error(ErrorKind::DimensionError,
                "nearest_containing needs dim A <= l <= n, got l=" + std::to_string(l));
  }
  require_target_matches(b, l, "nearest_containing");
  const PrincipalDecomposition pd = principal_decomposition(a, b);
  Matrix basis(a.ambient_dim(), l);
  basis << pd.left_vectors, pd.right_vectors.rightCols(l - k);
  return orthonormal_basis(basis);
}

Subspace nearest_contained(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const auto k = a.dim();
  if (k > b.dim()) {
    throw Error(ErrorKind::DimensionError, "nearest_contained needs dim A <= dim B");
  }
  const PrincipalDecomposition pd = principal_decomposition(a, b);
  return orthonormal_basis(pd.right_vectors.leftCols(k));
}

Subspace furthest_containing(const Subspace& a, const Subspace& b, Eigen::Index l) {
  require_same_ambient(a, b);
  const auto k = a.dim();
  const auto n = a.ambient_dim();
  if (l < k || l > n) {
    throw Error(ErrorKind::DimensionError,
                "furthest_containing needs dim A <= l <= n, got l=" + std::to_string(l));
  }
  require_target_matches(b, l, "furthest_containing");
  if (l == k) return a;

  Matrix joint(n, k + b.dim());
  joint << a.basis(), b.basis();
  const Eigen::JacobiSVD<Matrix> svd(joint, Eigen::ComputeFullU);
  const Vector& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kDefaultRankTol * sv(0)) ++rank;
  }
  if (n - rank < l - k) {
    throw Error(ErrorKind::InsufficientAmbient,
                "need " + std::to_string(l - k) + " directions orthogonal to A and B but only " +
                    std::to_string(n - rank) + " exist");
  }
  Matrix basis(n, l);
  basis << a.basis(), svd.matrixU().middleCols(rank, l - k);
  return orthonormal_basis(basis);
}

Eigen::Index schubert_dimension(const SchubertVariety& v) {
  const auto n = v.ambient_dim();
  if (v.flavor() == SchubertFlavor::contains_anchor) {
    const auto k = v.anchor().dim();
    const auto l = v.target_dim();
    return (n - l) * (l - k);
  }
  const auto l = v.anchor().dim();
  const auto k = v.target_dim();
  return k * (l - k);
}

}  // namespace subdist
