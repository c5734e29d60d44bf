#include "subdist/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "subdist/distances.hpp"

namespace subdist {
namespace {

constexpr double kSingularPencilTol = 1e-12;
// Residual columns at or below this norm belong to coincident directions;
// their direction column is left at zero since sin(t * 0) = 0.
constexpr double kNullResidual = 1e-14;

}  // namespace

GeodesicPath::GeodesicPath(Matrix start_frame, Matrix direction, std::vector<double> angles)
    : start_frame_(std::move(start_frame)),
      direction_(std::move(direction)),
      angles_(std::move(angles)) {
  if (start_frame_.rows() != direction_.rows() || start_frame_.cols() != direction_.cols() ||
      static_cast<std::size_t>(start_frame_.cols()) != angles_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "geodesic frame shapes disagree");
  }
}

double GeodesicPath::length() const {
  return distance_from_angles(DistanceKind::grassmann, angles_);
}

GeodesicPath geodesic(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "geodesics join subspaces of equal dimension");
  }
  const PrincipalDecomposition pd = principal_decomposition(a, b);
  const double sigma_min = std::cos(pd.angles.back());
  if (sigma_min < kSingularPencilTol) {
    throw Error(ErrorKind::SingularPencil,
                "A^T B is singular (sigma_min = " + std::to_string(sigma_min) +
                    "); some principal angle is pi/2 and no unique geodesic exists");
  }

  const Matrix& start = pd.left_vectors;
  const Matrix& target = pd.right_vectors;
  // Column i of the residual is sin(theta_i) times the unit direction q_i
  // travels away from A; normalizing it yields the Q of the condensed SVD
  // (I - A A^T) B (A^T B)^{-1} = Q tan(Theta) U^T.
  const Matrix residual = target - a.basis() * (a.basis().transpose() * target);

  const auto k = a.dim();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return residual.col(i).norm() > residual.col(j).norm();
  });

  // Gram-Schmidt, largest angle first: small-angle columns carry the most
  // relative noise and are cleaned against the accurate ones.
  Matrix direction = Matrix::Zero(a.ambient_dim(), k);
  for (Eigen::Index i : order) {
    if (residual.col(i).norm() <= kNullResidual) continue;
    Vector v = residual.col(i);
    for (int pass = 0; pass < 2; ++pass) {
      v -= start * (start.transpose() * v);
      v -= direction * (direction.transpose() * v);
    }
    const double norm = v.norm();
    if (norm > 0) direction.col(i) = v / norm;
  }
  return GeodesicPath(start, std::move(direction), pd.angles);
}

Subspace evaluate(const GeodesicPath& path, double t) {
  Matrix frame(path.ambient_dim(), path.dim());
  for (Eigen::Index i = 0; i < path.dim(); ++i) {
    const double theta = path.angles()[static_cast<std::size_t>(i)];
    frame.col(i) = std::cos(t * theta) * path.start_frame().col(i) +
                   std::sin(t * theta) * path.direction().col(i);
  }
  return orthonormal_basis(frame);
}

double polyline_length(const GeodesicPath& path, int segments) {
  if (segments < 1) throw Error(ErrorKind::InvalidArgument, "segments must be >= 1");
  double total = 0.0;
  Subspace previous = evaluate(path, 0.0);
  for (int i = 1; i <= segments; ++i) {
    Subspace current = evaluate(path, static_cast<double>(i) / segments);
    total += grassmann_distance(previous, current);
    previous = std::move(current);
  }
  return total;
}

}  // namespace subdist
