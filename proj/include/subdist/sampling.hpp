#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "subdist/subspace.hpp"

namespace subdist {

/// Reproducible source of standard normals.
///
/// Algorithm (version 1): std::mt19937_64 seeded with the 64-bit seed;
/// uniforms in (0, 1] are ((x >> 11) + 1) * 2^-53; normals come from the
/// Box-Muller transform, both outputs of a pair used in order. The stream
/// depends only on the seed, not on the standard library implementation.
class SeededGenerator {
 public:
  static constexpr int kAlgorithmVersion = 1;

  explicit SeededGenerator(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  double uniform();
  double normal();
  Matrix gaussian(Eigen::Index rows, Eigen::Index cols);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Haar-distributed element of Gr(k, n): span of an n x k Gaussian matrix.
Subspace random_subspace(Eigen::Index k, Eigen::Index n, SeededGenerator& g);

/// Uniform k-dimensional subspace of b.
Subspace random_contained(const Subspace& b, Eigen::Index k, SeededGenerator& g);

/// a ⊕ (uniform (l - k)-dimensional subspace of a's complement).
Subspace random_containing(const Subspace& a, Eigen::Index l, SeededGenerator& g);

/// Haar-distributed orthogonal matrix: Q from the QR of an n x n Gaussian,
/// with column signs chosen so that R has a positive diagonal.
Matrix random_orthogonal(Eigen::Index n, SeededGenerator& g);

/// Q applied to a subspace: span(Q A).
Subspace rotate(const Matrix& q, const Subspace& a);

}  // namespace subdist
