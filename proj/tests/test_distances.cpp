#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subdist/distances.hpp"
#include "subdist/metrics.hpp"
#include "subdist/sampling.hpp"
#include "support.hpp"

using namespace subdist;
using testing::coordinate_span;
using testing::kPi;
using testing::span;
using testing::unit;

namespace {

// Equidimensional distances through the orthonormal-basis expressions
// (determinants, norms of projector differences), bypassing principal
// angles entirely.
double basis_form(DistanceKind kind, const Matrix& a, const Matrix& b) {
  const Matrix c = a.transpose() * b;
  const double det = std::abs(c.determinant());
  const Matrix pdiff = a * a.transpose() - b * b.transpose();
  const Eigen::JacobiSVD<Matrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Matrix aligned = a * svd.matrixU() - b * svd.matrixV();
  auto two_norm = [](const Matrix& m) { return Eigen::JacobiSVD<Matrix>(m).singularValues()(0); };
  switch (kind) {
    case DistanceKind::grassmann: {
      double acc = 0;
      for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double t = std::acos(std::min(1.0, svd.singularValues()(i)));
        acc += t * t;
      }
      return std::sqrt(acc);
    }
    case DistanceKind::asimov: {
      // largest angle: smallest singular value of A^T B
      const Vector sv = svd.singularValues();
      return std::acos(std::min(1.0, sv(sv.size() - 1)));
    }
    case DistanceKind::binet_cauchy: return std::sqrt(std::max(0.0, 1 - det * det));
    case DistanceKind::chordal: return pdiff.norm() / std::sqrt(2.0);
    case DistanceKind::fubini_study: return std::acos(std::min(1.0, det));
    case DistanceKind::martin: return std::sqrt(std::max(0.0, -2 * std::log(det)));
    case DistanceKind::procrustes: return aligned.norm();
    case DistanceKind::projection: return two_norm(pdiff);
    case DistanceKind::spectral: return two_norm(aligned);
  }
  return NAN;
}

Subspace tilted_line(double alpha) {
  return span({std::cos(alpha) * unit(0, 3) + std::sin(alpha) * unit(2, 3)});
}

}  // namespace

TEST_CASE("grassmann distance examples") {
  const Subspace e12 = coordinate_span({1, 2}, 3);
  CHECK(grassmann_distance(e12, e12) < 1e-15);
  CHECK(std::abs(grassmann_distance(coordinate_span({1}, 2), coordinate_span({2}, 2)) - kPi / 2) <
        1e-15);
  const double alpha = 0.7;
  const Subspace b = span({unit(0, 3), std::cos(alpha) * unit(1, 3) + std::sin(alpha) * unit(2, 3)});
  CHECK(std::abs(grassmann_distance(e12, b) - alpha) < 1e-14);

  try {
    grassmann_distance(e12, coordinate_span({1}, 3));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("distance table examples") {
  const Subspace e1 = coordinate_span({1}, 2);
  const Subspace e2 = coordinate_span({2}, 2);
  CHECK(std::abs(distance(DistanceKind::chordal, e1, e2) - 1.0) < 1e-15);
  CHECK(distance(DistanceKind::asimov, e1, e1) == 0.0);
  CHECK(std::abs(distance(DistanceKind::procrustes, e1, e2) - std::sqrt(2.0)) < 1e-15);
  CHECK(std::isinf(distance(DistanceKind::martin, e1, e2)));
  CHECK(std::abs(distance(DistanceKind::fubini_study, e1, e2) - kPi / 2) < 1e-15);
  CHECK(distance(DistanceKind::binet_cauchy, e1, e2) == 1.0);
  CHECK(std::abs(distance(DistanceKind::projection, e1, e2) - 1.0) < 1e-15);
  CHECK(std::abs(distance(DistanceKind::spectral, e1, e2) - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("angle formulas agree with the orthonormal-basis forms") {
  SeededGenerator g(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    const int k = 1 + (trial / 6) % (n - 1);
    const Subspace a = random_subspace(k, n, g);
    const Subspace b = random_subspace(k, n, g);
    for (DistanceKind kind : kAllDistanceKinds) {
      const double got = distance(kind, a, b);
      const double want = basis_form(kind, a.basis(), b.basis());
      INFO(to_string(kind), " n=", n, " k=", k);
      CHECK(std::abs(got - want) <= 1e-7 * std::max(1.0, want));
    }
  }
}

TEST_CASE("delta examples") {
  const Subspace e12 = coordinate_span({1, 2}, 3);
  for (DistanceKind kind : kAllDistanceKinds) {
    CHECK(delta(kind, coordinate_span({1}, 3), e12) == 0.0);
    CHECK(delta(kind, e12, coordinate_span({2}, 3)) == 0.0);
  }
  CHECK(std::abs(delta(DistanceKind::grassmann, coordinate_span({3}, 3), e12) - kPi / 2) < 1e-15);

  // brute force: the nearest line inside span(e1, e2) to the tilted line
  const double alpha = 0.5;
  const Subspace a = tilted_line(alpha);
  double best = INFINITY;
  const int grid = 10000;
  for (int i = 0; i < grid; ++i) {
    const double phi = kPi * i / grid;
    const Subspace y = span({std::cos(phi) * unit(0, 3) + std::sin(phi) * unit(1, 3)});
    best = std::min(best, grassmann_distance(a, y));
  }
  CHECK(std::abs(delta(DistanceKind::grassmann, a, e12) - best) < 1e-4);
  CHECK(std::abs(delta(DistanceKind::grassmann, a, e12) - alpha) < 1e-14);
}

TEST_CASE("containment gap") {
  const Subspace e12 = coordinate_span({1, 2}, 3);
  CHECK(containment_gap(coordinate_span({1}, 3), e12) == 0.0);
  CHECK(std::abs(containment_gap(tilted_line(0.5), e12) - std::sin(0.5)) < 1e-15);
  CHECK(std::abs(containment_gap(coordinate_span({1, 3}, 3), e12) - 1.0) < 1e-15);
}

TEST_CASE("symmetric directional distance") {
  const Subspace e12 = coordinate_span({1, 2}, 3);
  CHECK(symmetric_directional(coordinate_span({1}, 3), e12) == 1.0);
  CHECK(symmetric_directional(e12, e12) == 0.0);
  CHECK(std::abs(symmetric_directional(coordinate_span({3}, 3), e12) - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("delta vanishes exactly on containment") {
  SeededGenerator g(102);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const int l = 1 + trial % n;
    const int k = 1 + (trial / 3) % l;
    const Subspace b = random_subspace(l, n, g);
    const Subspace inside = random_contained(b, k, g);
    CHECK(delta(DistanceKind::grassmann, inside, b) < 1e-12);
    CHECK(delta(DistanceKind::grassmann, b, inside) < 1e-12);
    if (l < n) {
      const Subspace generic = random_subspace(k, n, g);
      CHECK(delta(DistanceKind::grassmann, generic, b) > 1e-6);
      CHECK_FALSE(contains(b, generic));
    }
  }
}

TEST_CASE("delta restriction, symmetry and invariance") {
  SeededGenerator g(103);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const int k = 1 + trial % n;
    const int l = 1 + (trial / 6) % n;
    const Subspace a = random_subspace(k, n, g);
    const Subspace b = random_subspace(l, n, g);
    const Matrix q = random_orthogonal(n, g);
    const int m = n + 1 + trial % 3;
    for (DistanceKind kind : kAllDistanceKinds) {
      const double d = delta(kind, a, b);
      INFO(to_string(kind));
      CHECK(d == delta(kind, b, a));
      if (k == l) CHECK(d == distance(kind, a, b));
      CHECK(std::abs(delta(kind, embed(a, k, m), embed(b, l, m)) - d) <= 1e-12);
      const double rotated = delta(kind, rotate(q, a), rotate(q, b));
      if (std::isinf(d)) {
        CHECK(std::isinf(rotated));
      } else {
        CHECK(std::abs(rotated - d) <= 1e-10);
      }
    }
    CHECK(containment_gap(a, b) == delta(DistanceKind::projection, a, b));
    CHECK(std::abs(symmetric_directional(a, b) - metric_infty(DistanceKind::chordal, a, b)) <=
          1e-12);
  }
}

TEST_CASE("kind names round trip") {
  for (DistanceKind kind : kAllDistanceKinds) {
    CHECK(parse_distance_kind(to_string(kind)) == kind);
  }
  CHECK_FALSE(parse_distance_kind("euclid").has_value());
}
