#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subdist/metrics.hpp"
#include "subdist/sampling.hpp"
#include "support.hpp"

using namespace subdist;
using testing::coordinate_span;
using testing::kPi;
using testing::span;
using testing::unit;

TEST_CASE("epsilon term") {
  CHECK(epsilon_term(coordinate_span({1}, 5), coordinate_span({2}, 5)) == 0.0);
  CHECK(epsilon_term(coordinate_span({1}, 5), coordinate_span({1, 2}, 5)) == 1.0);
  CHECK(epsilon_term(coordinate_span({1}, 5), coordinate_span({1, 2, 3, 4, 5}, 5)) == 2.0);
}

TEST_CASE("metric examples") {
  const Subspace e1 = coordinate_span({1}, 3);
  const Subspace e3 = coordinate_span({3}, 3);
  const Subspace e12 = coordinate_span({1, 2}, 3);
  CHECK(std::abs(metric_infty(DistanceKind::grassmann, e1, e12) - kPi / 2) < 1e-15);
  CHECK(std::abs(metric_infty(DistanceKind::grassmann, e3, e12) - kPi / std::sqrt(2.0)) < 1e-15);
  CHECK(metric_infty(DistanceKind::chordal, e1, e12) == 1.0);
  CHECK(std::abs(metric_infty(DistanceKind::chordal, e1, e12) - symmetric_directional(e1, e12)) <
        1e-15);
  CHECK(metric_infty(DistanceKind::projection, e1, e12) == 1.0);
  CHECK(metric_infty(DistanceKind::projection, e3, e12) == 1.0);
}

TEST_CASE("indicator constants") {
  CHECK(metric_constant(DistanceKind::asimov) == kPi / 2);
  CHECK(metric_constant(DistanceKind::spectral) == std::sqrt(2.0));
  CHECK(std::isinf(metric_constant(DistanceKind::martin)));
  CHECK(metric_constant(DistanceKind::binet_cauchy) == 1.0);
  CHECK(metric_constant(DistanceKind::fubini_study) == 1.0);
  CHECK(metric_constant(DistanceKind::projection) == 1.0);
  CHECK(metric_constant(DistanceKind::chordal) == 1.0);
  CHECK(metric_constant(DistanceKind::grassmann) == kPi / 2);

  const Subspace a = coordinate_span({1}, 4);
  const Subspace b = coordinate_span({2, 3}, 4);
  for (DistanceKind kind : kAllDistanceKinds) {
    if (metric_family(kind) == MetricFamily::indicator) {
      CHECK(metric_infty(kind, a, b) == metric_constant(kind));
    }
  }
}

TEST_CASE("rms metrics equal the distance between padded embeddings") {
  SeededGenerator g(201);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    const int l = 1 + trial % n;
    const int k = 1 + (trial / 5) % l;
    const Subspace a = random_subspace(k, n, g);
    const Subspace b = random_subspace(l, n, g);
    const int m = n + l - k;
    for (DistanceKind kind : {DistanceKind::grassmann, DistanceKind::chordal,
                              DistanceKind::procrustes}) {
      const double via_embedding = distance(kind, embed(a, l, m), embed(b, l, m));
      INFO(to_string(kind), " k=", k, " l=", l, " n=", n);
      CHECK(std::abs(metric_infty(kind, a, b) - via_embedding) <= 1e-10);
      CHECK(metric_infty(kind, a, b) == metric_infty(kind, b, a));
    }
  }
}

TEST_CASE("equal dimensions restrict to the distance") {
  SeededGenerator g(202);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const int k = 1 + trial % n;
    const Subspace a = random_subspace(k, n, g);
    const Subspace b = random_subspace(k, n, g);
    for (DistanceKind kind : kAllDistanceKinds) CHECK(metric_infty(kind, a, b) == distance(kind, a, b));
  }
}

TEST_CASE("metric axioms on random triples") {
  SeededGenerator g(203);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 4 + trial % 5;
    const Subspace a = random_subspace(1 + trial % 4, n, g);
    const Subspace b = random_subspace(1 + (trial / 4) % 4, n, g);
    const Subspace c = random_subspace(1 + (trial / 16) % 4, n, g);
    for (DistanceKind kind : kAllDistanceKinds) {
      INFO(to_string(kind));
      const double ab = metric_infty(kind, a, b);
      CHECK(ab >= 0.0);
      CHECK(metric_infty(kind, a, a) == 0.0);
      if (a.dim() != b.dim()) CHECK(ab > 0.0);
      const double ba = metric_infty(kind, b, a);
      if (std::isinf(ab)) {
        CHECK(std::isinf(ba));
      } else {
        CHECK(std::abs(ab - ba) <= 1e-12);
      }
      if (kind == DistanceKind::martin) continue;  // see the next test case
      CHECK(metric_infty(kind, a, c) <= ab + metric_infty(kind, b, c) + 1e-10);
    }
  }
}

TEST_CASE("Martin distance is not subadditive") {
  // Three lines in the plane at angles 0, 0.7 and 1.4.
  auto line = [](double phi) { return span({std::cos(phi) * unit(0, 2) + std::sin(phi) * unit(1, 2)}); };
  const Subspace a = line(0.0);
  const Subspace b = line(0.7);
  const Subspace c = line(1.4);
  const double direct = distance(DistanceKind::martin, a, c);
  const double detour = distance(DistanceKind::martin, a, b) + distance(DistanceKind::martin, b, c);
  CHECK(std::abs(direct - std::sqrt(-2.0 * std::log(std::cos(1.4)))) < 1e-12);
  CHECK(direct > detour + 0.4);
}
