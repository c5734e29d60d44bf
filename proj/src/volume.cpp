#include "subdist/volume.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "subdist/error.hpp"

namespace subdist {
namespace {

void check_ambient(int n) {
  if (n > kMaxVolumeAmbient) {
    throw Error(ErrorKind::Overflow,
                "ambient dimension " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxVolumeAmbient));
  }
}

double log_factorial(int m) { return std::lgamma(static_cast<double>(m) + 1.0); }

// sum_{j=from}^{to} log w_j
double sum_log_omega(int from, int to) {
  double acc = 0.0;
  for (int j = from; j <= to; ++j) acc += log_unit_ball_volume(j);
  return acc;
}

// Area of the unit sphere S^{m-1}, m * w_m = 2 pi^{m/2} / Gamma(m/2), m >= 1.
double sphere_area(int m) {
  const double half = 0.5 * static_cast<double>(m);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

// Both volume formulas telescope into prod_i area(top_i) / area(bottom_i).
// Multiplying the ratios directly keeps small cases exact (Vol(Gr(1, 3)) is
// 2 pi to the last bit); the log form takes over if the product leaves the
// normal range.
template <class Top, class Bottom>
double area_ratio_product(int count, Top top, Bottom bottom, double log_fallback) {
  double acc = 1.0;
  for (int i = 1; i <= count; ++i) acc *= sphere_area(top(i)) / sphere_area(bottom(i));
  if (std::isfinite(acc) && acc >= std::numeric_limits<double>::min()) return acc;
  return std::exp(log_fallback);
}

}  // namespace

double log_unit_ball_volume(int m) {
  if (m < 0) throw Error(ErrorKind::DimensionError, "ball dimension must be >= 0");
  const double half = 0.5 * static_cast<double>(m);
  return half * std::log(std::numbers::pi) - std::lgamma(1.0 + half);
}

double unit_ball_volume(int m) {
  if (m < 0) throw Error(ErrorKind::DimensionError, "ball dimension must be >= 0");
  const double half = 0.5 * static_cast<double>(m);
  return std::pow(std::numbers::pi, half) / std::tgamma(1.0 + half);
}

double log_grassmannian_volume(int k, int n) {
  if (k < 1 || k > n) {
    throw Error(ErrorKind::DimensionError,
                "need 1 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  check_ambient(n);
  const double log_binom = log_factorial(n) - log_factorial(k) - log_factorial(n - k);
  return log_binom + sum_log_omega(1, n) - sum_log_omega(1, k) - sum_log_omega(1, n - k);
}

double grassmannian_volume(int k, int n) {
  const double log_value = log_grassmannian_volume(k, n);
  return area_ratio_product(
      k, [&](int i) { return n - k + i; }, [](int i) { return i; }, log_value);
}

double log_relative_volume(int k, int l, int n) {
  if (k < 1 || k > l || l > n) {
    throw Error(ErrorKind::DimensionError, "need 1 <= k <= l <= n, got k=" + std::to_string(k) +
                                               " l=" + std::to_string(l) +
                                               " n=" + std::to_string(n));
  }
  check_ambient(n);
  return log_factorial(l) + log_factorial(n - k) - log_factorial(n) - log_factorial(l - k) +
         sum_log_omega(l - k + 1, l) - sum_log_omega(n - k + 1, n);
}

double relative_volume(int k, int l, int n) {
  const double log_value = log_relative_volume(k, l, n);
  return area_ratio_product(
      k, [&](int i) { return l - k + i; }, [&](int i) { return n - k + i; }, log_value);
}

}  // namespace subdist
