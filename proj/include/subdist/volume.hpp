#pragma once

namespace subdist {

inline constexpr int kMaxVolumeAmbient = 170;

/// Volume of the unit ball in R^m, pi^{m/2} / Gamma(1 + m/2). m >= 0.
double unit_ball_volume(int m);
double log_unit_ball_volume(int m);

/// Riemannian volume of Gr(k, n) for the metric whose geodesic distance is
/// the Grassmann distance:
///   C(n, k) * prod_{j<=n} w_j / (prod_{j<=k} w_j * prod_{j<=n-k} w_j).
/// Requires 1 <= k <= n <= 170; Overflow beyond that.
double grassmannian_volume(int k, int n);
double log_grassmannian_volume(int k, int n);

/// Fraction of Gr(l, n) occupied by the l-planes containing a fixed k-plane,
/// which is also the fraction of Gr(k, n) occupied by the k-planes inside a
/// fixed l-plane:
///   l! (n-k)! prod_{j=l-k+1}^{l} w_j / (n! (l-k)! prod_{j=n-k+1}^{n} w_j).
/// Requires 1 <= k <= l <= n <= 170.
double relative_volume(int k, int l, int n);
double log_relative_volume(int k, int l, int n);

}  // namespace subdist
