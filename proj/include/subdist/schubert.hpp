#pragma once

#include "subdist/subspace.hpp"

namespace subdist {

enum class SchubertFlavor {
  contains_anchor,     // Ω+(A): l-planes containing A
  contained_in_anchor, // Ω-(B): k-planes contained in B
};

/// Ω+(anchor) ⊂ Gr(target_dim, n) or Ω-(anchor) ⊂ Gr(target_dim, n).
class SchubertVariety {
 public:
  /// Throws DimensionError unless anchor.dim <= target_dim <= n (Ω+) or
  /// 1 <= target_dim <= anchor.dim (Ω-).
  SchubertVariety(SchubertFlavor flavor, Subspace anchor, Eigen::Index target_dim);

  SchubertFlavor flavor() const { return flavor_; }
  const Subspace& anchor() const { return anchor_; }
  Eigen::Index target_dim() const { return target_dim_; }
  Eigen::Index ambient_dim() const { return anchor_.ambient_dim(); }

 private:
  SchubertFlavor flavor_;
  Subspace anchor_;
  Eigen::Index target_dim_;
};

bool member(const SchubertVariety& v, const Subspace& x, double tol = kDefaultContainTol);

/// Point of Ω+(A) ⊂ Gr(l, n) nearest to B: span{p_1..p_k, q_{k+1}..q_l}.
/// Requires k <= l = dim B.
Subspace nearest_containing(const Subspace& a, const Subspace& b, Eigen::Index l);

/// Point of Ω-(B) ⊂ Gr(k, n) nearest to A: span{q_1..q_k}. Requires k <= l.
Subspace nearest_contained(const Subspace& a, const Subspace& b);

/// Point of Ω+(A) ⊂ Gr(l, n) furthest from B in the Grassmann distance:
/// A plus the first l - k directions orthogonal to both A and B. Throws
/// InsufficientAmbient when dim(A + B) + (l - k) > n.
Subspace furthest_containing(const Subspace& a, const Subspace& b, Eigen::Index l);

/// (n - l)(l - k) for Ω+, k(l - k) for Ω-.
Eigen::Index schubert_dimension(const SchubertVariety& v);

}  // namespace subdist
