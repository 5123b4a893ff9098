#pragma once

/**
 * @file halfspace.hpp
 * @brief Max-plus affine half-spaces
 *
 *   H+ = { x : psi+(x) (+) a+ >= psi-(x) (+) a- }
 *
 * with psi(x) = (+)_i c_i (x) x_i. H- reverses the inequality; the boundary
 * belongs to both sides.
 */

#include "maxplus/convex_set.hpp"
#include "maxplus/linalg.hpp"

namespace maxplus {

enum class Side { plus, minus };

struct HalfSpace {
  Vector plus_coeffs;
  Scalar plus_const;
  Vector minus_coeffs;
  Scalar minus_const;

  /// Throws DimensionMismatch if the two forms disagree.
  HalfSpace(Vector plus_coeffs, Scalar plus_const, Vector minus_coeffs, Scalar minus_const);

  std::size_t dim() const { return plus_coeffs.dim(); }
};

/// (+)_i coeffs_i (x) x_i.
Scalar eval_form(const Vector& coeffs, const Vector& x);

bool contains(const HalfSpace& h, const Vector& x, Side side);

/// Every point satisfies the affine inequality and every ray the
/// homogeneous one (psi+(r) >= psi-(r) on the plus side).
bool contains_set(const HalfSpace& h, const ConvexSet& a, Side side);

}  // namespace maxplus
