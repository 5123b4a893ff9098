#pragma once

/**
 * @file convex_set.hpp
 * @brief Finitely generated max-plus convex sets A = co(points) (+) cone(rays).
 *
 * Every query reduces to the homogenization cone in R_max^{n+1}, generated
 * by (p, 0) for each point p and (r, -inf) for each ray r. x is in A iff
 * (x, 0) is in that cone; the extreme points of A are the basis generators
 * of the cone with a finite last coordinate, rescaled so that coordinate is
 * 0; the ones with last coordinate -inf are the extreme rays of rec(A).
 */

#include <cstddef>
#include <vector>

#include "maxplus/cone.hpp"
#include "maxplus/linalg.hpp"

namespace maxplus {

class ConvexSet {
 public:
  /// Throws std::invalid_argument if points is empty and DimensionMismatch
  /// if the two lists disagree on the ambient dimension. Zero rays are
  /// dropped.
  ConvexSet(Matrix points, Matrix rays);

  std::size_t dim() const { return points_.dim(); }
  const Matrix& points() const { return points_; }
  const Matrix& rays() const { return rays_; }
  std::size_t stripped_zero_rays() const { return stripped_; }

 private:
  Matrix points_;
  Matrix rays_;
  std::size_t stripped_ = 0;
};

struct SetDecomposition {
  /// Extreme points of A, sorted; point_terms index into this list.
  Matrix points;
  /// Basis of rec(A); ray_terms index into this list.
  Matrix rays;
  std::vector<Term> point_terms;
  std::vector<Term> ray_terms;
  Vector target;

  Vector recombine() const;
};

Cone homogenize(const ConvexSet& a);

bool member(const ConvexSet& a, const Vector& x, double tol = 0.0);

/// ext(A), sorted lexicographically.
std::vector<Vector> extreme_points(const ConvexSet& a);

/// Basis of the recession cone.
Cone recession(const ConvexSet& a);

/// x as a convex combination of extreme points (+) a combination of extreme
/// rays, at most n + 1 terms in total. Throws NotMember if x is not in A.
SetDecomposition decompose(const ConvexSet& a, const Vector& x, double tol = 0.0);

/// Generators of {a (+) b : a in A, b in B}: pairwise maxima of the points
/// and the union of the rays.
ConvexSet minkowski_sum(const ConvexSet& a, const ConvexSet& b);

/// Throws NotMember if x is not in A.
bool is_extreme(const ConvexSet& a, const Vector& x);

/// Outcome of checking A = co(ext(A)) (+) rec(A) by mutual membership of
/// generators.
struct MinkowskiVerdict {
  bool holds;
  ConvexSet rebuilt;
  /// Generators of either side that the other side does not contain.
  std::vector<Vector> missing_points;
  std::vector<Vector> missing_rays;
};

MinkowskiVerdict verify_minkowski(const ConvexSet& a);

}  // namespace maxplus
