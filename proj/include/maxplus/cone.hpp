#pragma once

/**
 * @file cone.hpp
 * @brief Finitely generated max-plus cones.
 *
 * A cone is held by a generator list (V-representation). Every member x of a
 * cone in R_max^n is the (+)-sum of at most n extreme generators, and the
 * extreme rays are exactly the rays of the irredundant normalized generators
 * returned by extract_basis().
 */

#include <cstddef>
#include <vector>

#include "maxplus/linalg.hpp"

namespace maxplus {

class Cone {
 public:
  /// Cone {0} in R_max^dim.
  explicit Cone(std::size_t dim) : generators_(dim) {}
  /// Zero generators are dropped (see stripped_zero_generators()).
  explicit Cone(Matrix generators);

  std::size_t dim() const { return generators_.dim(); }
  const Matrix& generators() const { return generators_; }
  std::size_t size() const { return generators_.cols(); }

  /// True when generators are ray-normalized (max coordinate 0), sorted
  /// lexicographically and pairwise distinct.
  bool normalized() const { return normalized_; }

  /// Number of zero columns removed by the constructor.
  std::size_t stripped_zero_generators() const { return stripped_; }

 private:
  friend Cone extract_basis(const Cone&);

  Matrix generators_;
  bool normalized_ = false;
  std::size_t stripped_ = 0;
};

/// One summand coeff (x) generator[index] of a certificate.
struct Term {
  std::size_t index;
  Scalar coeff;

  bool operator==(const Term&) const = default;
};

struct ConeDecomposition {
  /// Generator list the indices refer to (the normalized basis).
  Matrix generators;
  std::vector<Term> terms;
  Vector target;

  Vector recombine() const;
};

/// Shifts a nonzero vector so that its largest coordinate is 0. The zero
/// vector is returned unchanged.
Vector normalize_ray(const Vector& v);

/// x in cone(C), decided by the canonical projection. tol is only used to
/// compare the projection with x.
bool member(const Cone& c, const Vector& x, double tol = 0.0);

/// Generator k is not in the cone spanned by the other generators.
bool is_extreme_generator(const Cone& c, std::size_t k);

/// One normalized representative per extreme ray, sorted lexicographically.
Cone extract_basis(const Cone& c);

/// Writes x as a (+)-sum of at most dim() scaled extreme generators. Indices
/// refer to extract_basis(c) (or c itself when already normalized). Throws
/// NotMember when x is outside the cone.
ConeDecomposition decompose(const Cone& c, const Vector& x, double tol = 0.0);

}  // namespace maxplus
