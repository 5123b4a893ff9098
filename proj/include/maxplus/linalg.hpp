#pragma once

/**
 * @file linalg.hpp
 * @brief Vectors and generator matrices over R_max.
 *
 * A Matrix is stored column-major as a list of generators. The residuated
 * operators here are the workhorse of every geometric query: the canonical
 * projection P(x) = combine(M, left_residual(M, x)) is the greatest element
 * of cone(M) below x, so x is a member of the cone iff P(x) = x.
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "maxplus/scalar.hpp"

namespace maxplus {

class Vector {
 public:
  Vector() = default;
  /// n copies of the zero element.
  explicit Vector(std::size_t n) : coords_(n) {}
  Vector(std::initializer_list<Scalar> coords) : coords_(coords) {}
  explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

  static Vector zeros(std::size_t n) { return Vector(n); }

  std::size_t dim() const { return coords_.size(); }
  Scalar operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<Scalar>& coords() const { return coords_; }

  bool is_zero() const;
  /// Indices of the finite coordinates.
  std::vector<std::size_t> support() const;
  /// Largest coordinate (zero for the zero vector).
  Scalar max_coord() const;

  bool operator==(const Vector&) const = default;

 private:
  std::vector<Scalar> coords_;
};

/// Pointwise order u <= v.
bool leq(const Vector& u, const Vector& v);
/// Pointwise maximum.
Vector add(const Vector& u, const Vector& v);
/// lambda (x) u.
Vector scale(Scalar lambda, const Vector& u);
/// Componentwise approx_equal.
bool approx_equal(const Vector& u, const Vector& v, double tol);
/// Appends one coordinate.
Vector lift(const Vector& u, Scalar last);
/// Drops the last coordinate.
Vector drop_last(const Vector& u);
/// Lexicographic order with the zero element below every finite value.
bool lex_less(const Vector& u, const Vector& v);

std::string to_string(const Vector& v);

class Matrix {
 public:
  explicit Matrix(std::size_t dim) : dim_(dim) {}
  /// Throws DimensionMismatch if any column has the wrong length.
  Matrix(std::size_t dim, std::vector<Vector> columns);

  std::size_t dim() const { return dim_; }
  std::size_t cols() const { return columns_.size(); }
  bool empty() const { return columns_.empty(); }

  const Vector& column(std::size_t k) const { return columns_[k]; }
  const std::vector<Vector>& columns() const { return columns_; }
  auto begin() const { return columns_.begin(); }
  auto end() const { return columns_.end(); }

  void push_back(Vector v);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<Vector> columns_;
};

/// (+)_k lambda_k (x) M[:,k].
Vector combine(const Matrix& m, std::span<const Scalar> lambda);
inline Vector combine(const Matrix& m, std::initializer_list<Scalar> lambda) {
  return combine(m, std::span<const Scalar>(lambda.begin(), lambda.size()));
}

/// lambda*_k = min_i residual(x_i, M_ik); +inf exactly for zero columns.
std::vector<Residual> left_residual(const Matrix& m, const Vector& x);

/// Coefficients of the canonical projection: left_residual with +inf
/// clamped to the zero element.
std::vector<Scalar> projection_coefficients(const Matrix& m, const Vector& x);

/// Greatest element of cone(M) below x.
Vector project(const Matrix& m, const Vector& x);

}  // namespace maxplus
