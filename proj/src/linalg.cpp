#include "maxplus/linalg.hpp"

#include <algorithm>

#include "maxplus/errors.hpp"

namespace maxplus {

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Scalar s) { return s.is_zero(); });
}

std::vector<std::size_t> Vector::support() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i].is_finite()) idx.push_back(i);
  return idx;
}

Scalar Vector::max_coord() const {
  Scalar m = Scalar::zero();
  for (Scalar s : coords_) m = maxplus::add(m, s);
  return m;
}

bool leq(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("leq", u.dim(), v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

Vector add(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("add", u.dim(), v.dim());
  Vector w(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) w[i] = add(u[i], v[i]);
  return w;
}

Vector scale(Scalar lambda, const Vector& u) {
  Vector w(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) w[i] = mul(lambda, u[i]);
  return w;
}

bool approx_equal(const Vector& u, const Vector& v, double tol) {
  if (u.dim() != v.dim()) return false;
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!approx_equal(u[i], v[i], tol)) return false;
  return true;
}

Vector lift(const Vector& u, Scalar last) {
  std::vector<Scalar> c(u.begin(), u.end());
  c.push_back(last);
  return Vector(std::move(c));
}

Vector drop_last(const Vector& u) {
  std::vector<Scalar> c(u.begin(), u.end());
  if (!c.empty()) c.pop_back();
  return Vector(std::move(c));
}

bool lex_less(const Vector& u, const Vector& v) {
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

Matrix::Matrix(std::size_t dim, std::vector<Vector> columns) : dim_(dim) {
  for (auto& c : columns) push_back(std::move(c));
}

void Matrix::push_back(Vector v) {
  if (v.dim() != dim_) throw DimensionMismatch("Matrix column", dim_, v.dim());
  columns_.push_back(std::move(v));
}

Vector combine(const Matrix& m, std::span<const Scalar> lambda) {
  if (lambda.size() != m.cols()) throw DimensionMismatch("combine coefficients", m.cols(), lambda.size());
  Vector out(m.dim());
  for (std::size_t k = 0; k < m.cols(); ++k) {
    if (lambda[k].is_zero()) continue;
    const Vector& g = m.column(k);
    for (std::size_t i = 0; i < m.dim(); ++i) out[i] = add(out[i], mul(lambda[k], g[i]));
  }
  return out;
}

std::vector<Residual> left_residual(const Matrix& m, const Vector& x) {
  if (x.dim() != m.dim()) throw DimensionMismatch("left_residual", m.dim(), x.dim());
  std::vector<Residual> out(m.cols(), Residual::top());
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const Vector& g = m.column(k);
    for (std::size_t i = 0; i < m.dim(); ++i) out[k] = std::min(out[k], residual(x[i], g[i]));
  }
  return out;
}

std::vector<Scalar> projection_coefficients(const Matrix& m, const Vector& x) {
  auto res = left_residual(m, x);
  std::vector<Scalar> lambda(res.size());
  for (std::size_t k = 0; k < res.size(); ++k)
    lambda[k] = res[k].is_top() ? Scalar::zero() : res[k].to_scalar();
  return lambda;
}

Vector project(const Matrix& m, const Vector& x) {
  return combine(m, projection_coefficients(m, x));
}

}  // namespace maxplus
