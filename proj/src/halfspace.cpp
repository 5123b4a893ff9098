#include "maxplus/halfspace.hpp"

#include "maxplus/errors.hpp"

namespace maxplus {

HalfSpace::HalfSpace(Vector pc, Scalar pa, Vector mc, Scalar ma)
    : plus_coeffs(std::move(pc)), plus_const(pa), minus_coeffs(std::move(mc)), minus_const(ma) {
  if (plus_coeffs.dim() != minus_coeffs.dim())
    throw DimensionMismatch("half-space forms", plus_coeffs.dim(), minus_coeffs.dim());
}

Scalar eval_form(const Vector& coeffs, const Vector& x) {
  if (coeffs.dim() != x.dim()) throw DimensionMismatch("eval_form", coeffs.dim(), x.dim());
  Scalar out = Scalar::zero();
  for (std::size_t i = 0; i < x.dim(); ++i) out = add(out, mul(coeffs[i], x[i]));
  return out;
}

namespace {

bool holds(Scalar lhs, Scalar rhs, Side side) { return side == Side::plus ? lhs >= rhs : lhs <= rhs; }

}  // namespace

bool contains(const HalfSpace& h, const Vector& x, Side side) {
  if (x.dim() != h.dim()) throw DimensionMismatch("half-space contains", h.dim(), x.dim());
  return holds(add(eval_form(h.plus_coeffs, x), h.plus_const),
               add(eval_form(h.minus_coeffs, x), h.minus_const), side);
}

bool contains_set(const HalfSpace& h, const ConvexSet& a, Side side) {
  if (a.dim() != h.dim()) throw DimensionMismatch("half-space contains_set", h.dim(), a.dim());
  for (const Vector& p : a.points())
    if (!contains(h, p, side)) return false;
  for (const Vector& r : a.rays())
    if (!holds(eval_form(h.plus_coeffs, r), eval_form(h.minus_coeffs, r), side)) return false;
  return true;
}

}  // namespace maxplus
