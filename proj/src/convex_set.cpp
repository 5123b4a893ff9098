#include "maxplus/convex_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxplus/errors.hpp"

namespace maxplus {

ConvexSet::ConvexSet(Matrix points, Matrix rays) : points_(std::move(points)), rays_(points_.dim()) {
  if (points_.empty()) throw std::invalid_argument("convex set needs at least one point");
  if (rays.dim() != points_.dim()) throw DimensionMismatch("convex set rays", points_.dim(), rays.dim());
  for (const Vector& r : rays) {
    if (r.is_zero()) {
      ++stripped_;
      continue;
    }
    rays_.push_back(r);
  }
}

Vector SetDecomposition::recombine() const {
  Vector out(target.dim());
  for (const Term& t : point_terms) out = add(out, scale(t.coeff, points.column(t.index)));
  for (const Term& t : ray_terms) out = add(out, scale(t.coeff, rays.column(t.index)));
  return out;
}

Cone homogenize(const ConvexSet& a) {
  Matrix lifted(a.dim() + 1);
  for (const Vector& p : a.points()) lifted.push_back(lift(p, Scalar::one()));
  for (const Vector& r : a.rays()) lifted.push_back(lift(r, Scalar::zero()));
  return Cone(std::move(lifted));
}

bool member(const ConvexSet& a, const Vector& x, double tol) {
  if (x.dim() != a.dim()) throw DimensionMismatch("set member", a.dim(), x.dim());
  return member(homogenize(a), lift(x, Scalar::one()), tol);
}

namespace {

struct Split {
  Cone basis;                 // basis of the homogenization cone
  std::vector<Vector> points; // extreme points, sorted
  Matrix rays;                // recession basis, sorted
};

// Basis generator (q, c) with c finite is c (x) (e, 0) for the extreme
// point e = (-c) (x) q.
Vector dehomogenize(const Vector& g) {
  Scalar last = g[g.dim() - 1];
  return drop_last(scale(Scalar{-last.value()}, g));
}

Split split_basis(const ConvexSet& a) {
  Split s{extract_basis(homogenize(a)), {}, Matrix(a.dim())};
  for (const Vector& g : s.basis.generators()) {
    if (g[g.dim() - 1].is_finite())
      s.points.push_back(dehomogenize(g));
    else
      s.rays.push_back(drop_last(g));
  }
  std::sort(s.points.begin(), s.points.end(), lex_less);
  return s;
}

std::size_t index_of(const std::vector<Vector>& list, const Vector& v) {
  auto it = std::find(list.begin(), list.end(), v);
  if (it == list.end()) throw std::logic_error("decomposition references an unknown generator");
  return static_cast<std::size_t>(it - list.begin());
}

}  // namespace

std::vector<Vector> extreme_points(const ConvexSet& a) { return split_basis(a).points; }

Cone recession(const ConvexSet& a) { return extract_basis(Cone(a.rays())); }

SetDecomposition decompose(const ConvexSet& a, const Vector& x, double tol) {
  if (x.dim() != a.dim()) throw DimensionMismatch("set decompose", a.dim(), x.dim());
  Split s = split_basis(a);

  ConeDecomposition cd = [&] {
    try {
      return decompose(s.basis, lift(x, Scalar::one()), tol);
    } catch (const NotMember& e) {
      throw NotMember("vector " + to_string(x) + " is not in the convex set", e.projection());
    }
  }();

  SetDecomposition out{Matrix(a.dim(), s.points), s.rays, {}, {}, x};
  for (const Term& t : cd.terms) {
    const Vector& g = cd.generators.column(t.index);
    Scalar last = g[g.dim() - 1];
    if (last.is_finite()) {
      out.point_terms.push_back({index_of(s.points, dehomogenize(g)), mul(t.coeff, last)});
    } else {
      out.ray_terms.push_back({index_of(s.rays.columns(), drop_last(g)), t.coeff});
    }
  }
  auto by_index = [](const Term& l, const Term& r) { return l.index < r.index; };
  std::sort(out.point_terms.begin(), out.point_terms.end(), by_index);
  std::sort(out.ray_terms.begin(), out.ray_terms.end(), by_index);
  return out;
}

ConvexSet minkowski_sum(const ConvexSet& a, const ConvexSet& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("minkowski_sum", a.dim(), b.dim());
  Matrix points(a.dim());
  for (const Vector& p : a.points())
    for (const Vector& q : b.points()) points.push_back(add(p, q));
  Matrix rays(a.dim());
  for (const Vector& r : a.rays()) rays.push_back(r);
  for (const Vector& r : b.rays()) rays.push_back(r);
  return ConvexSet(std::move(points), std::move(rays));
}

bool is_extreme(const ConvexSet& a, const Vector& x) {
  if (x.dim() != a.dim()) throw DimensionMismatch("is_extreme", a.dim(), x.dim());
  const Cone h = homogenize(a);
  const Vector lifted = lift(x, Scalar::one());
  const Vector proj = project(h.generators(), lifted);
  if (proj != lifted) throw NotMember("vector " + to_string(x) + " is not in the convex set", proj.coords());

  Matrix points = a.points();
  points.push_back(x);
  const auto ext = extreme_points(ConvexSet(std::move(points), a.rays()));
  return std::find(ext.begin(), ext.end(), x) != ext.end();
}

MinkowskiVerdict verify_minkowski(const ConvexSet& a) {
  Split s = split_basis(a);
  const ConvexSet hull(Matrix(a.dim(), s.points), Matrix(a.dim()));
  const ConvexSet recession_set(Matrix(a.dim(), {Vector::zeros(a.dim())}), s.rays);
  MinkowskiVerdict v{true, minkowski_sum(hull, recession_set), {}, {}};

  auto check = [&](const ConvexSet& from, const ConvexSet& into) {
    const Cone into_rec(into.rays());
    for (const Vector& p : from.points())
      if (!member(into, p)) v.missing_points.push_back(p);
    for (const Vector& r : from.rays())
      if (!member(into_rec, r)) v.missing_rays.push_back(r);
  };
  check(a, v.rebuilt);
  check(v.rebuilt, a);
  v.holds = v.missing_points.empty() && v.missing_rays.empty();
  return v;
}

}  // namespace maxplus
