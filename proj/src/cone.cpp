#include "maxplus/cone.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "maxplus/errors.hpp"

namespace maxplus {

Cone::Cone(Matrix generators) : generators_(generators.dim()) {
  for (const Vector& g : generators) {
    if (g.is_zero()) {
      ++stripped_;
      continue;
    }
    generators_.push_back(g);
  }
}

Vector ConeDecomposition::recombine() const {
  Vector out(generators.dim());
  for (const Term& t : terms) out = add(out, scale(t.coeff, generators.column(t.index)));
  return out;
}

Vector normalize_ray(const Vector& v) {
  Scalar top = v.max_coord();
  if (top.is_zero()) return v;
  return scale(Scalar{-top.value()}, v);
}

bool member(const Cone& c, const Vector& x, double tol) {
  if (x.dim() != c.dim()) throw DimensionMismatch("cone member", c.dim(), x.dim());
  return approx_equal(project(c.generators(), x), x, tol);
}

namespace {

Matrix without_column(const Matrix& m, std::size_t skip) {
  Matrix out(m.dim());
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j != skip) out.push_back(m.column(j));
  return out;
}

}  // namespace

bool is_extreme_generator(const Cone& c, std::size_t k) {
  if (k >= c.size())
    throw std::out_of_range("generator index " + std::to_string(k) + " out of range (" +
                            std::to_string(c.size()) + " generators)");
  const Vector& g = c.generators().column(k);
  return project(without_column(c.generators(), k), g) != g;
}

Cone extract_basis(const Cone& c) {
  std::vector<Vector> rays;
  rays.reserve(c.size());
  for (const Vector& g : c.generators()) rays.push_back(normalize_ray(g));
  std::sort(rays.begin(), rays.end(), lex_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  Cone candidates(Matrix(c.dim(), rays));
  Cone basis(c.dim());
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (is_extreme_generator(candidates, k)) basis.generators_.push_back(rays[k]);
  basis.normalized_ = true;
  return basis;
}

ConeDecomposition decompose(const Cone& c, const Vector& x, double tol) {
  if (x.dim() != c.dim()) throw DimensionMismatch("cone decompose", c.dim(), x.dim());
  const Cone basis = c.normalized() ? c : extract_basis(c);
  const Matrix& gens = basis.generators();

  const std::vector<Scalar> lambda = projection_coefficients(gens, x);
  const Vector proj = combine(gens, lambda);
  if (!approx_equal(proj, x, tol))
    throw NotMember("vector " + to_string(x) + " is not in the cone", proj.coords());

  std::vector<Vector> scaled(gens.cols());
  for (std::size_t k = 0; k < gens.cols(); ++k) scaled[k] = scale(lambda[k], gens.column(k));

  // For each finite coordinate, pick a minimal scaled generator below x
  // that attains it; ties go to the lowest basis index.
  std::vector<std::size_t> chosen;
  for (std::size_t i : x.support()) {
    std::vector<std::size_t> attaining;
    for (std::size_t k = 0; k < gens.cols(); ++k)
      if (lambda[k].is_finite() && approx_equal(scaled[k][i], x[i], tol)) attaining.push_back(k);
    for (std::size_t k : attaining) {
      bool minimal = std::none_of(attaining.begin(), attaining.end(), [&](std::size_t j) {
        return j != k && scaled[j] != scaled[k] && leq(scaled[j], scaled[k]);
      });
      if (minimal) {
        chosen.push_back(k);
        break;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

  // A minimal element for one coordinate may be dominated elsewhere by the
  // term chosen for another coordinate (x on an extreme ray, say); drop
  // summands the rest already covers.
  for (std::size_t pos = 0; pos < chosen.size();) {
    Vector rest(x.dim());
    for (std::size_t j = 0; j < chosen.size(); ++j)
      if (j != pos) rest = add(rest, scaled[chosen[j]]);
    if (approx_equal(rest, x, tol))
      chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(pos));
    else
      ++pos;
  }

  ConeDecomposition out{gens, {}, x};
  for (std::size_t k : chosen) out.terms.push_back({k, lambda[k]});
  return out;
}

}  // namespace maxplus
