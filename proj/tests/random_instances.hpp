#pragma once

// Random integer instances for property tests.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "maxplus/convex_set.hpp"

namespace testing_support {

using maxplus::Matrix;
using maxplus::Scalar;
using maxplus::Vector;

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937& engine() { return rng_; }

  /// Integer in [lo, hi], or -inf with probability p_zero.
  Scalar scalar(int lo = -5, int hi = 5, double p_zero = 0.0) {
    if (p_zero > 0 && chance(p_zero)) return Scalar::zero();
    return Scalar{static_cast<double>(uniform(lo, hi))};
  }

  Vector vector(std::size_t n, double p_zero = 0.0) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = scalar(-5, 5, p_zero);
    if (v.is_zero()) v[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1))] = scalar();
    return v;
  }

  Matrix matrix(std::size_t n, std::size_t m, double p_zero = 0.0) {
    Matrix out(n);
    for (std::size_t k = 0; k < m; ++k) out.push_back(vector(n, p_zero));
    return out;
  }

  /// Random linear combination of the columns (some coefficients -inf).
  Vector cone_member(const Matrix& gens) {
    std::vector<Scalar> lambda(gens.cols());
    for (auto& l : lambda) l = scalar(-5, 5, 0.3);
    return maxplus::combine(gens, lambda);
  }

  /// Random convex combination of the points plus a random combination of
  /// the rays.
  Vector set_member(const maxplus::ConvexSet& a) {
    std::vector<Scalar> alpha(a.points().cols());
    for (auto& l : alpha) l = scalar(-5, 0, 0.3);
    alpha[static_cast<std::size_t>(uniform(0, static_cast<int>(alpha.size()) - 1))] = Scalar::one();
    Vector x = maxplus::combine(a.points(), alpha);
    if (!a.rays().empty()) x = maxplus::add(x, cone_member(a.rays()));
    return x;
  }

  maxplus::ConvexSet convex_set(std::size_t n, std::size_t p, std::size_t q, double p_zero = 0.0) {
    return maxplus::ConvexSet(matrix(n, p, p_zero), matrix(n, q, p_zero));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace testing_support
