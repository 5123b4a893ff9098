#include <doctest.h>

#include <fstream>
#include <sstream>

#include "maxplus/errors.hpp"
#include "maxplus/halfspace.hpp"
#include "maxplus/json_io.hpp"
#include "random_instances.hpp"

using maxplus::ConvexSet;
using maxplus::HalfSpace;
using maxplus::Matrix;
using maxplus::Scalar;
using maxplus::Side;
using maxplus::Vector;

namespace {

const Scalar kZero = Scalar::zero();

// x1 (+) 1 (x) x2 >= 0.
HalfSpace face_halfspace() { return HalfSpace(Vector{0, 1}, kZero, Vector::zeros(2), 0); }

maxplus::json_io::Json load(const std::string& name) {
  std::ifstream in(std::string(MAXPLUS_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return maxplus::json_io::parse(ss.str(), name);
}

}  // namespace

TEST_CASE("eval_form") {
  CHECK(maxplus::eval_form(Vector{0, 1}, Vector{0, -1}) == Scalar{0});
  CHECK(maxplus::eval_form(Vector::zeros(3), Vector{1, 2, 3}) == kZero);
  CHECK(maxplus::eval_form(Vector{0, 0, 0}, Vector{1, 7, kZero}) == Scalar{7});
  CHECK_THROWS_AS(maxplus::eval_form(Vector{0, 1}, Vector{0}), maxplus::DimensionMismatch);
}

TEST_CASE("contains") {
  const HalfSpace h = face_halfspace();
  CHECK(maxplus::contains(h, Vector{0, -1}, Side::plus));
  CHECK(maxplus::contains(h, Vector{0, -1}, Side::minus));
  CHECK_FALSE(maxplus::contains(h, Vector{-5, -5}, Side::plus));
  CHECK(maxplus::contains(h, Vector{-5, -5}, Side::minus));
  CHECK_THROWS_AS(maxplus::contains(h, Vector{0, 0, 0}, Side::plus), maxplus::DimensionMismatch);
  CHECK_THROWS_AS(HalfSpace(Vector{0, 1}, 0, Vector{0}, 0), maxplus::DimensionMismatch);
}

TEST_CASE("contains_set") {
  const ConvexSet any(Matrix(2, {Vector{3, -4}}), Matrix(2, {Vector{0, 1}}));
  const HalfSpace vacuous(Vector{0, 0}, kZero, Vector::zeros(2), kZero);
  CHECK(maxplus::contains_set(vacuous, any, Side::plus));

  // Points satisfy x1 >= x2 but the ray (0,1) eventually does not.
  const HalfSpace diag(Vector{0, kZero}, kZero, Vector{kZero, 0}, kZero);
  const ConvexSet a(Matrix(2, {Vector{2, 0}, Vector{5, 1}}), Matrix(2, {Vector{0, 1}}));
  CHECK(maxplus::contains(diag, Vector{2, 0}, Side::plus));
  CHECK(maxplus::contains(diag, Vector{5, 1}, Side::plus));
  CHECK_FALSE(maxplus::contains_set(diag, a, Side::plus));
  CHECK(maxplus::contains_set(diag, ConvexSet(a.points(), Matrix(2, {Vector{0, -1}})), Side::plus));

  // x1 (+) x2 >= 0 supports the running example: every extreme point has a
  // coordinate >= 0 and rays only push upward.
  const ConvexSet running_example(Matrix(2, {Vector{5, 2}, Vector{4, 0}, Vector{3, 2}, Vector{1, 3}, Vector{2, 5}}),
                       Matrix(2, {Vector{0, 1}, Vector{2, 0}}));
  const HalfSpace support(Vector{0, 0}, kZero, Vector::zeros(2), 0);
  CHECK(maxplus::contains_set(support, running_example, Side::plus));
  CHECK_FALSE(maxplus::contains_set(support, running_example, Side::minus));
}

TEST_CASE("the two sides cover the space and are convex") {
  testing_support::Gen gen(13);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 4));
    const HalfSpace h(gen.vector(n, 0.3), gen.scalar(-5, 5, 0.3), gen.vector(n, 0.3), gen.scalar(-5, 5, 0.3));
    const Vector x = gen.vector(n, 0.2), y = gen.vector(n, 0.2);
    CHECK((maxplus::contains(h, x, Side::plus) || maxplus::contains(h, x, Side::minus)));
    for (Side side : {Side::plus, Side::minus}) {
      if (!maxplus::contains(h, x, side) || !maxplus::contains(h, y, side)) continue;
      Scalar alpha = gen.scalar(-5, 0), beta = Scalar::one();
      if (gen.chance(0.5)) std::swap(alpha, beta);
      CHECK(maxplus::contains(h, maxplus::add(maxplus::scale(alpha, x), maxplus::scale(beta, y)), side));
    }
  }
}

TEST_CASE("face counterexample instance") {
  const auto j = load("face_counterexample.json");
  const ConvexSet a = maxplus::json_io::set_from_json(j["set"]);
  const ConvexSet face = maxplus::json_io::set_from_json(j["face"]);
  const HalfSpace h = maxplus::json_io::halfspace_from_json(j["halfspace"]);
  const Vector p = maxplus::json_io::vector_from_json(j["p"], "p");

  CHECK(maxplus::contains_set(h, a, Side::plus));
  for (const Vector& g : face.points()) {
    CHECK(maxplus::member(a, g));
    CHECK(maxplus::contains(h, g, Side::minus));
  }
  CHECK(maxplus::member(face, p));
  CHECK(maxplus::is_extreme(face, p));
  CHECK_FALSE(maxplus::is_extreme(a, p));

  // Sampled check that the face is all of A on the minus side.
  testing_support::Gen gen(17);
  int inside = 0;
  for (int s = 0; s < 2000; ++s) {
    const Vector x = gen.set_member(a);
    if (!maxplus::contains(h, x, Side::minus)) continue;
    ++inside;
    CHECK(maxplus::member(face, x));
  }
  CHECK(inside > 0);
}
