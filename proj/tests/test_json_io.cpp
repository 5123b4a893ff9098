#include <doctest.h>

#include "maxplus/json_io.hpp"
#include "random_instances.hpp"

using maxplus::Scalar;
using maxplus::Vector;
namespace jio = maxplus::json_io;

TEST_CASE("scalar encoding") {
  CHECK(jio::to_json(Scalar::zero()) == "-inf");
  CHECK(jio::to_json(Scalar{3}).dump() == "3");
  CHECK(jio::to_json(Scalar{-0.5}).dump() == "-0.5");
  CHECK(jio::scalar_from_json(jio::Json("-inf"), "x") == Scalar::zero());
  CHECK(jio::scalar_from_json(jio::Json(2.5), "x") == Scalar{2.5});
  CHECK_THROWS_WITH_AS(jio::scalar_from_json(jio::Json("+inf"), "points[1][0]"),
                       doctest::Contains("points[1][0]"), jio::ParseError);
  CHECK_THROWS_AS(jio::scalar_from_json(jio::Json(nullptr), "x"), jio::ParseError);
}

TEST_CASE("parse errors name the offending field") {
  CHECK_THROWS_WITH_AS(jio::set_from_json(jio::parse(R"({"points": [[1, 2], [3]]})", "t")),
                       doctest::Contains("points[1]"), jio::ParseError);
  CHECK_THROWS_WITH_AS(jio::set_from_json(jio::parse(R"({"rays": []})", "t")), doctest::Contains("points"),
                       jio::ParseError);
  CHECK_THROWS_WITH_AS(jio::set_from_json(jio::parse(R"({"points": []})", "t")), doctest::Contains("points"),
                       jio::ParseError);
  CHECK_THROWS_WITH_AS(jio::cone_from_json(jio::parse(R"({"generators": []})", "t")),
                       doctest::Contains("generators"), jio::ParseError);
  CHECK_THROWS_WITH_AS(jio::halfspace_from_json(jio::parse(R"({"plus": {"coeffs": [0], "const": 0}})", "t")),
                       doctest::Contains("minus"), jio::ParseError);
  CHECK_THROWS_AS(jio::parse("{not json", "t"), jio::ParseError);
}

TEST_CASE("empty cone carries its dimension") {
  const maxplus::Cone c(3);
  const auto j = jio::to_json(c);
  CHECK(j.dump() == R"({"generators":[],"dim":3})");
  CHECK(jio::cone_from_json(j).dim() == 3);
}

TEST_CASE("emitted documents re-parse to equal values") {
  testing_support::Gen gen(19);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 4));
    const auto a = gen.convex_set(n, static_cast<std::size_t>(gen.uniform(1, 4)),
                                  static_cast<std::size_t>(gen.uniform(0, 3)), 0.2);
    const auto back = jio::set_from_json(jio::parse(jio::to_json(a).dump(), "round-trip"));
    CHECK(back.points() == a.points());
    CHECK(back.rays() == a.rays());

    const maxplus::Cone c = maxplus::extract_basis(maxplus::Cone(gen.matrix(n, 3, 0.2)));
    CHECK(jio::cone_from_json(jio::parse(jio::to_json(c).dump(), "rt")).generators() == c.generators());

    const maxplus::HalfSpace h(gen.vector(n, 0.3), gen.scalar(-5, 5, 0.5), gen.vector(n, 0.3),
                               gen.scalar(-5, 5, 0.5));
    const auto h2 = jio::halfspace_from_json(jio::parse(jio::to_json(h).dump(), "rt"));
    CHECK(h2.plus_coeffs == h.plus_coeffs);
    CHECK(h2.plus_const == h.plus_const);
    CHECK(h2.minus_coeffs == h.minus_coeffs);
    CHECK(h2.minus_const == h.minus_const);
  }
}
