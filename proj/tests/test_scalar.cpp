#include <doctest.h>

#include "maxplus/scalar.hpp"
#include "random_instances.hpp"

using maxplus::add;
using maxplus::mul;
using maxplus::residual;
using maxplus::Residual;
using maxplus::Scalar;

namespace {
const Scalar kZero = Scalar::zero();
}

TEST_CASE("add is max with -inf neutral") {
  CHECK(add(3, 5) == Scalar{5});
  CHECK(add(kZero, kZero) == kZero);
  CHECK(add(-2, -2) == Scalar{-2});
  CHECK(add(kZero, -100) == Scalar{-100});
}

TEST_CASE("mul is + with -inf absorbing") {
  CHECK(mul(3, 5) == Scalar{8});
  CHECK(mul(kZero, 7) == kZero);
  CHECK(mul(7, kZero) == kZero);
  CHECK(mul(Scalar::one(), -4) == Scalar{-4});
}

TEST_CASE("residual") {
  CHECK(residual(5, 3) == Residual{Scalar{2}});
  CHECK(residual(5, kZero).is_top());
  CHECK(residual(kZero, 3) == Residual{});
  CHECK(residual(kZero, kZero).is_top());
}

TEST_CASE("ordering puts -inf below every finite value") {
  CHECK(kZero < Scalar{-1e300});
  CHECK(Residual{} < Residual{Scalar{-7}});
  CHECK(Residual{Scalar{1e300}} < Residual::top());
}

TEST_CASE("+inf does not convert back into the semiring") {
  CHECK_THROWS_AS(Residual::top().to_scalar(), std::domain_error);
  CHECK(Residual{Scalar{4}}.to_scalar() == Scalar{4});
  CHECK(Residual{}.to_scalar() == kZero);
  CHECK_THROWS_AS(kZero.value(), std::domain_error);
}

TEST_CASE("approx_equal treats -inf as isolated") {
  CHECK(maxplus::approx_equal(1.0, 1.05, 0.1));
  CHECK_FALSE(maxplus::approx_equal(1.0, 1.05, 0.0));
  CHECK_FALSE(maxplus::approx_equal(kZero, -1e300, 1e300));
  CHECK(maxplus::approx_equal(kZero, kZero, 0.0));
}

TEST_CASE("semiring laws on random triples") {
  testing_support::Gen gen(11);
  for (int t = 0; t < 2000; ++t) {
    Scalar a = gen.scalar(-5, 5, 0.2), b = gen.scalar(-5, 5, 0.2), c = gen.scalar(-5, 5, 0.2);
    CHECK(add(a, a) == a);
    CHECK(add(a, b) == add(b, a));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK((a <= b) == (add(a, b) == b));
    if (a <= b) {
      CHECK(add(a, c) <= add(b, c));
      CHECK(mul(a, c) <= mul(b, c));
    }
    if (a.is_finite()) {
      // Galois connection: lambda (x) a <= b  <=>  lambda <= b / a.
      CHECK((mul(c, a) <= b) == (Residual{c} <= residual(b, a)));
    }
  }
}
