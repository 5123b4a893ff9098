#pragma once

/**
 * @file scalar.hpp
 * @brief Max-plus scalars and their residuals.
 *
 * The max-plus semiring R_max is R u {-inf} with
 *
 *   a (+) b = max(a, b)      zero = -inf
 *   a (x) b = a + b          one  = 0
 *
 * -inf is stored as an explicit tag, never as an IEEE infinity, so that
 * (-inf) (x) b = -inf holds structurally and no NaN can arise. Residuals
 * (greatest solutions of lambda (x) a <= b) additionally need a top element
 * +inf; they get their own type so that +inf never leaks into a vector.
 */

#include <compare>
#include <stdexcept>
#include <string>

namespace maxplus {

class Scalar {
 public:
  /// The semiring zero (-inf).
  constexpr Scalar() = default;

  static constexpr Scalar zero() { return Scalar{}; }
  static constexpr Scalar one() { return Scalar{0.0}; }

  // Implicit so that integer literals read naturally in vectors: {5, 2}.
  constexpr Scalar(double v) : finite_(true), value_(v) {}  // NOLINT

  constexpr bool is_zero() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }

  /// Finite value; throws std::domain_error on the zero element.
  constexpr double value() const {
    if (!finite_) throw std::domain_error("max-plus zero (-inf) has no finite value");
    return value_;
  }

  constexpr std::strong_ordering operator<=>(const Scalar& o) const {
    if (!finite_ || !o.finite_) return finite_ <=> o.finite_;
    if (value_ < o.value_) return std::strong_ordering::less;
    if (value_ > o.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  constexpr bool operator==(const Scalar& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }

 private:
  bool finite_ = false;
  double value_ = 0.0;
};

/// a (+) b = max(a, b).
constexpr Scalar add(Scalar a, Scalar b) { return a < b ? b : a; }

/// a (x) b = a + b, with -inf absorbing.
constexpr Scalar mul(Scalar a, Scalar b) {
  if (a.is_zero() || b.is_zero()) return Scalar::zero();
  return Scalar{a.value() + b.value()};
}

/// Element of R u {-inf, +inf}. Only produced by residuation.
class Residual {
 public:
  enum class Kind { neg_inf, finite, pos_inf };

  constexpr Residual() = default;  // -inf
  constexpr Residual(Scalar s)     // NOLINT
      : kind_(s.is_zero() ? Kind::neg_inf : Kind::finite), value_(s.is_zero() ? 0.0 : s.value()) {}

  static constexpr Residual top() {
    Residual r;
    r.kind_ = Kind::pos_inf;
    return r;
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_top() const { return kind_ == Kind::pos_inf; }

  /// Converts back into the semiring; +inf is rejected.
  constexpr Scalar to_scalar() const {
    switch (kind_) {
      case Kind::neg_inf: return Scalar::zero();
      case Kind::finite: return Scalar{value_};
      case Kind::pos_inf: break;
    }
    throw std::domain_error("residual +inf is not a max-plus scalar");
  }

  constexpr std::strong_ordering operator<=>(const Residual& o) const {
    if (kind_ != o.kind_) return static_cast<int>(kind_) <=> static_cast<int>(o.kind_);
    if (kind_ != Kind::finite) return std::strong_ordering::equal;
    if (value_ < o.value_) return std::strong_ordering::less;
    if (value_ > o.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  constexpr bool operator==(const Residual& o) const {
    return kind_ == o.kind_ && (kind_ != Kind::finite || value_ == o.value_);
  }

 private:
  Kind kind_ = Kind::neg_inf;
  double value_ = 0.0;
};

/// Greatest lambda in R u {-inf, +inf} with lambda (x) a <= b.
constexpr Residual residual(Scalar b, Scalar a) {
  if (a.is_zero()) return Residual::top();
  if (b.is_zero()) return Residual{};
  return Residual{Scalar{b.value() - a.value()}};
}

/// |a - b| <= tol, with -inf only close to itself. tol = 0 is exact equality.
bool approx_equal(Scalar a, Scalar b, double tol);

std::string to_string(Scalar s);

}  // namespace maxplus
