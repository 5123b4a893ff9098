#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "maxplus/scalar.hpp"

namespace maxplus {

/// Operands live in different ambient dimensions.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(const std::string& where, std::size_t expected, std::size_t got)
      : std::invalid_argument(where + ": expected dimension " + std::to_string(expected) +
                              ", got " + std::to_string(got)) {}
};

/// A decomposition or extremality query was made for a vector outside the
/// set. Carries the canonical projection, which certifies non-membership
/// (it differs from the query in at least one coordinate).
class NotMember : public std::domain_error {
 public:
  NotMember(const std::string& what, std::vector<Scalar> projection)
      : std::domain_error(what), projection_(std::move(projection)) {}

  const std::vector<Scalar>& projection() const { return projection_; }

 private:
  std::vector<Scalar> projection_;
};

}  // namespace maxplus
