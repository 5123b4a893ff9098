#include "maxplus/scalar.hpp"

#include <cmath>
#include <sstream>

namespace maxplus {

bool approx_equal(Scalar a, Scalar b, double tol) {
  if (a.is_zero() || b.is_zero()) return a == b;
  return std::fabs(a.value() - b.value()) <= tol;
}

std::string to_string(Scalar s) {
  if (s.is_zero()) return "-inf";
  std::ostringstream os;
  os << s.value();
  return os.str();
}

}  // namespace maxplus
