#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings.
 *
 * Scalars are JSON numbers, with the zero element written as the string
 * "-inf". Vectors are arrays of scalars; generator lists are arrays of
 * vectors. Objects are emitted with a fixed key order.
 *
 *   cone:        {"generators": [[...], ...]}
 *   convex set:  {"points": [[...], ...], "rays": [[...], ...]}
 *   half-space:  {"plus": {"coeffs": [...], "const": c}, "minus": {...}}
 */

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "maxplus/cone.hpp"
#include "maxplus/convex_set.hpp"
#include "maxplus/halfspace.hpp"

namespace maxplus::json_io {

using Json = nlohmann::ordered_json;

/// Malformed or invalid input; what() names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(Scalar s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Cone& c);
Json to_json(const ConvexSet& a);
Json to_json(const HalfSpace& h);
Json to_json(const ConeDecomposition& d);
Json to_json(const SetDecomposition& d);

Scalar scalar_from_json(const Json& j, const std::string& field);
Vector vector_from_json(const Json& j, const std::string& field);
/// dim is required only when the array is empty.
Matrix matrix_from_json(const Json& j, const std::string& field, std::size_t dim = 0);
Cone cone_from_json(const Json& j);
ConvexSet set_from_json(const Json& j);
HalfSpace halfspace_from_json(const Json& j);

/// Parses text, mapping syntax errors to ParseError tagged with field.
Json parse(const std::string& text, const std::string& field);

}  // namespace maxplus::json_io
