#include "maxplus/json_io.hpp"

#include <cmath>
#include <cstdint>

namespace maxplus::json_io {

Json to_json(Scalar s) {
  if (s.is_zero()) return "-inf";
  const double v = s.value();
  if (std::nearbyint(v) == v && std::fabs(v) < 9.0e15) return static_cast<std::int64_t>(v);
  return v;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Scalar s : v) out.push_back(to_json(s));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (const Vector& c : m) out.push_back(to_json(c));
  return out;
}

Json to_json(const Cone& c) {
  Json out;
  out["generators"] = to_json(c.generators());
  if (c.generators().empty()) out["dim"] = c.dim();
  return out;
}

Json to_json(const ConvexSet& a) {
  Json out;
  out["points"] = to_json(a.points());
  out["rays"] = to_json(a.rays());
  return out;
}

Json to_json(const HalfSpace& h) {
  Json out;
  out["plus"]["coeffs"] = to_json(h.plus_coeffs);
  out["plus"]["const"] = to_json(h.plus_const);
  out["minus"]["coeffs"] = to_json(h.minus_coeffs);
  out["minus"]["const"] = to_json(h.minus_const);
  return out;
}

namespace {

Json terms_json(const std::vector<Term>& terms, const Matrix& gens) {
  Json out = Json::array();
  for (const Term& t : terms) {
    Json e;
    e["index"] = t.index;
    e["coeff"] = to_json(t.coeff);
    e["vector"] = to_json(gens.column(t.index));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Json to_json(const ConeDecomposition& d) {
  Json out;
  out["target"] = to_json(d.target);
  out["terms"] = terms_json(d.terms, d.generators);
  out["basis"] = to_json(d.generators);
  return out;
}

Json to_json(const SetDecomposition& d) {
  Json out;
  out["target"] = to_json(d.target);
  out["point_terms"] = terms_json(d.point_terms, d.points);
  out["ray_terms"] = terms_json(d.ray_terms, d.rays);
  out["extreme_points"] = to_json(d.points);
  out["recession_basis"] = to_json(d.rays);
  return out;
}

Scalar scalar_from_json(const Json& j, const std::string& field) {
  if (j.is_number()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(field + ": scalar must be finite or \"-inf\"");
    return Scalar{v};
  }
  if (j.is_string() && j.get<std::string>() == "-inf") return Scalar::zero();
  throw ParseError(field + ": expected a number or \"-inf\", got " + j.dump());
}

Vector vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array of scalars");
  if (j.empty()) throw ParseError(field + ": vector must have at least one coordinate");
  std::vector<Scalar> coords;
  for (std::size_t i = 0; i < j.size(); ++i)
    coords.push_back(scalar_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return Vector(std::move(coords));
}

Matrix matrix_from_json(const Json& j, const std::string& field, std::size_t dim) {
  if (!j.is_array()) throw ParseError(field + ": expected an array of vectors");
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string name = field + "[" + std::to_string(k) + "]";
    cols.push_back(vector_from_json(j[k], name));
    if (dim == 0) dim = cols.back().dim();
    if (cols.back().dim() != dim)
      throw ParseError(name + ": expected " + std::to_string(dim) + " coordinates, got " +
                       std::to_string(cols.back().dim()));
  }
  if (dim == 0) throw ParseError(field + ": cannot infer the dimension of an empty list");
  return Matrix(dim, std::move(cols));
}

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::size_t optional_dim(const Json& j) {
  auto it = j.find("dim");
  if (it == j.end()) return 0;
  if (!it->is_number_unsigned() || it->get<std::size_t>() == 0)
    throw ParseError("dim: expected a positive integer");
  return it->get<std::size_t>();
}

}  // namespace

Cone cone_from_json(const Json& j) {
  const Json& gens = require(j, "generators", "cone");
  return Cone(matrix_from_json(gens, "generators", optional_dim(j)));
}

ConvexSet set_from_json(const Json& j) {
  const Json& pts = require(j, "points", "set");
  if (!pts.is_array() || pts.empty()) throw ParseError("points: a convex set needs at least one point");
  Matrix points = matrix_from_json(pts, "points", optional_dim(j));
  Matrix rays(points.dim());
  if (auto it = j.find("rays"); it != j.end()) rays = matrix_from_json(*it, "rays", points.dim());
  return ConvexSet(std::move(points), std::move(rays));
}

HalfSpace halfspace_from_json(const Json& j) {
  const Json& plus = require(j, "plus", "halfspace");
  const Json& minus = require(j, "minus", "halfspace");
  Vector pc = vector_from_json(require(plus, "coeffs", "plus"), "plus.coeffs");
  Vector mc = vector_from_json(require(minus, "coeffs", "minus"), "minus.coeffs");
  if (pc.dim() != mc.dim())
    throw ParseError("minus.coeffs: expected " + std::to_string(pc.dim()) + " coordinates, got " +
                     std::to_string(mc.dim()));
  return HalfSpace(std::move(pc), scalar_from_json(require(plus, "const", "plus"), "plus.const"),
                   std::move(mc), scalar_from_json(require(minus, "const", "minus"), "minus.const"));
}

Json parse(const std::string& text, const std::string& field) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(field + ": invalid JSON (" + e.what() + ")");
  }
}

}  // namespace maxplus::json_io
