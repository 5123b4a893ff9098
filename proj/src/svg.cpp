#include "maxplus/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

constexpr double kUnit = 40.0;
constexpr double kMargin = 20.0;
constexpr double kBand = 30.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  double xmin, xmax, ymin, ymax;
  double width() const { return kBand + 2 * kMargin + (xmax - xmin) * kUnit; }
  double height() const { return kBand + 2 * kMargin + (ymax - ymin) * kUnit; }
  double px(Scalar x) const { return x.is_zero() ? kBand / 2 : kBand + kMargin + (x.value() - xmin) * kUnit; }
  double py(Scalar y) const { return y.is_zero() ? height() - kBand / 2 : kMargin + (ymax - y.value()) * kUnit; }
};

Frame make_frame(const ConvexSet& a, double pad) {
  std::vector<double> xs, ys;
  for (const Vector& p : a.points()) {
    if (p[0].is_finite()) xs.push_back(p[0].value());
    if (p[1].is_finite()) ys.push_back(p[1].value());
  }
  if (xs.empty()) xs.push_back(0.0);
  if (ys.empty()) ys.push_back(0.0);
  auto [x0, x1] = std::minmax_element(xs.begin(), xs.end());
  auto [y0, y1] = std::minmax_element(ys.begin(), ys.end());
  return {*x0 - pad, *x1 + pad, *y0 - pad, *y1 + pad};
}

// Tropical ray base (+) lambda (x) dir, sampled at its breakpoints until it
// leaves the frame.
std::vector<Vector> ray_path(const Vector& base, const Vector& dir, const Frame& f) {
  std::vector<double> lambdas;
  double reach = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    if (dir[i].is_zero()) continue;
    if (base[i].is_finite()) lambdas.push_back(base[i].value() - dir[i].value());
    const double edge = i == 0 ? f.xmax : f.ymax;
    reach = std::max(reach, edge - dir[i].value());
  }
  double start = lambdas.empty() ? reach : *std::min_element(lambdas.begin(), lambdas.end());
  lambdas.push_back(std::max(reach, start));
  std::sort(lambdas.begin(), lambdas.end());
  std::vector<Vector> path{base};
  for (double l : lambdas) {
    Vector q = add(base, scale(Scalar{l}, dir));
    if (q != path.back()) path.push_back(std::move(q));
  }
  return path;
}

}  // namespace

std::string render_svg(const ConvexSet& a, const RenderOptions& opts) {
  if (a.dim() != 2) throw DimensionMismatch("render_svg", 2, a.dim());
  const Frame f = make_frame(a, opts.padding);
  const std::size_t n = std::max<std::size_t>(opts.grid, 1);
  const auto ext = extreme_points(a);
  const Cone rec = recession(a);
  const Cone lifted = homogenize(a);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(f.width())
     << "\" height=\"" << fmt(f.height()) << "\" viewBox=\"0 0 " << fmt(f.width()) << ' '
     << fmt(f.height()) << "\">\n"
     << "<defs><marker id=\"arrow\" markerWidth=\"10\" markerHeight=\"10\" refX=\"8\" refY=\"3\" "
        "orient=\"auto\"><path d=\"M0,0 L8,3 L0,6 z\" fill=\"#333333\"/></marker></defs>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << fmt(f.width()) << "\" height=\"" << fmt(f.height())
     << "\" fill=\"#ffffff\"/>\n";

  // -inf bands.
  os << "<rect x=\"0\" y=\"0\" width=\"" << fmt(kBand) << "\" height=\"" << fmt(f.height())
     << "\" fill=\"#eeeeee\"/>\n"
     << "<rect x=\"0\" y=\"" << fmt(f.height() - kBand) << "\" width=\"" << fmt(f.width())
     << "\" height=\"" << fmt(kBand) << "\" fill=\"#eeeeee\"/>\n";

  // Sampled region, one rect per horizontal run of member cells.
  const double cw = (f.xmax - f.xmin) / static_cast<double>(n);
  const double ch = (f.ymax - f.ymin) / static_cast<double>(n);
  os << "<g fill=\"#b0c4de\" stroke=\"none\">\n";
  for (std::size_t row = 0; row < n; ++row) {
    const double y = f.ymax - (static_cast<double>(row) + 0.5) * ch;
    std::size_t col = 0;
    while (col < n) {
      auto inside = [&](std::size_t c) {
        const double x = f.xmin + (static_cast<double>(c) + 0.5) * cw;
        return member(lifted, Vector{x, y, 0.0});
      };
      if (!inside(col)) {
        ++col;
        continue;
      }
      std::size_t end = col + 1;
      while (end < n && inside(end)) ++end;
      os << "<rect x=\"" << fmt(f.px(f.xmin + static_cast<double>(col) * cw)) << "\" y=\""
         << fmt(f.py(f.ymax - static_cast<double>(row) * ch)) << "\" width=\""
         << fmt(static_cast<double>(end - col) * cw * kUnit) << "\" height=\"" << fmt(ch * kUnit)
         << "\"/>\n";
      col = end;
    }
  }
  os << "</g>\n";

  // Origin cross.
  if (f.xmin <= 0 && 0 <= f.xmax && f.ymin <= 0 && 0 <= f.ymax) {
    const double ox = f.px(0.0), oy = f.py(0.0);
    os << "<g stroke=\"#888888\" stroke-width=\"1\">"
       << "<line x1=\"" << fmt(ox - 6) << "\" y1=\"" << fmt(oy) << "\" x2=\"" << fmt(ox + 6) << "\" y2=\""
       << fmt(oy) << "\"/>"
       << "<line x1=\"" << fmt(ox) << "\" y1=\"" << fmt(oy - 6) << "\" x2=\"" << fmt(ox) << "\" y2=\""
       << fmt(oy + 6) << "\"/></g>\n";
  }

  // Rays.
  if (!ext.empty()) {
    os << "<g fill=\"none\" stroke=\"#333333\" stroke-width=\"1.5\">\n";
    for (const Vector& r : rec.generators()) {
      const auto path = ray_path(ext.front(), r, f);
      os << "<polyline marker-end=\"url(#arrow)\" points=\"";
      for (std::size_t i = 0; i < path.size(); ++i)
        os << (i ? " " : "") << fmt(f.px(path[i][0])) << ',' << fmt(f.py(path[i][1]));
      os << "\"/>\n";
    }
    os << "</g>\n";
  }

  // Generators, extreme points on top.
  auto dot = [&](const Vector& p, const char* fill, double radius) {
    os << "<circle cx=\"" << fmt(f.px(p[0])) << "\" cy=\"" << fmt(f.py(p[1])) << "\" r=\""
       << fmt(radius) << "\" fill=\"" << fill << "\"/>\n";
    if (p[0].is_zero() || p[1].is_zero())
      os << "<text x=\"" << fmt(f.px(p[0]) + 6) << "\" y=\"" << fmt(f.py(p[1]) - 6)
         << "\" font-size=\"10\">" << to_string(p) << "</text>\n";
  };
  for (const Vector& p : a.points()) dot(p, "#555555", 3.0);
  for (const Vector& p : ext) dot(p, "#c0392b", 5.0);

  os << "</svg>\n";
  return os.str();
}

}  // namespace maxplus
