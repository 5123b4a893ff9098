#pragma once

#include <cstddef>
#include <string>

#include "maxplus/convex_set.hpp"

namespace maxplus {

struct RenderOptions {
  /// Cells per axis of the membership sampling grid used for shading.
  std::size_t grid = 200;
  /// Padding (in coordinate units) around the finite generators.
  double padding = 2.0;
};

/// SVG 1.1 drawing of a set in R_max^2: sampled region, rays as arrows from
/// the first extreme point, generators as dots with extreme points
/// highlighted. Coordinates equal to -inf are drawn on labelled margin
/// bands. 1 unit = 40 px, y axis pointing up. Throws DimensionMismatch
/// unless dim() == 2.
std::string render_svg(const ConvexSet& a, const RenderOptions& opts = {});

}  // namespace maxplus
