#pragma once

// Deterministic SVG 1.1 drawings of 2D tropical polygons.

#include "tropical/hull2d.hpp"

#include <optional>
#include <span>
#include <string>

namespace tropical {

struct SvgOptions {
  bool arrangement = false;     ///< horizontal, vertical and slope-one lines through the vertices
  bool pseudovertices = false;  ///< white markers
  std::optional<Halfspace<Rat>> shade;  ///< sectors of this halfspace, clipped to the view
  double width = 480;
};

/// Hull region, facet polylines and input points. The view is the bounding
/// box plus a 10% margin, y pointing up. Elements carry the classes hull,
/// facet, point, pseudovertex, arrangement and sector.
std::string render_svg(const HullResult<Rat>& hull, std::span<const AffinePoint2<Rat>> points,
                       const SvgOptions& options = {});

}  // namespace tropical
