#pragma once

#include <string>

#include "lombardi/drawing.hpp"

namespace lombardi {

struct RenderOptions {
  double width = 800.0;
  double height = 800.0;
  double margin = 40.0;
  double stroke_width = 1.5;
  double vertex_radius = 4.0;
  bool labels = false;
  bool color_by_factor = true;
};

/// Drawing coordinates to canvas pixels: uniform scale, y axis flipped.
struct CanvasTransform {
  double scale = 1.0;
  double offset_x = 0.0;
  double offset_y = 0.0;
  double height = 0.0;

  Point apply(Point p) const {
    return {offset_x + scale * p.x, height - (offset_y + scale * p.y)};
  }
};

/// Fits every vertex and arc into the canvas minus margins. Throws ParseError
/// for non-positive dimensions or margins that leave no room.
CanvasTransform fit_canvas(const Drawing& d, const RenderOptions& o);

/// One path element per edge (an elliptical-arc command with equal radii, or
/// a line for segments) and one circle per vertex.
std::string to_svg(const Drawing& d, const RenderOptions& o = {});

}  // namespace lombardi
