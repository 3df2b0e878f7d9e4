#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "suppcurve/support_series.hpp"

namespace suppcurve {

enum class Layer { boundary, pedal, evolute, parallel };

std::string_view to_string(Layer layer);
/// Throws std::invalid_argument on an unknown name.
Layer layer_from_string(std::string_view name);

struct StrokeStyle {
  std::string color = "#000000";
  double width = 1.5;
  std::string dash;  // empty for a solid line
};

struct RenderSpec {
  std::vector<Layer> layers{Layer::boundary, Layer::parallel, Layer::evolute};
  /// Interior parallel distance; nullopt means L / 2pi of the curve.
  std::optional<double> parallel_distance;
  int samples_per_curve = 1024;
  std::map<Layer, StrokeStyle> styles = default_styles();

  static std::map<Layer, StrokeStyle> default_styles();
};

/// Point samples of one layer at phi_k = 2 pi k / samples.
std::vector<PlanePoint> layer_points(const FourierSupport& p, Layer layer, const RenderSpec& spec);

/**
 * SVG 1.1 document with one closed path per layer (y axis pointing up). A
 * layer whose points all coincide is drawn as a dot. The view box is the
 * bounding box of every layer padded by 5 %.
 */
std::string render_svg(const FourierSupport& p, const RenderSpec& spec);

}  // namespace suppcurve
