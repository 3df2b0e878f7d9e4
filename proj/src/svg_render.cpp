#include "suppcurve/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "suppcurve/curve_geometry.hpp"
#include "suppcurve/functionals.hpp"

namespace suppcurve {

namespace {

std::string coord(double v) {
  // Avoid "-0" in the output.
  if (v == 0.0) v = 0.0;
  return fmt::format("{:.9g}", v);
}

bool all_coincide(const std::vector<PlanePoint>& pts, double scale) {
  const double eps = 1e-12 * (1.0 + scale);
  return std::all_of(pts.begin(), pts.end(), [&](const PlanePoint& q) {
    return std::hypot(q.x - pts.front().x, q.y - pts.front().y) <= eps;
  });
}

}  // namespace

std::string_view to_string(Layer layer) {
  switch (layer) {
    case Layer::boundary:
      return "boundary";
    case Layer::pedal:
      return "pedal";
    case Layer::evolute:
      return "evolute";
    case Layer::parallel:
      return "parallel";
  }
  return "boundary";
}

Layer layer_from_string(std::string_view name) {
  for (Layer l : {Layer::boundary, Layer::pedal, Layer::evolute, Layer::parallel}) {
    if (to_string(l) == name) return l;
  }
  throw std::invalid_argument(fmt::format("unknown layer '{}'", name));
}

std::map<Layer, StrokeStyle> RenderSpec::default_styles() {
  return {
      {Layer::boundary, {"#1f3b73", 1.8, ""}},
      {Layer::pedal, {"#2e7d32", 1.2, "6 3"}},
      {Layer::evolute, {"#b71c1c", 1.2, ""}},
      {Layer::parallel, {"#6a1b9a", 1.2, "4 2"}},
  };
}

std::vector<PlanePoint> layer_points(const FourierSupport& p, Layer layer, const RenderSpec& spec) {
  if (spec.samples_per_curve < 16) throw std::invalid_argument("render: samples_per_curve must be >= 16");
  FourierSupport source = p;
  if (layer == Layer::evolute) source = evolute_support(p);
  if (layer == Layer::parallel) {
    const double r = spec.parallel_distance.value_or(length(p) / (2.0 * std::numbers::pi));
    source = parallel_support(p, r);
  }
  std::vector<PlanePoint> pts;
  pts.reserve(static_cast<std::size_t>(spec.samples_per_curve));
  for (int k = 0; k < spec.samples_per_curve; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / spec.samples_per_curve;
    pts.push_back(layer == Layer::pedal ? pedal_point(source, phi) : boundary_point(source, phi));
  }
  return pts;
}

std::string render_svg(const FourierSupport& p, const RenderSpec& spec) {
  if (spec.layers.empty()) throw std::invalid_argument("render: no layers requested");

  std::vector<std::vector<PlanePoint>> layers;
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (Layer l : spec.layers) {
    layers.push_back(layer_points(p, l, spec));
    for (const PlanePoint& q : layers.back()) {
      min_x = std::min(min_x, q.x);
      max_x = std::max(max_x, q.x);
      min_y = std::min(min_y, q.y);
      max_y = std::max(max_y, q.y);
    }
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double pad_x = extent > 0.0 ? 0.05 * (max_x - min_x) : 1.0;
  const double pad_y = extent > 0.0 ? 0.05 * (max_y - min_y) : 1.0;
  const double vx = min_x - pad_x;
  const double vy = -(max_y + pad_y);  // flipped
  const double vw = std::max(max_x - min_x + 2.0 * pad_x, 1e-9);
  const double vh = std::max(max_y - min_y + 2.0 * pad_y, 1e-9);

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
      "viewBox=\"{} {} {} {}\" preserveAspectRatio=\"xMidYMid meet\">\n",
      coord(vx), coord(vy), coord(vw), coord(vh));

  for (std::size_t i = 0; i < layers.size(); ++i) {
    const Layer l = spec.layers[i];
    const auto style_it = spec.styles.find(l);
    const StrokeStyle style = style_it != spec.styles.end() ? style_it->second : StrokeStyle{};
    const std::vector<PlanePoint>& pts = layers[i];
    if (all_coincide(pts, extent)) {
      const double r = 0.01 * std::max(vw, vh);
      out += fmt::format("  <circle data-layer=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n", to_string(l),
                         coord(pts.front().x), coord(-pts.front().y), coord(r), style.color);
      continue;
    }
    std::string d = fmt::format("M{},{}", coord(pts.front().x), coord(-pts.front().y));
    for (std::size_t k = 1; k < pts.size(); ++k) d += fmt::format(" L{},{}", coord(pts[k].x), coord(-pts[k].y));
    d += " Z";
    out += fmt::format(
        "  <path data-layer=\"{}\" d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"{} "
        "vector-effect=\"non-scaling-stroke\" stroke-linejoin=\"round\"/>\n",
        to_string(l), d, style.color, coord(style.width),
        style.dash.empty() ? "" : fmt::format(" stroke-dasharray=\"{}\"", style.dash));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace suppcurve
