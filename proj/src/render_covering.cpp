#include "quasigrow/covering.hpp"

#include "svg_format.hpp"

#include <fmt/format.h>

namespace quasigrow {

namespace {

constexpr double kScale = 100.0;
constexpr double kMargin = 20.0;

const char* fill_of(Letter l) { return l == Letter::A ? "#8e44ad" : "#5dade2"; }

}  // namespace

std::string render_svg(const Covering& c) {
  using detail::coord;
  const TileGeometry& g = c.geometry();
  const double height = g.height().to_double();
  const double pitch = g.pitch().to_double();
  const double tile_w = g.tile_width().to_double();

  const double span = c.empty() ? 0.0 : pitch * static_cast<double>(c.size() - 1) + tile_w;
  const double canvas_w = 2 * kMargin + kScale * span;
  const double canvas_h = 2 * kMargin + kScale * height;
  const auto px = [&](double x) { return kMargin + kScale * x; };
  const auto py = [&](double y) { return kMargin + kScale * (height - y); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      coord(canvas_w), coord(canvas_h), coord(canvas_w), coord(canvas_h));

  for (std::size_t i = 0; i < c.size(); ++i) {
    const Decoration& t = c.tiles()[i];
    // Exact x positions so that neighbouring gamma/alpha spans print identically.
    const GoldenNumber gx0 = g.pitch() * GoldenNumber(static_cast<long long>(i));
    const double x0 = gx0.to_double();
    const double xa = (gx0 + g.w).to_double();
    const double xb = (gx0 + 1 + g.w).to_double();
    const double xc = (gx0 + 1 + 2 * g.w).to_double();
    const double yl = t.y_left().to_double();
    const double yr = t.y_right().to_double();
    out += fmt::format(
        "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" fill-opacity=\"0.15\" "
        "stroke=\"#333333\" stroke-width=\"1\"/>\n",
        coord(px(x0)), coord(py(height)), coord(kScale * tile_w), coord(kScale * height),
        fill_of(t.letter()));
    out += fmt::format(
        "  <polyline points=\"{},{} {},{} {},{} {},{}\" fill=\"none\" stroke=\"{}\" "
        "stroke-width=\"2\"/>\n",
        coord(px(x0)), coord(py(yl)), coord(px(xa)), coord(py(yl)), coord(px(xb)), coord(py(yr)),
        coord(px(xc)), coord(py(yr)), fill_of(t.letter()));
    out += fmt::format(
        "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"16\" "
        "text-anchor=\"middle\">{}</text>\n",
        coord(px(x0 + tile_w / 2)), coord(py(height) + 18), to_char(t.letter()));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace quasigrow
