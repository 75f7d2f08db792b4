#include "quasigrow/hyperlift.hpp"

#include "svg_format.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace quasigrow {

Staircase lift(std::span<const Letter> w) {
  Staircase s;
  s.word.assign(w.begin(), w.end());
  s.points.reserve(w.size() + 1);
  LatticePoint p;
  s.points.push_back(p);
  for (Letter l : w) {
    if (l == Letter::A) {
      ++p.x;
    } else {
      ++p.y;
    }
    s.points.push_back(p);
  }
  return s;
}

long double geometric_normalizer() { return 1.0L / std::sqrt(golden::tau_ld + 2.0L); }
long double cos_theta() { return golden::tau_ld * geometric_normalizer(); }
long double sin_theta() { return geometric_normalizer(); }

double PerpTrace::value(std::size_t i) const {
  const long double c = coeffs.at(i).to_long_double();
  return static_cast<double>(mode == PerpMode::geometric ? c * geometric_normalizer() : c);
}

namespace {

// Coefficients of the per-letter step: scaled (-1/tau, 1), geometric (-1, tau).
const GoldenNumber& coeff_step(Letter l, PerpMode mode) {
  static const GoldenNumber geo_a = -1;
  static const GoldenNumber geo_b = golden::tau();
  if (mode == PerpMode::scaled) return step_of(l);
  return l == Letter::A ? geo_a : geo_b;
}

}  // namespace

PerpTrace perp_trace(std::span<const Letter> w, const GoldenNumber& offset, PerpMode mode) {
  PerpTrace t;
  t.mode = mode;
  t.offset = offset;
  t.coeffs.reserve(w.size() + 1);
  // geometric = scaled * cos(theta) = scaled * tau / sqrt(tau + 2)
  GoldenNumber c = mode == PerpMode::scaled ? offset : offset * golden::tau();
  t.coeffs.push_back(c);
  for (Letter l : w) {
    c += coeff_step(l, mode);
    t.coeffs.push_back(c);
  }
  return t;
}

GoldenNumber strip_width(std::span<const Letter> w, PerpMode mode) {
  const PerpTrace t = perp_trace(w, 0, mode);
  const auto [lo, hi] = std::minmax_element(t.coeffs.begin(), t.coeffs.end());
  return *hi - *lo;
}

GoldenNumber strip_threshold(PerpMode mode) {
  return mode == PerpMode::scaled ? golden::tau() : golden::tau() * golden::tau();
}

bool strip_containable(std::span<const Letter> w) {
  return strip_width(w, PerpMode::scaled) < golden::tau();
}

StripReport strip_consistency(const Covering& c) {
  StripReport r;
  if (c.empty()) return r;
  const Word letters = c.letters();
  const PerpTrace t = perp_trace(letters, c.tiles().front().y_left(), PerpMode::scaled);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const GoldenNumber& expected =
        i < c.size() ? c.tiles()[i].y_left() : c.tiles().back().y_right();
    if (t.coeffs[i] != expected) {
      r.pass = false;
      r.first_violation = i;
      r.reason = "trace " + t.coeffs[i].to_string() + " != string height " + expected.to_string();
      return r;
    }
    if (!height_range().contains(t.coeffs[i])) {
      r.pass = false;
      r.first_violation = i;
      r.reason = "trace " + t.coeffs[i].to_string() + " leaves [0, tau)";
      return r;
    }
  }
  return r;
}

std::string render_lift_svg(std::span<const Letter> w, const GoldenNumber& offset) {
  using detail::coord;
  constexpr double kUnit = 40.0;
  constexpr double kMargin = 20.0;
  const Staircase s = lift(w);
  const LatticePoint end = s.points.back();
  const double inv_tau = golden::inv_tau().to_double();
  const double tau = golden::tau().to_double();
  const double off = offset.to_double();

  // Lattice window: one unit of slack around the staircase, tall enough for the band.
  const double x_min = -1.0;
  const double x_max = static_cast<double>(end.x) + 1.0;
  const double y_min = std::min(-1.0, x_min * inv_tau - off - 0.5);
  const double y_max = std::max(static_cast<double>(end.y) + 1.0, x_max * inv_tau - off + tau + 0.5);
  const double width = 2 * kMargin + kUnit * (x_max - x_min);
  const double height = 2 * kMargin + kUnit * (y_max - y_min);
  const auto px = [&](double x) { return kMargin + kUnit * (x - x_min); };
  const auto py = [&](double y) { return kMargin + kUnit * (y_max - y); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      coord(width), coord(height), coord(width), coord(height));

  // Scaled perpendicular coordinate of (x, y) is offset + y - x/tau; the band
  // keeps it in [0, tau).
  const auto band_y = [&](double x, double level) { return level - off + x * inv_tau; };
  out += fmt::format(
      "  <polygon points=\"{},{} {},{} {},{} {},{}\" fill=\"#f5b041\" fill-opacity=\"0.3\" "
      "stroke=\"none\"/>\n",
      coord(px(x_min)), coord(py(band_y(x_min, 0))), coord(px(x_max)), coord(py(band_y(x_max, 0))),
      coord(px(x_max)), coord(py(band_y(x_max, tau))), coord(px(x_min)),
      coord(py(band_y(x_min, tau))));

  for (auto x = static_cast<long long>(std::ceil(x_min)); x <= static_cast<long long>(x_max); ++x) {
    out += fmt::format(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n",
        coord(px(static_cast<double>(x))), coord(py(y_min)), coord(px(static_cast<double>(x))),
        coord(py(y_max)));
  }
  for (auto y = static_cast<long long>(std::ceil(y_min)); y <= static_cast<long long>(std::floor(y_max));
       ++y) {
    out += fmt::format(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n",
        coord(px(x_min)), coord(py(static_cast<double>(y))), coord(px(x_max)),
        coord(py(static_cast<double>(y))));
  }

  std::string pts;
  for (const LatticePoint& p : s.points) {
    if (!pts.empty()) pts += ' ';
    pts += coord(px(static_cast<double>(p.x))) + "," + coord(py(static_cast<double>(p.y)));
  }
  out += fmt::format(
      "  <polyline points=\"{}\" fill=\"none\" stroke=\"#1b2631\" stroke-width=\"3\"/>\n", pts);
  out += "</svg>\n";
  return out;
}

}  // namespace quasigrow
