#pragma once

// Lift of a word to a staircase on the square lattice and its perpendicular
// coordinates. A is an x-edge, B a y-edge; the physical line has slope
// tan(theta) = 1/tau, so along the perpendicular direction A moves by
// -sin(theta) and B by +cos(theta).

#include "quasigrow/covering.hpp"
#include "quasigrow/golden.hpp"
#include "quasigrow/words.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quasigrow {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct Staircase {
  std::vector<LatticePoint> points;
  Word word;
};

Staircase lift(std::span<const Letter> w);

enum class PerpMode {
  /// Unit lattice: steps -sin(theta), +cos(theta).
  geometric,
  /// Divided by cos(theta): steps -1/tau, +1, matching the string heights.
  scaled,
};

/// Perpendicular coordinates of the staircase vertices.
///
/// Every geometric coordinate is an element of Q(tau) times 1/sqrt(tau + 2),
/// since sin(theta) = 1/sqrt(tau + 2) and cos(theta) = tau/sqrt(tau + 2). The
/// trace stores that exact coefficient; scaled coordinates carry no factor.
/// The offset is always given in scaled units, so that
/// scaled = geometric / cos(theta) holds pointwise, offset included.
struct PerpTrace {
  PerpMode mode = PerpMode::scaled;
  GoldenNumber offset;
  std::vector<GoldenNumber> coeffs;

  std::size_t size() const { return coeffs.size(); }
  /// Numeric value of coordinate i, with the normalizer applied.
  double value(std::size_t i) const;
};

/// 1/sqrt(tau + 2), the common factor of geometric coordinates.
long double geometric_normalizer();
/// tan(theta) = 1/tau, as (cos, sin) in long double.
long double cos_theta();
long double sin_theta();

PerpTrace perp_trace(std::span<const Letter> w, const GoldenNumber& offset,
                     PerpMode mode = PerpMode::scaled);

/// sup - inf of the trace coordinates, as an exact coefficient in the mode's
/// units (geometric results are times 1/sqrt(tau + 2)).
GoldenNumber strip_width(std::span<const Letter> w, PerpMode mode = PerpMode::scaled);

/// Strip width bound: tau in scaled units, cos(theta) + sin(theta) in
/// geometric units (coefficient tau^2). Containment is strict.
GoldenNumber strip_threshold(PerpMode mode);

/// Some offset puts every coordinate in [offset, offset + tau).
bool strip_containable(std::span<const Letter> w);

struct StripReport {
  bool pass = true;
  /// First trace index where the check failed.
  std::optional<std::size_t> first_violation;
  std::string reason;
};

/// Checks that the scaled trace started at the leftmost tile's y_L reproduces
/// every y_L and the final y_R, and that it never leaves [0, tau).
StripReport strip_consistency(const Covering& c);

/// Staircase with the strip [offset, offset + tau) drawn as a band.
std::string render_lift_svg(std::span<const Letter> w, const GoldenNumber& offset);

}  // namespace quasigrow
