#pragma once

// Decorated rectangular tiles whose string height is fixed only when the tile
// attaches, and the growth process built on them.
//
// Each tile is a (1 + 2w) x tau rectangle carrying a three-segment string:
// alpha (length w, height y_L), beta (unit run, slope -1/tau for A, +1 for B)
// and gamma (length w, height y_R). Neighbours overlap over a width-w region
// where the left gamma must coincide with the right alpha.

#include "quasigrow/golden.hpp"
#include "quasigrow/words.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quasigrow {

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InvalidCovering : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Side { left, right };

struct TileGeometry {
  /// Overlap width; any positive value. Only affects rendering.
  GoldenNumber w;

  explicit TileGeometry(GoldenNumber overlap);
  /// w = 1/(2 tau), which makes the tile square.
  static TileGeometry square();

  GoldenNumber height() const { return golden::tau(); }
  GoldenNumber tile_width() const { return 1 + 2 * w; }
  GoldenNumber pitch() const { return 1 + w; }
};

/// Allowed alpha heights per letter. The standard set is A: [1/tau, tau),
/// B: [0, 1/tau); selftest swaps in perturbed sets to check it catches them.
struct DomainSet {
  GoldenInterval a_alpha;
  GoldenInterval b_alpha;

  static const DomainSet& standard();
  const GoldenInterval& alpha(Letter l) const { return l == Letter::A ? a_alpha : b_alpha; }
};

/// Vertical shift of the string across one tile: -1/tau for A, +1 for B.
const GoldenNumber& step_of(Letter l);

/// The full height range [0, tau).
const GoldenInterval& height_range();

class Decoration {
 public:
  /// Places the alpha segment at y_left and derives y_R. Throws OutOfRange if
  /// y_left is outside the letter's alpha domain.
  static Decoration make(Letter letter, GoldenNumber y_left);
  /// No domain check; for building deliberately broken coverings.
  static Decoration unchecked(Letter letter, GoldenNumber y_left);

  Letter letter() const { return letter_; }
  const GoldenNumber& y_left() const { return y_left_; }
  const GoldenNumber& y_right() const { return y_right_; }

  friend bool operator==(const Decoration&, const Decoration&) = default;

 private:
  Decoration(Letter letter, GoldenNumber y_left);

  Letter letter_;
  GoldenNumber y_left_;
  GoldenNumber y_right_;
};

class Covering {
 public:
  /// Checks decoration domains, gamma/alpha coincidence and the absence of BB.
  /// Throws InvalidCovering.
  Covering(std::vector<Decoration> tiles, std::size_t origin_index, TileGeometry geometry);

  static Covering blank(TileGeometry geometry = TileGeometry::square());
  static Covering unchecked(std::vector<Decoration> tiles, std::size_t origin_index,
                            TileGeometry geometry = TileGeometry::square());

  const std::vector<Decoration>& tiles() const { return tiles_; }
  std::size_t origin_index() const { return origin_index_; }
  const TileGeometry& geometry() const { return geometry_; }
  std::size_t size() const { return tiles_.size(); }
  bool empty() const { return tiles_.empty(); }

  Word letters() const;
  /// y_L of every tile, left to right.
  std::vector<GoldenNumber> left_heights() const;

 private:
  struct NoCheck {};
  Covering(NoCheck, std::vector<Decoration> tiles, std::size_t origin_index, TileGeometry geometry);

  std::vector<Decoration> tiles_;
  std::size_t origin_index_ = 0;
  TileGeometry geometry_;
};

/// A on [1/tau, tau), B on [0, 1/tau). Throws OutOfRange outside [0, tau).
Letter classify(const GoldenNumber& y, const DomainSet& domains = DomainSet::standard());

/// Attach on the right of a boundary gamma at height y: the new tile's alpha
/// must sit at y, which forces the letter. Returns (letter, new boundary).
std::pair<Letter, GoldenNumber> step_right(const GoldenNumber& y,
                                           const DomainSet& domains = DomainSet::standard());

/// Attach on the left of a boundary alpha at height y. A on [0, 1), B on [1, tau);
/// the exact inverse of step_right.
std::pair<Letter, GoldenNumber> step_left(const GoldenNumber& y,
                                          const DomainSet& domains = DomainSet::standard());

/// True iff a tile of the given letter can make its string coincide with the
/// boundary at height boundary_y on that side.
bool can_attach(const GoldenNumber& boundary_y, Letter candidate, Side side,
                const DomainSet& domains = DomainSet::standard());

/// Seed tile alpha at seed_y, then n_right attachments on the right and n_left
/// on the left. Throws OutOfRange for a seed outside [0, tau).
Covering grow(const GoldenNumber& seed_y, std::size_t n_right, std::size_t n_left,
              TileGeometry geometry = TileGeometry::square());

/// Letter-and-height stream for long runs, without storing tiles.
class Grower {
 public:
  /// Boundary starts at `start`; rightward streams yield letters left to right,
  /// leftward streams right to left.
  Grower(GoldenNumber start, Side side);

  std::pair<Letter, GoldenNumber> next();
  const GoldenNumber& boundary() const { return y_; }

 private:
  GoldenNumber y_;
  Side side_;
};

/// Letters of grow(seed_y, n_right, 0) without building the covering.
Word grow_letters(const GoldenNumber& seed_y, std::size_t n_right);

/// Set of seed heights in [0, tau) whose rightward growth spells w.
/// Empty word gives the full range [0, tau).
GoldenInterval feasible_interval(std::span<const Letter> w,
                                 const DomainSet& domains = DomainSet::standard());

/// Boundary heights reachable after spelling w from some feasible seed, i.e.
/// feasible_interval(w) shifted by the total step of w.
GoldenInterval boundary_interval(std::span<const Letter> w,
                                 const DomainSet& domains = DomainSet::standard());

/// Floating-point growth for seeds outside Q(tau).
struct ApproximateGrowth {
  Word letters;
  std::vector<double> heights;  // y_L per tile, left to right
  bool approximate = true;
};
ApproximateGrowth grow_approximate(double seed_y, std::size_t n_right, std::size_t n_left);

/// SVG 1.1 drawing of the covering: tiles, strings and letter labels.
/// Byte-stable for equal inputs.
std::string render_svg(const Covering& c);

}  // namespace quasigrow
