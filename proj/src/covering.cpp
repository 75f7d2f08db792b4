#include "quasigrow/covering.hpp"

#include <algorithm>

namespace quasigrow {

TileGeometry::TileGeometry(GoldenNumber overlap) : w(std::move(overlap)) {
  if (w.sign() != Sign::positive) throw std::invalid_argument("TileGeometry: w must be positive");
}

TileGeometry TileGeometry::square() {
  // 1 + 2w = tau  <=>  w = (tau - 1)/2 = 1/(2 tau)
  return TileGeometry(GoldenNumber::from_parts(-1, 1, 2));
}

const DomainSet& DomainSet::standard() {
  static const DomainSet d{GoldenInterval::half_open(golden::inv_tau(), golden::tau()),
                           GoldenInterval::half_open(0, golden::inv_tau())};
  return d;
}

const GoldenNumber& step_of(Letter l) {
  static const GoldenNumber a = -golden::inv_tau();
  static const GoldenNumber b = 1;
  return l == Letter::A ? a : b;
}

const GoldenInterval& height_range() {
  static const GoldenInterval r = GoldenInterval::half_open(0, golden::tau());
  return r;
}

Decoration::Decoration(Letter letter, GoldenNumber y_left)
    : letter_(letter), y_left_(std::move(y_left)), y_right_(y_left_ + step_of(letter)) {}

Decoration Decoration::make(Letter letter, GoldenNumber y_left) {
  if (!DomainSet::standard().alpha(letter).contains(y_left)) {
    throw OutOfRange(std::string("decoration: y_L = ") + y_left.to_string() +
                     " outside the alpha domain of " + to_char(letter));
  }
  return {letter, std::move(y_left)};
}

Decoration Decoration::unchecked(Letter letter, GoldenNumber y_left) {
  return {letter, std::move(y_left)};
}

Covering::Covering(NoCheck, std::vector<Decoration> tiles, std::size_t origin_index,
                   TileGeometry geometry)
    : tiles_(std::move(tiles)), origin_index_(origin_index), geometry_(std::move(geometry)) {}

Covering::Covering(std::vector<Decoration> tiles, std::size_t origin_index, TileGeometry geometry)
    : Covering(NoCheck{}, std::move(tiles), origin_index, std::move(geometry)) {
  if (!tiles_.empty() && origin_index_ >= tiles_.size()) {
    throw InvalidCovering("covering: origin index past the end");
  }
  const DomainSet& d = DomainSet::standard();
  for (std::size_t i = 0; i < tiles_.size(); ++i) {
    const Decoration& t = tiles_[i];
    if (!d.alpha(t.letter()).contains(t.y_left()) ||
        t.y_right() != t.y_left() + step_of(t.letter())) {
      throw InvalidCovering("covering: tile " + std::to_string(i) + " has an invalid decoration");
    }
    if (i == 0) continue;
    const Decoration& prev = tiles_[i - 1];
    if (prev.letter() == Letter::B && t.letter() == Letter::B) {
      throw InvalidCovering("covering: BB at tile " + std::to_string(i));
    }
    if (prev.y_right() != t.y_left()) {
      throw InvalidCovering("covering: strings do not coincide at tile " + std::to_string(i));
    }
  }
}

Covering Covering::blank(TileGeometry geometry) { return {NoCheck{}, {}, 0, std::move(geometry)}; }

Covering Covering::unchecked(std::vector<Decoration> tiles, std::size_t origin_index,
                             TileGeometry geometry) {
  return {NoCheck{}, std::move(tiles), origin_index, std::move(geometry)};
}

Word Covering::letters() const {
  Word w;
  w.reserve(tiles_.size());
  for (const auto& t : tiles_) w.push_back(t.letter());
  return w;
}

std::vector<GoldenNumber> Covering::left_heights() const {
  std::vector<GoldenNumber> h;
  h.reserve(tiles_.size());
  for (const auto& t : tiles_) h.push_back(t.y_left());
  return h;
}

namespace {

void require_in_range(const GoldenNumber& y, const char* what) {
  if (!height_range().contains(y)) {
    throw OutOfRange(std::string(what) + ": height " + y.to_string() + " outside [0, tau)");
  }
}

}  // namespace

Letter classify(const GoldenNumber& y, const DomainSet& domains) {
  require_in_range(y, "classify");
  if (domains.a_alpha.contains(y)) return Letter::A;
  if (domains.b_alpha.contains(y)) return Letter::B;
  throw OutOfRange("classify: height " + y.to_string() + " in neither alpha domain");
}

std::pair<Letter, GoldenNumber> step_right(const GoldenNumber& y, const DomainSet& domains) {
  const Letter l = classify(y, domains);
  return {l, y + step_of(l)};
}

std::pair<Letter, GoldenNumber> step_left(const GoldenNumber& y, const DomainSet& domains) {
  require_in_range(y, "step_left");
  // The attached tile's gamma sits at y, so y must lie in its alpha domain
  // shifted by its step.
  for (Letter l : {Letter::A, Letter::B}) {
    if (domains.alpha(l).shifted(step_of(l)).contains(y)) return {l, y - step_of(l)};
  }
  throw OutOfRange("step_left: height " + y.to_string() + " in neither gamma domain");
}

bool can_attach(const GoldenNumber& boundary_y, Letter candidate, Side side,
                const DomainSet& domains) {
  require_in_range(boundary_y, "can_attach");
  const GoldenInterval& alpha = domains.alpha(candidate);
  if (side == Side::right) return alpha.contains(boundary_y);
  return alpha.shifted(step_of(candidate)).contains(boundary_y);
}

Covering grow(const GoldenNumber& seed_y, std::size_t n_right, std::size_t n_left,
              TileGeometry geometry) {
  require_in_range(seed_y, "grow: seed");
  std::vector<Decoration> left;
  left.reserve(n_left);
  Grower lg(seed_y, Side::left);
  for (std::size_t i = 0; i < n_left; ++i) {
    auto [l, y] = lg.next();
    left.push_back(Decoration::make(l, std::move(y)));
  }

  std::vector<Decoration> tiles(left.rbegin(), left.rend());
  tiles.reserve(n_left + 1 + n_right);
  Grower rg(seed_y, Side::right);
  for (std::size_t i = 0; i <= n_right; ++i) {
    auto [l, y] = rg.next();
    tiles.push_back(Decoration::make(l, std::move(y)));
  }
  return Covering(std::move(tiles), n_left, std::move(geometry));
}

Grower::Grower(GoldenNumber start, Side side) : y_(std::move(start)), side_(side) {
  require_in_range(y_, "grower: start");
}

std::pair<Letter, GoldenNumber> Grower::next() {
  if (side_ == Side::right) {
    auto [l, y] = step_right(y_);
    GoldenNumber emitted = std::exchange(y_, std::move(y));
    return {l, std::move(emitted)};
  }
  auto [l, y] = step_left(y_);
  y_ = std::move(y);
  return {l, y_};
}

Word grow_letters(const GoldenNumber& seed_y, std::size_t n_right) {
  Word w;
  w.reserve(n_right + 1);
  Grower g(seed_y, Side::right);
  for (std::size_t i = 0; i <= n_right; ++i) w.push_back(g.next().first);
  return w;
}

GoldenInterval boundary_interval(std::span<const Letter> w, const DomainSet& domains) {
  GoldenInterval current = height_range();
  for (Letter l : w) {
    current = interval_intersect(current, domains.alpha(l));
    if (current.is_empty()) return current;
    current = current.shifted(step_of(l));
  }
  return current;
}

GoldenInterval feasible_interval(std::span<const Letter> w, const DomainSet& domains) {
  // Forward propagation of the boundary set, shifted back to the seed.
  GoldenNumber total;
  for (Letter l : w) total += step_of(l);
  return boundary_interval(w, domains).shifted(-total);
}

ApproximateGrowth grow_approximate(double seed_y, std::size_t n_right, std::size_t n_left) {
  const double tau = static_cast<double>(golden::tau_ld);
  const double inv_tau = tau - 1.0;
  if (!(seed_y >= 0.0 && seed_y < tau)) throw OutOfRange("grow_approximate: seed outside [0, tau)");
  ApproximateGrowth g;
  std::vector<double> left;
  double y = seed_y;
  for (std::size_t i = 0; i < n_left; ++i) {
    if (y < 1.0) {
      g.letters.push_back(Letter::A);
      y += inv_tau;
    } else {
      g.letters.push_back(Letter::B);
      y -= 1.0;
    }
    left.push_back(y);
  }
  std::reverse(g.letters.begin(), g.letters.end());
  g.heights.assign(left.rbegin(), left.rend());
  y = seed_y;
  for (std::size_t i = 0; i <= n_right; ++i) {
    g.heights.push_back(y);
    if (y >= inv_tau) {
      g.letters.push_back(Letter::A);
      y -= inv_tau;
    } else {
      g.letters.push_back(Letter::B);
      y += 1.0;
    }
  }
  return g;
}

}  // namespace quasigrow
