#include "widdershins/spiral.hpp"

#include <algorithm>
#include <numeric>

#include "widdershins/error.hpp"
#include "widdershins/pattern_class.hpp"

namespace widdershins {

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::standard: return "standard";
    case Orientation::rot90: return "rot90";
    case Orientation::rot180: return "rot180";
    case Orientation::rot270: return "rot270";
  }
  return "standard";
}

Orientation parse_orientation(std::string_view text) {
  if (text == "standard" || text == "rot0" || text == "0") return Orientation::standard;
  if (text == "rot90" || text == "90") return Orientation::rot90;
  if (text == "rot180" || text == "180") return Orientation::rot180;
  if (text == "rot270" || text == "270") return Orientation::rot270;
  throw ParseError("unknown orientation '" + std::string(text) + "'");
}

PointSet standard_spiral_points(std::size_t length) {
  PointSet pts;
  pts.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const auto j = static_cast<long long>(i / 4);
    switch (i % 4) {
      case 0: pts.push_back({2 + 2 * j, -2 - 2 * j}); break;   // right of the hull
      case 1: pts.push_back({1 + 2 * j, 2 + 2 * j}); break;    // up
      case 2: pts.push_back({-2 - 2 * j, 1 + 2 * j}); break;   // left
      default: pts.push_back({-1 - 2 * j, -5 - 2 * j}); break; // down
    }
  }
  return pts;
}

namespace {

void check_length(const SpiralSpec& spec) {
  if (spec.length < kMinSpiralLength) {
    throw SpiralTooShort("spiral length " + std::to_string(spec.length) + " < 4");
  }
}

Point rotate_point(Point p, int turns) {
  for (int t = 0; t < turns; ++t) p = {-p.y, p.x};
  return p;
}

}  // namespace

Permutation spiral(const SpiralSpec& spec) {
  check_length(spec);
  PointSet pts = standard_spiral_points(spec.length);
  for (auto& p : pts) p = rotate_point(p, quarter_turns(spec.orientation));
  return standardize(pts);
}

CentralPlacement central_placement(const SpiralSpec& spec, const Permutation& alpha) {
  check_length(spec);
  const int turns = quarter_turns(spec.orientation);
  const auto a = static_cast<long long>(alpha.size());
  // Scale the spiral so its empty centre box, x in (-scale, scale) and
  // y in (-2 scale, scale), has room for alpha's a x a grid.
  const long long scale = 2 * (a + 1);
  PointSet pts = standard_spiral_points(spec.length);
  for (auto& p : pts) p = {p.x * scale, p.y * scale};
  const std::size_t first_block_point = pts.size();
  // Pre-rotate alpha backwards so it ends up unrotated.
  const Permutation inner = rotate(alpha, -turns);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    pts.push_back({static_cast<long long>(i) + 1, inner[i] - (a + 1)});
  }
  for (auto& p : pts) p = rotate_point(p, turns);

  CentralPlacement out;
  out.result = standardize(pts);
  out.block_length = alpha.size();
  if (alpha.empty()) return out;

  // Block position: number of points strictly left of the block's leftmost
  // point; block value: number strictly below its lowest point, plus one.
  long long block_min_x = pts[first_block_point].x;
  long long block_min_y = pts[first_block_point].y;
  for (std::size_t i = first_block_point; i < pts.size(); ++i) {
    block_min_x = std::min(block_min_x, pts[i].x);
    block_min_y = std::min(block_min_y, pts[i].y);
  }
  out.block_position = static_cast<std::size_t>(
      std::count_if(pts.begin(), pts.end(), [&](const Point& p) { return p.x < block_min_x; }));
  out.block_low_value =
      1 + static_cast<int>(std::count_if(pts.begin(), pts.end(),
                                         [&](const Point& p) { return p.y < block_min_y; }));
  return out;
}

bool is_skew_merged(const Permutation& pi) {
  static const PatternBasis basis({Permutation{2, 1, 4, 3}, Permutation{3, 4, 1, 2}});
  return avoids_all(pi, basis);
}

bool is_separable(const Permutation& pi) {
  static const PatternBasis basis({Permutation{2, 4, 1, 3}, Permutation{3, 1, 4, 2}});
  return avoids_all(pi, basis);
}

}  // namespace widdershins
