#pragma once

// Widdershins spirals and central insertion.
//
// The standard spiral starts with p1 and p2 (p2 northwest of p1) and then
// adds pins in the cyclic order left, down, right, up. Coordinates follow
// the usual drawing of the standard spiral:
//
//   p1 = (2,-2)  p2 = (1,2)  p3 = (-2,1)  p4 = (-1,-5)
//   p5 = (4,-4)  p6 = (3,4)  p7 = (-4,3)  p8 = (-3,-7)  ...
//
// i.e. every block of four pins moves two units further out. The centre
// of the spiral is the empty box between p4 and p2 horizontally and between
// p1 and p3 vertically; central insertion places a permutation there.
// Other orientations are quarter-turn rotations (counter-clockwise) of the
// whole picture, central block included.

#include <cstddef>
#include <string>
#include <string_view>

#include "widdershins/permutation.hpp"

namespace widdershins {

enum class Orientation { standard = 0, rot90 = 1, rot180 = 2, rot270 = 3 };

inline constexpr Orientation kOrientations[] = {Orientation::standard, Orientation::rot90,
                                                Orientation::rot180, Orientation::rot270};

inline int quarter_turns(Orientation o) { return static_cast<int>(o); }

std::string to_string(Orientation o);
/// Accepts standard/rot0, rot90, rot180, rot270 (also 0, 90, 180, 270).
Orientation parse_orientation(std::string_view text);

/// Minimum number of points in a spiral.
inline constexpr std::size_t kMinSpiralLength = 4;

struct SpiralSpec {
  Orientation orientation = Orientation::standard;
  std::size_t length = kMinSpiralLength;
};

/// Unrotated coordinates of the first `length` pins p1..p_length.
PointSet standard_spiral_points(std::size_t length);

/// Throws SpiralTooShort when spec.length < 4.
Permutation spiral(const SpiralSpec& spec);

/// Where central insertion puts the inserted permutation.
struct CentralPlacement {
  Permutation result;
  std::size_t block_position = 0;  // 0-based first index of the block
  int block_low_value = 1;         // smallest value inside the block
  std::size_t block_length = 0;
};

/// The spiral with `alpha` placed (as itself, unrotated) at its centre.
/// Throws SpiralTooShort when spec.length < 4.
CentralPlacement central_placement(const SpiralSpec& spec, const Permutation& alpha);

inline Permutation central_insert(const SpiralSpec& spec, const Permutation& alpha) {
  return central_placement(spec, alpha).result;
}

bool is_skew_merged(const Permutation& pi);
bool is_separable(const Permutation& pi);

}  // namespace widdershins
