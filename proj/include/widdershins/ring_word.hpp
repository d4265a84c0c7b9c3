#pragma once

// Ring decomposition of members of the spiral class and its encoding as a
// word over the quadrant alphabet {NE,NW,SW,SE} x ({1} ∪ {4,5,...}).
//
// A word is read innermost letter first. Composing folds left to right from
// the empty permutation:
//   SW1: 1 ⊕ alpha    NE1: alpha ⊕ 1    NW1: 1 ⊖ alpha    SE1: alpha ⊖ 1
//   Qk (k >= 4): central insertion of alpha into the length-k spiral whose
//                first point lies in quadrant Q relative to alpha.
// With the standard spiral's first point to the southeast of its centre,
// the quadrant fixes the orientation: SE standard, NE rot90, NW rot180,
// SW rot270.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "widdershins/pattern_class.hpp"
#include "widdershins/permutation.hpp"
#include "widdershins/spiral.hpp"

namespace widdershins {

enum class Quadrant { NE, NW, SW, SE };

std::string to_string(Quadrant q);

class SigmaLetter {
 public:
  /// Throws InvalidLetter unless k == 1 or k >= 4.
  SigmaLetter(Quadrant quadrant, unsigned k);

  Quadrant quadrant() const { return quadrant_; }
  unsigned k() const { return k_; }

  friend auto operator<=>(const SigmaLetter&, const SigmaLetter&) = default;

 private:
  Quadrant quadrant_;
  unsigned k_;
};

using RingWord = std::vector<SigmaLetter>;

/// "SE4.SW1.NE6"; the empty word is "ε".
std::string to_string(const SigmaLetter& letter);
std::string to_string(std::span<const SigmaLetter> word);
SigmaLetter parse_letter(std::string_view text);
RingWord parse_ring_word(std::string_view text);

Quadrant first_point_quadrant(Orientation o);
Orientation orientation_for(Quadrant q);

/// Same quadrant and k <= l: the union of four chains.
LetterOrder<SigmaLetter> four_chain_order();

Permutation ring_compose(std::span<const SigmaLetter> word);

/// Deterministic ring decomposition: corners are stripped in the order
/// SW1, NE1, NW1, SE1; otherwise spirals are tried by ascending length and
/// orientation standard, rot90, rot180, rot270. Returns nullopt when no
/// decomposition exists.
std::optional<RingWord> try_ring_decompose(const Permutation& pi);

/// As try_ring_decompose, but throws NotInW on failure.
RingWord ring_decompose(const Permutation& pi);

}  // namespace widdershins
