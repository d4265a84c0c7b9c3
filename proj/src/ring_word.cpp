#include "widdershins/ring_word.hpp"

#include <algorithm>
#include <array>

#include "widdershins/error.hpp"

namespace widdershins {

std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::NE: return "NE";
    case Quadrant::NW: return "NW";
    case Quadrant::SW: return "SW";
    case Quadrant::SE: return "SE";
  }
  return "NE";
}

SigmaLetter::SigmaLetter(Quadrant quadrant, unsigned k) : quadrant_(quadrant), k_(k) {
  if (k != 1 && k < kMinSpiralLength) {
    throw InvalidLetter("letter index must be 1 or at least 4, got " + std::to_string(k));
  }
}

std::string to_string(const SigmaLetter& letter) {
  return to_string(letter.quadrant()) + std::to_string(letter.k());
}

std::string to_string(std::span<const SigmaLetter> word) {
  if (word.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '.';
    out += to_string(word[i]);
  }
  return out;
}

SigmaLetter parse_letter(std::string_view text) {
  if (text.size() < 3) throw ParseError("bad letter '" + std::string(text) + "'");
  const auto q = text.substr(0, 2);
  Quadrant quadrant;
  if (q == "NE") {
    quadrant = Quadrant::NE;
  } else if (q == "NW") {
    quadrant = Quadrant::NW;
  } else if (q == "SW") {
    quadrant = Quadrant::SW;
  } else if (q == "SE") {
    quadrant = Quadrant::SE;
  } else {
    throw ParseError("bad quadrant in '" + std::string(text) + "'");
  }
  const auto digits = text.substr(2);
  if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(),
                                        [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("bad index in '" + std::string(text) + "'");
  }
  return SigmaLetter(quadrant, static_cast<unsigned>(std::stoul(std::string(digits))));
}

RingWord parse_ring_word(std::string_view text) {
  RingWord word;
  if (text.empty() || text == "ε") return word;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto dot = text.find('.', start);
    const auto end = dot == std::string_view::npos ? text.size() : dot;
    word.push_back(parse_letter(text.substr(start, end - start)));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return word;
}

Quadrant first_point_quadrant(Orientation o) {
  switch (o) {
    case Orientation::standard: return Quadrant::SE;
    case Orientation::rot90: return Quadrant::NE;
    case Orientation::rot180: return Quadrant::NW;
    case Orientation::rot270: return Quadrant::SW;
  }
  return Quadrant::SE;
}

Orientation orientation_for(Quadrant q) {
  switch (q) {
    case Quadrant::SE: return Orientation::standard;
    case Quadrant::NE: return Orientation::rot90;
    case Quadrant::NW: return Orientation::rot180;
    case Quadrant::SW: return Orientation::rot270;
  }
  return Orientation::standard;
}

LetterOrder<SigmaLetter> four_chain_order() {
  return {[](const SigmaLetter& l) { return l.k() == 1 || l.k() >= kMinSpiralLength; },
          [](const SigmaLetter& a, const SigmaLetter& b) {
            return a.quadrant() == b.quadrant() && a.k() <= b.k();
          }};
}

Permutation ring_compose(std::span<const SigmaLetter> word) {
  static const Permutation one{1};
  Permutation pi;
  for (const auto& letter : word) {
    if (letter.k() == 1) {
      switch (letter.quadrant()) {
        case Quadrant::SW: pi = direct_sum(one, pi); break;
        case Quadrant::NE: pi = direct_sum(pi, one); break;
        case Quadrant::NW: pi = skew_sum(one, pi); break;
        case Quadrant::SE: pi = skew_sum(pi, one); break;
      }
    } else {
      pi = central_insert({orientation_for(letter.quadrant()), letter.k()}, pi);
    }
  }
  return pi;
}

namespace {

// Outer entries of a spiral of length k with an a-entry block at its
// centre; the block itself is filled with an increasing run.
struct Frame {
  std::vector<Permutation::value_type> values;
  std::size_t block_position = 0;
  int block_low_value = 1;
  std::size_t block_length = 0;
};

Frame make_frame(Orientation o, std::size_t k, std::size_t a) {
  const auto placement = central_placement({o, k}, Permutation::identity(a));
  const auto v = placement.result.values();
  return {{v.begin(), v.end()}, placement.block_position, placement.block_low_value, a};
}

constexpr std::size_t kFrameTableLength = 32;

class FrameTable {
 public:
  FrameTable() {
    for (std::size_t n = kMinSpiralLength; n <= kFrameTableLength; ++n) {
      for (std::size_t k = kMinSpiralLength; k <= n; ++k) {
        for (auto o : kOrientations) frames_[index(o, k, n - k)] = make_frame(o, k, n - k);
      }
    }
  }

  const Frame& get(Orientation o, std::size_t k, std::size_t a) const {
    return frames_[index(o, k, a)];
  }

 private:
  static std::size_t index(Orientation o, std::size_t k, std::size_t a) {
    return (static_cast<std::size_t>(o) * (kFrameTableLength + 1) + k) * (kFrameTableLength + 1) + a;
  }
  std::array<Frame, 4 * (kFrameTableLength + 1) * (kFrameTableLength + 1)> frames_;
};

bool outer_matches(const Frame& f, std::span<const Permutation::value_type> pi) {
  const std::size_t block_end = f.block_position + f.block_length;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i >= f.block_position && i < block_end) continue;
    if (pi[i] != f.values[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<RingWord> try_ring_decompose(const Permutation& pi) {
  static const FrameTable table;
  using V = Permutation::value_type;
  std::vector<V> cur(pi.values().begin(), pi.values().end());
  RingWord outermost_first;

  auto drop = [&cur](std::size_t index, bool lower_rest) {
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(index));
    if (lower_rest) {
      for (auto& v : cur) --v;
    }
  };

  while (!cur.empty()) {
    const std::size_t n = cur.size();
    if (cur.front() == 1) {
      outermost_first.emplace_back(Quadrant::SW, 1);
      drop(0, true);
      continue;
    }
    if (cur.back() == n) {
      outermost_first.emplace_back(Quadrant::NE, 1);
      drop(n - 1, false);
      continue;
    }
    if (cur.front() == n) {
      outermost_first.emplace_back(Quadrant::NW, 1);
      drop(0, false);
      continue;
    }
    if (cur.back() == 1) {
      outermost_first.emplace_back(Quadrant::SE, 1);
      drop(n - 1, true);
      continue;
    }
    const auto current = Permutation::from_trusted(cur);
    // A decomposable member would have an increasing summand, i.e. a corner.
    if (is_sum_decomposable(current) || is_skew_decomposable(current)) return std::nullopt;

    bool found = false;
    for (std::size_t k = kMinSpiralLength; k <= n && !found; ++k) {
      for (auto o : kOrientations) {
        const Frame local = n > kFrameTableLength ? make_frame(o, k, n - k) : Frame{};
        const Frame& f = n > kFrameTableLength ? local : table.get(o, k, n - k);
        if (!outer_matches(f, cur)) continue;
        outermost_first.emplace_back(first_point_quadrant(o), static_cast<unsigned>(k));
        std::vector<V> block(cur.begin() + static_cast<std::ptrdiff_t>(f.block_position),
                             cur.begin() + static_cast<std::ptrdiff_t>(f.block_position +
                                                                       f.block_length));
        for (auto& v : block) v = static_cast<V>(v - (f.block_low_value - 1));
        cur = std::move(block);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return RingWord(outermost_first.rbegin(), outermost_first.rend());
}

RingWord ring_decompose(const Permutation& pi) {
  auto word = try_ring_decompose(pi);
  if (!word) throw NotInW(to_string(pi) + " has no ring decomposition");
  return std::move(*word);
}

}  // namespace widdershins
