#include <random>
#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "widdershins/error.hpp"
#include "widdershins/membership.hpp"
#include "widdershins/ring_word.hpp"
#include "widdershins/spiral.hpp"

using namespace widdershins;

namespace {

Permutation P(std::string_view s) { return parse_permutation(s); }

std::vector<Permutation> w_members_up_to(std::size_t n) {
  std::vector<Permutation> out;
  for (const auto& level : enumerate_class(named_oracle("W"), n).members) {
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

TEST_CASE("spiral examples") {
  CHECK(spiral({Orientation::standard, 4}) == P("3142"));
  CHECK(spiral({Orientation::standard, 5}) == P("41532"));
  CHECK_THROWS_AS(spiral({Orientation::standard, 3}), SpiralTooShort);
  for (std::size_t m = 4; m <= 16; ++m) {
    const auto s = spiral({Orientation::standard, m});
    CHECK(s.size() == m);
    CHECK(spiral({Orientation::rot180, m}) == reverse_complement(s));
    CHECK(spiral({Orientation::rot90, m}) == rotate90(s));
    CHECK(spiral({Orientation::rot270, m}) == rotate(s, 3));
    for (auto o : kOrientations) CHECK(is_skew_merged(spiral({o, m})));
  }
}

TEST_CASE("orientation names") {
  for (auto o : kOrientations) CHECK(parse_orientation(to_string(o)) == o);
  CHECK(parse_orientation("90") == Orientation::rot90);
  CHECK_THROWS_AS(parse_orientation("sideways"), ParseError);
}

TEST_CASE("spiral coordinates form a widdershins pin sequence") {
  const auto pts = standard_spiral_points(24);
  CHECK(pts[1].x < pts[0].x);  // p2 northwest of p1
  CHECK(pts[1].y > pts[0].y);
  for (std::size_t i = 2; i < pts.size(); ++i) {
    long long min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
    for (std::size_t j = 1; j < i; ++j) {
      min_x = std::min(min_x, pts[j].x);
      max_x = std::max(max_x, pts[j].x);
      min_y = std::min(min_y, pts[j].y);
      max_y = std::max(max_y, pts[j].y);
    }
    const auto& p = pts[i];
    const auto& last = pts[i - 1];
    // Directions cycle left, down, right, up starting with p3.
    const std::size_t dir = (i - 2) % 4;
    INFO("pin ", i + 1);
    if (dir == 0) CHECK(p.x < min_x);
    if (dir == 1) CHECK(p.y < min_y);
    if (dir == 2) CHECK(p.x > max_x);
    if (dir == 3) CHECK(p.y > max_y);
    // The pin separates its predecessor from every earlier point.
    const bool horizontal_move = dir == 0 || dir == 2;
    for (std::size_t j = 0; j + 1 < i; ++j) {
      if (horizontal_move) CHECK(((pts[j].y < p.y) != (last.y < p.y)));
      else CHECK(((pts[j].x < p.x) != (last.x < p.x)));
    }
  }
}

TEST_CASE("central insertion") {
  const SpiralSpec s4{Orientation::standard, 4};
  CHECK(central_insert(s4, Permutation{}) == P("3142"));
  CHECK(central_insert(s4, P("1")) == P("41352"));
  CHECK(ring_decompose(central_insert(s4, P("1"))).back().k() == 4);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const SpiralSpec spec{kOrientations[rng() % 4], 4 + rng() % 8};
    const auto alpha = brute::random_permutation(rng() % 6, rng);
    const auto placed = central_placement(spec, alpha);
    REQUIRE(placed.result.size() == spec.length + alpha.size());
    CHECK(placed.block_length == alpha.size());
    std::vector<int> block;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const int v = placed.result[placed.block_position + i];
      CHECK(v >= placed.block_low_value);
      CHECK(v < placed.block_low_value + static_cast<int>(alpha.size()));
      block.push_back(v);
    }
    CHECK(pattern_of(block) == alpha);
    // Removing the block leaves the spiral.
    auto rest = placed.result;
    for (std::size_t i = 0; i < alpha.size(); ++i) rest = rest.delete_at(placed.block_position);
    CHECK(rest == spiral(spec));
  }
  CHECK_THROWS_AS(central_insert({Orientation::standard, 2}, P("1")), SpiralTooShort);
}

TEST_CASE("letters and words") {
  CHECK_THROWS_AS(SigmaLetter(Quadrant::NE, 2), InvalidLetter);
  CHECK_THROWS_AS(SigmaLetter(Quadrant::NE, 3), InvalidLetter);
  CHECK_THROWS_AS(SigmaLetter(Quadrant::NE, 0), InvalidLetter);
  CHECK(to_string(parse_ring_word("SE4.SW1.NE6")) == "SE4.SW1.NE6");
  CHECK(to_string(RingWord{}) == "ε");
  CHECK(parse_ring_word("ε").empty());
  CHECK_THROWS_AS(parse_letter("XX4"), ParseError);
  CHECK_THROWS_AS(parse_letter("NE"), ParseError);
  CHECK_THROWS_AS(parse_letter("NE3"), InvalidLetter);
  for (auto o : kOrientations) CHECK(orientation_for(first_point_quadrant(o)) == o);
  CHECK(first_point_quadrant(Orientation::standard) == Quadrant::SE);
}

TEST_CASE("ring composition") {
  CHECK(ring_compose(RingWord{}).empty());
  CHECK(ring_compose(parse_ring_word("SW1.SW1")) == P("12"));
  CHECK(ring_compose(parse_ring_word("SW1")) == P("1"));
  const auto alpha = P("213");
  CHECK(ring_compose(parse_ring_word("SW1.NE1.SE1")) == skew_sum(direct_sum(P("1"), P("1")), P("1")));
  CHECK(ring_compose(parse_ring_word("NW1")) == P("1"));
  CHECK(ring_compose(parse_ring_word("SW1.SE4")) == central_insert({Orientation::standard, 4}, P("1")));
  (void)alpha;
}

TEST_CASE("ring decomposition examples") {
  CHECK_THROWS_AS(ring_decompose(P("2143")), NotInW);
  CHECK_FALSE(try_ring_decompose(P("2413")).has_value());
  CHECK(to_string(ring_decompose(P("3142"))) == "SE4");
  CHECK(ring_decompose(Permutation{}).empty());
  CHECK(to_string(ring_decompose(P("1"))) == "SW1");
  CHECK(in_W(P("3142")));
  CHECK_FALSE(in_W(P("2413")));
  CHECK(in_W(Permutation{}));
}

TEST_CASE("ring_compose inverts ring_decompose on W up to length 9") {
  for (const auto& pi : w_members_up_to(9)) {
    const auto word = ring_decompose(pi);
    REQUIRE(ring_compose(word) == pi);
  }
}

TEST_CASE("W equals the downward closure of the spirals") {
  // Independent of ring decomposition: test containment in long spirals.
  std::vector<Permutation> spirals;
  for (auto o : kOrientations) spirals.push_back(spiral({o, 20}));
  const std::size_t expected[] = {1, 1, 2, 6, 21, 77, 276};
  for (std::size_t n = 0; n <= 6; ++n) {
    std::size_t count = 0;
    brute::for_each_permutation(n, [&](const Permutation& pi) {
      bool inside = false;
      for (const auto& s : spirals) inside = inside || contains(pi, s);
      CHECK(inside == in_W(pi));
      if (inside) ++count;
    });
    CHECK(count == expected[n]);
  }
}

TEST_CASE("generating function") {
  const auto c = gf_coefficients(12);
  const std::vector<long> golden{1, 1, 2, 6, 21, 77, 276, 972, 3397, 11845, 41294, 143994, 502209};
  for (std::size_t n = 0; n < golden.size(); ++n) CHECK(c[n] == golden[n]);
  CHECK(c[4] == 24 - 3);
  // Multiplying the series back by the denominator recovers the numerator.
  const std::vector<long> denominator{1, -5, 6, -2, -1, -3};
  const auto long_series = gf_coefficients(60);
  for (std::size_t n = 0; n <= 60; ++n) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < denominator.size() && j <= n; ++j) {
      sum += denominator[j] * long_series[n - j];
    }
    const long numerator = n == 0 ? 1 : n == 1 ? -4 : n == 2 ? 3 : 0;
    CHECK(sum == numerator);
  }
  CHECK(long_series[60] > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("counts of W match the series to length 10") {
  const auto counts = enumerate_class(named_oracle("W"), 10).counts();
  const auto c = gf_coefficients(10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(BigInt(counts[n]) == c[n]);
}

TEST_CASE("closure properties of W") {
  for (const auto& pi : w_members_up_to(8)) {
    if (!pi.empty()) {
      for (const auto& d : one_point_deletions(pi)) CHECK(in_W(d));
    }
    if (pi.size() <= 7) {
      CHECK(in_W(direct_sum(P("1"), pi)));
      CHECK(in_W(direct_sum(pi, P("1"))));
      CHECK(in_W(skew_sum(P("1"), pi)));
      CHECK(in_W(skew_sum(pi, P("1"))));
    }
    CHECK(in_W(rotate90(pi)));
  }
}

TEST_CASE("oracle agreement on random longer permutations") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto pi = brute::random_permutation(8 + rng() % 5, rng);
    CHECK(in_W(pi) == in_W_via_basis(pi));
    CHECK(in_W_union_inverse(pi) == (in_W(pi) || in_W(inverse(pi))));
    CHECK(in_W_union_inverse(pi) == avoids_all(pi, w_union_inverse_basis()));
  }
}

TEST_CASE("spiral chain containment") {
  for (std::size_t m = 4; m <= 12; ++m) {
    for (auto o : kOrientations) {
      for (auto o2 : kOrientations) {
        INFO("m=", m, " ", to_string(o), " in ", to_string(o2));
        CHECK(contains(spiral({o, m}), spiral({o2, m + 3})));
      }
    }
  }
}

TEST_CASE("skew-merged and separable") {
  CHECK_FALSE(is_skew_merged(P("2143")));
  CHECK(is_skew_merged(Permutation{}));
  CHECK(is_separable(Permutation{}));
  CHECK_FALSE(is_separable(P("2413")));
  CHECK(is_separable(P("2143")));
}

TEST_CASE("bases") {
  CHECK(w_basis().size() == 13);
  CHECK(w_union_inverse_basis().size() == 24);
  for (const auto& b : w_basis().patterns()) CHECK_FALSE(in_W(b));
  for (const auto& b : w_union_inverse_basis().patterns()) {
    CHECK_FALSE(in_W_union_inverse(b));
    for (const auto& d : one_point_deletions(b)) CHECK(in_W_union_inverse(d));
  }
  CHECK(inverse_basis(inverse_basis(w_basis())) == w_basis());
}
