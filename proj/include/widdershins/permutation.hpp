#pragma once

// Permutations in one-line notation, their plots, and the containment order.
//
// A permutation of length n stores pi(1)..pi(n) as the values 1..n. Indices
// in the C++ API are 0-based (values()[i] == pi(i+1)) except where an
// operation explicitly returns 1-based ranges (proper_intervals).
//
// Ordering: operator< is shortlex (length first, then lexicographic on the
// one-line values); every sorted output of this library uses it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace widdershins {

/// Largest length that fits the 64-bit packed key (4 bits per entry plus a
/// 4-bit length field).
inline constexpr std::size_t kMaxPackedLength = 15;

class Permutation {
 public:
  using value_type = std::uint8_t;

  Permutation() = default;

  /// Validates that `values` is a bijection of {1..n}.
  explicit Permutation(std::span<const int> values);
  Permutation(std::initializer_list<int> values);

  /// Skips validation; `values` must already be a permutation of 1..n.
  static Permutation from_trusted(std::vector<value_type> values) {
    Permutation p;
    p.values_ = std::move(values);
    return p;
  }

  static Permutation identity(std::size_t n);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const value_type> values() const { return values_; }

  /// Pattern left after deleting the entry at 0-based position `index`.
  Permutation delete_at(std::size_t index) const;
  /// Inserts value `value` (1..n+1) at 0-based position `index` (0..n),
  /// shifting existing values >= value up by one.
  Permutation insert_at(std::size_t index, int value) const;

  /// Packed 64-bit key, injective over all lengths <= kMaxPackedLength.
  std::uint64_t pack() const;
  static Permutation unpack(std::uint64_t key);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  std::vector<value_type> values_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

struct Point {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A finite set of points in the plane, no two sharing an x or a y.
using PointSet = std::vector<Point>;

/// Reads points left to right and records each point's height rank.
/// Throws InvalidPointSet on a repeated x or y coordinate.
Permutation standardize(std::span<const Point> points);

/// The plot {(i, pi(i))}, 1-based.
PointSet plot(const Permutation& pi);

/// Order-isomorphic pattern of an arbitrary sequence of distinct values.
Permutation pattern_of(std::span<const int> distinct_values);

/// True iff some subsequence of `text` is order-isomorphic to `pattern`.
bool contains(const Permutation& pattern, const Permutation& text);

Permutation inverse(const Permutation& pi);
/// Plot rotated a half turn (reverse of the complement).
Permutation reverse_complement(const Permutation& pi);
/// Plot rotated a quarter turn counter-clockwise.
Permutation rotate90(const Permutation& pi);
/// rotate90 applied `quarter_turns` (mod 4) times; negative counts turn clockwise.
Permutation rotate(const Permutation& pi, int quarter_turns);

Permutation direct_sum(const Permutation& pi, const Permutation& sigma);
Permutation skew_sum(const Permutation& pi, const Permutation& sigma);

/// Finest decomposition into sum-indecomposables. Throws EmptyPermutation.
std::vector<Permutation> sum_components(const Permutation& pi);
/// Finest decomposition into skew-indecomposables. Throws EmptyPermutation.
std::vector<Permutation> skew_components(const Permutation& pi);
bool is_sum_decomposable(const Permutation& pi);
bool is_skew_decomposable(const Permutation& pi);

/// 1-based closed index range [first, last].
struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;
  friend auto operator<=>(const IndexRange&, const IndexRange&) = default;
};

/// Intervals with 2 <= size <= n-1, lexicographically sorted.
std::vector<IndexRange> proper_intervals(const Permutation& pi);

/// Deduplicated, sorted. Requires n >= 1.
std::vector<Permutation> one_point_deletions(const Permutation& pi);
/// Every length-(n+1) permutation obtained by inserting one point; sorted.
std::vector<Permutation> one_point_extensions(const Permutation& pi);

/// Space separated ("3 1 4 2"); the empty permutation is "ε".
std::string to_string(const Permutation& pi);
/// Digits without separators when n <= 9, otherwise to_string.
std::string to_compact_string(const Permutation& pi);
/// Accepts "3 1 4 2", "3,1,4,2", the compact "3142" (n <= 9) and "ε".
Permutation parse_permutation(std::string_view text);

}  // namespace widdershins

template <>
struct std::hash<widdershins::Permutation> {
  std::size_t operator()(const widdershins::Permutation& p) const noexcept {
    return widdershins::PermutationHash{}(p);
  }
};
