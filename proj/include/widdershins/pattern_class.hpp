#pragma once

// Permutation classes given by forbidden patterns or by a membership test,
// level-by-level enumeration, and basis discovery.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "widdershins/error.hpp"
#include "widdershins/permutation.hpp"

namespace widdershins {

/// A finite antichain of permutations, kept sorted (shortlex).
class PatternBasis {
 public:
  PatternBasis() = default;
  /// Sorts and deduplicates; throws NotAntichain if one pattern contains another.
  explicit PatternBasis(std::vector<Permutation> patterns);

  const std::vector<Permutation>& patterns() const { return patterns_; }
  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  std::size_t max_length() const;

  friend bool operator==(const PatternBasis&, const PatternBasis&) = default;

 private:
  std::vector<Permutation> patterns_;
};

/// Parses a comma/newline separated list of permutations.
PatternBasis parse_basis(std::string_view text);
/// One pattern per line in text form, sorted.
std::string format_basis(const PatternBasis& basis);

/// Decision procedure for a downward-closed class.
struct MembershipOracle {
  /// Stable identifier; keys the on-disk level cache.
  std::string id;
  std::function<bool(const Permutation&)> accepts;
  /// Largest length the oracle is trusted for; nullopt means unbounded.
  std::optional<std::size_t> trusted_max_length;

  bool operator()(const Permutation& p) const { return accepts(p); }
};

MembershipOracle avoidance_oracle(const PatternBasis& basis);
MembershipOracle union_oracle(MembershipOracle a, MembershipOracle b);
MembershipOracle always_true_oracle();

bool avoids_all(const Permutation& pi, const PatternBasis& basis);
bool avoids_all(const Permutation& pi, std::span<const Permutation> patterns);

/// Pairwise non-containment in both directions. Duplicates make it false.
bool is_antichain(std::span<const Permutation> perms);

/// Members and minimal non-members of one length.
struct ClassLevel {
  std::vector<Permutation> members;
  std::vector<Permutation> basis;
};

/// Persistent store for levels, keyed by oracle id and length.
class LevelCache {
 public:
  virtual ~LevelCache() = default;
  virtual std::optional<ClassLevel> load(const std::string& oracle_id, std::size_t length) = 0;
  virtual void store(const std::string& oracle_id, std::size_t length, const ClassLevel& level) = 0;
};

struct SearchOptions {
  /// 0 selects the available hardware parallelism.
  std::size_t workers = 0;
  LevelCache* cache = nullptr;
  /// Receives one line per finished level.
  std::function<void(const std::string&)> progress;
};

/// Levels 0..max_n of a class: members of length n are the one-point
/// extensions of members of length n-1 that the oracle accepts; rejected
/// extensions whose every deletion is a member are the basis elements of
/// length n. Output is sorted and independent of the worker count.
/// Throws DomainExceeded past the oracle's trusted length.
std::vector<ClassLevel> explore_class(const MembershipOracle& member, std::size_t max_n,
                                      const SearchOptions& options = {});

struct ClassEnumeration {
  std::vector<std::vector<Permutation>> members;  // indexed by length
  std::vector<std::size_t> counts() const;
};

ClassEnumeration enumerate_class(const MembershipOracle& member, std::size_t max_n,
                                 const SearchOptions& options = {});

/// All minimal non-members of length <= max_len.
PatternBasis compute_basis(const MembershipOracle& member, std::size_t max_len,
                           const SearchOptions& options = {});

/// Default search bound for a union: the sum of the two longest patterns.
std::size_t union_search_bound(const PatternBasis& c, const PatternBasis& d);

/// Basis of Av(c) ∪ Av(d), searched up to `max_len` (default:
/// union_search_bound). Throws DomainExceeded if the bound exceeds the
/// packable length.
PatternBasis union_basis(const PatternBasis& c, const PatternBasis& d,
                         std::optional<std::size_t> max_len = std::nullopt,
                         const SearchOptions& options = {});

/// A quasi-ordered alphabet: `knows` decides alphabet membership, `leq` the order.
template <typename Letter>
struct LetterOrder {
  std::function<bool(const Letter&)> knows;
  std::function<bool(const Letter&, const Letter&)> leq;
};

/// v <= w in the generalized subword order: an increasing embedding of the
/// positions of v into w with v[j] <= w[i_j]. Earliest-match greedy is
/// exact: any embedding can be shifted left onto the greedy one.
template <typename Letter>
bool generalized_subword_leq(std::span<const Letter> v, std::span<const Letter> w,
                             const LetterOrder<Letter>& order) {
  for (const auto& l : v) {
    if (!order.knows(l)) throw UnknownLetter("letter outside the alphabet in the shorter word");
  }
  for (const auto& l : w) {
    if (!order.knows(l)) throw UnknownLetter("letter outside the alphabet in the longer word");
  }
  std::size_t i = 0;
  for (const auto& letter : v) {
    while (i < w.size() && !order.leq(letter, w[i])) ++i;
    if (i == w.size()) return false;
    ++i;
  }
  return true;
}

}  // namespace widdershins
