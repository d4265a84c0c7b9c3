#pragma once

// Membership in the downward closure W of the widdershins spirals, its
// inverse class, their union, and the counting sequence of W.

#include <cstddef>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "widdershins/pattern_class.hpp"
#include "widdershins/permutation.hpp"

namespace widdershins {

using BigInt = boost::multiprecision::cpp_int;

/// The 13 minimal forbidden patterns of W.
const PatternBasis& w_basis();
/// The 24 minimal forbidden patterns of W ∪ W⁻¹.
const PatternBasis& w_union_inverse_basis();
/// Elementwise inverse of a basis.
PatternBasis inverse_basis(const PatternBasis& basis);

/// Membership through ring decomposition.
bool in_W(const Permutation& pi);
/// Membership through avoidance of w_basis().
bool in_W_via_basis(const Permutation& pi);
bool in_W_inverse(const Permutation& pi);
bool in_W_union_inverse(const Permutation& pi);

/// Oracles by name: W, W-basis, Winv, WuWinv, WuWinv-basis, skew-merged,
/// separable, and av:<p1>,<p2>,... Throws ParseError on an unknown name.
MembershipOracle named_oracle(std::string_view name);

/// Taylor coefficients c_0..c_max_n of
///   (1 - 4x + 3x^2) / (1 - 5x + 6x^2 - 2x^3 - x^4 - 3x^5)
/// via the order-5 recurrence of the denominator, in exact integers.
std::vector<BigInt> gf_coefficients(std::size_t max_n);

}  // namespace widdershins
