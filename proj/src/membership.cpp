#include "widdershins/membership.hpp"

#include "widdershins/error.hpp"
#include "widdershins/ring_word.hpp"
#include "widdershins/spiral.hpp"

namespace widdershins {

const PatternBasis& w_basis() {
  static const PatternBasis basis = parse_basis(
      "2143, 2413, 3412, 314562, 412563, 415632, 431562, 512364, 512643, 516432, 541263, "
      "541632, 543162");
  return basis;
}

const PatternBasis& w_union_inverse_basis() {
  static const PatternBasis basis = parse_basis(
      "2143, 3412, 234615, 236145, 236514, 261345, 265134, 265413, 314562, 346215, 362145, "
      "365214, 412563, 415632, 431562, 463215, 512364, 512643, 516432, 541263, 541632, "
      "543162, 28536417, 71463582");
  return basis;
}

PatternBasis inverse_basis(const PatternBasis& basis) {
  std::vector<Permutation> out;
  out.reserve(basis.size());
  for (const auto& p : basis.patterns()) out.push_back(inverse(p));
  return PatternBasis(std::move(out));
}

bool in_W(const Permutation& pi) { return try_ring_decompose(pi).has_value(); }

bool in_W_via_basis(const Permutation& pi) { return avoids_all(pi, w_basis()); }

bool in_W_inverse(const Permutation& pi) { return in_W(inverse(pi)); }

bool in_W_union_inverse(const Permutation& pi) { return in_W(pi) || in_W(inverse(pi)); }

MembershipOracle named_oracle(std::string_view name) {
  if (name == "W") return {"W", in_W, std::nullopt};
  if (name == "W-basis") return {"W-basis", in_W_via_basis, std::nullopt};
  if (name == "Winv") return {"Winv", in_W_inverse, std::nullopt};
  if (name == "WuWinv") return {"WuWinv", in_W_union_inverse, std::nullopt};
  if (name == "WuWinv-basis") {
    return {"WuWinv-basis",
            [](const Permutation& p) { return avoids_all(p, w_union_inverse_basis()); },
            std::nullopt};
  }
  if (name == "skew-merged") return {"skew-merged", is_skew_merged, std::nullopt};
  if (name == "separable") return {"separable", is_separable, std::nullopt};
  if (name.rfind("av:", 0) == 0) return avoidance_oracle(parse_basis(name.substr(3)));
  throw ParseError("unknown class '" + std::string(name) +
                   "' (expected W, W-basis, Winv, WuWinv, WuWinv-basis, skew-merged, separable "
                   "or av:<patterns>)");
}

std::vector<BigInt> gf_coefficients(std::size_t max_n) {
  // c_n = num_n + 5 c_{n-1} - 6 c_{n-2} + 2 c_{n-3} + c_{n-4} + 3 c_{n-5}
  static const int numerator[] = {1, -4, 3};
  static const int feedback[] = {5, -6, 2, 1, 3};
  std::vector<BigInt> c;
  c.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    BigInt value = n < 3 ? BigInt(numerator[n]) : BigInt(0);
    for (std::size_t j = 1; j <= 5 && j <= n; ++j) value += feedback[j - 1] * c[n - j];
    c.push_back(std::move(value));
  }
  return c;
}

}  // namespace widdershins
