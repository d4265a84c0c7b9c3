#include "widdershins/permutation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "widdershins/error.hpp"

namespace widdershins {

namespace {

constexpr std::size_t kMaxLength = std::numeric_limits<Permutation::value_type>::max();

std::vector<Permutation::value_type> checked_values(std::span<const int> values) {
  if (values.size() > kMaxLength) {
    throw InvalidPermutation("length " + std::to_string(values.size()) + " exceeds " +
                             std::to_string(kMaxLength));
  }
  const auto n = static_cast<int>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  std::vector<Permutation::value_type> out;
  out.reserve(values.size());
  for (int v : values) {
    if (v < 1 || v > n || seen[v]) {
      throw InvalidPermutation("values must be a bijection of 1.." + std::to_string(n));
    }
    seen[v] = true;
    out.push_back(static_cast<Permutation::value_type>(v));
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::span<const int> values) : values_(checked_values(values)) {}

Permutation::Permutation(std::initializer_list<int> values)
    : values_(checked_values(std::span<const int>(values.begin(), values.size()))) {}

Permutation Permutation::identity(std::size_t n) {
  if (n > kMaxLength) throw InvalidPermutation("identity length too large");
  std::vector<value_type> v(n);
  std::iota(v.begin(), v.end(), value_type{1});
  return from_trusted(std::move(v));
}

Permutation Permutation::delete_at(std::size_t index) const {
  const value_type removed = values_[index];
  std::vector<value_type> out;
  out.reserve(values_.size() - 1);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i == index) continue;
    const value_type v = values_[i];
    out.push_back(v > removed ? static_cast<value_type>(v - 1) : v);
  }
  return from_trusted(std::move(out));
}

Permutation Permutation::insert_at(std::size_t index, int value) const {
  std::vector<value_type> out;
  out.reserve(values_.size() + 1);
  for (std::size_t i = 0; i <= values_.size(); ++i) {
    if (i == index) out.push_back(static_cast<value_type>(value));
    if (i == values_.size()) break;
    const value_type v = values_[i];
    out.push_back(v >= value ? static_cast<value_type>(v + 1) : v);
  }
  return from_trusted(std::move(out));
}

std::uint64_t Permutation::pack() const {
  if (values_.size() > kMaxPackedLength) {
    throw DomainExceeded("cannot pack a permutation longer than " +
                         std::to_string(kMaxPackedLength));
  }
  std::uint64_t key = values_.size();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    key |= static_cast<std::uint64_t>(values_[i] - 1) << (4 * (i + 1));
  }
  return key;
}

Permutation Permutation::unpack(std::uint64_t key) {
  const std::size_t n = key & 0xF;
  std::vector<value_type> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<value_type>(((key >> (4 * (i + 1))) & 0xF) + 1);
  }
  return from_trusted(std::move(v));
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(),
                                                b.values_.begin(), b.values_.end());
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the value bytes, seeded with the length.
  std::uint64_t h = 1469598103934665603ULL ^ p.size();
  for (auto v : p.values()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation standardize(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n > kMaxLength) throw InvalidPointSet("too many points");
  std::vector<std::size_t> by_x(n), by_y(n);
  std::iota(by_x.begin(), by_x.end(), 0);
  std::iota(by_y.begin(), by_y.end(), 0);
  std::sort(by_x.begin(), by_x.end(),
            [&](std::size_t a, std::size_t b) { return points[a].x < points[b].x; });
  std::sort(by_y.begin(), by_y.end(),
            [&](std::size_t a, std::size_t b) { return points[a].y < points[b].y; });
  for (std::size_t i = 1; i < n; ++i) {
    if (points[by_x[i]].x == points[by_x[i - 1]].x) {
      throw InvalidPointSet("two points share x = " + std::to_string(points[by_x[i]].x));
    }
    if (points[by_y[i]].y == points[by_y[i - 1]].y) {
      throw InvalidPointSet("two points share y = " + std::to_string(points[by_y[i]].y));
    }
  }
  std::vector<Permutation::value_type> height(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    height[by_y[rank]] = static_cast<Permutation::value_type>(rank + 1);
  }
  std::vector<Permutation::value_type> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = height[by_x[i]];
  return Permutation::from_trusted(std::move(out));
}

PointSet plot(const Permutation& pi) {
  PointSet pts;
  pts.reserve(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    pts.push_back({static_cast<long long>(i + 1), pi[i]});
  }
  return pts;
}

Permutation pattern_of(std::span<const int> distinct_values) {
  PointSet pts;
  pts.reserve(distinct_values.size());
  for (std::size_t i = 0; i < distinct_values.size(); ++i) {
    pts.push_back({static_cast<long long>(i), distinct_values[i]});
  }
  return standardize(pts);
}

bool contains(const Permutation& pattern, const Permutation& text) {
  const std::size_t k = pattern.size();
  const std::size_t n = text.size();
  if (k == 0) return true;
  if (k > n) return false;

  // For pattern position j, `lower[j]` is the earlier position whose value
  // is the largest one below pattern[j] (or -1); `upper[j]` likewise from
  // above. A text value placed at j must sit strictly between the text values
  // already matched at those two positions, which keeps the partial match
  // order-isomorphic at every step.
  std::array<int, kMaxLength + 1> lower{};
  std::array<int, kMaxLength + 1> upper{};
  for (std::size_t j = 0; j < k; ++j) {
    int lo = -1, hi = -1;
    for (std::size_t t = 0; t < j; ++t) {
      if (pattern[t] < pattern[j]) {
        if (lo < 0 || pattern[t] > pattern[static_cast<std::size_t>(lo)]) lo = static_cast<int>(t);
      } else if (hi < 0 || pattern[t] < pattern[static_cast<std::size_t>(hi)]) {
        hi = static_cast<int>(t);
      }
    }
    lower[j] = lo;
    upper[j] = hi;
  }

  std::array<int, kMaxLength + 1> matched_value{};
  std::array<std::size_t, kMaxLength + 1> next_index{};
  const auto tv = text.values();
  std::size_t j = 0;
  next_index[0] = 0;
  while (true) {
    const int lo = lower[j] < 0 ? 0 : matched_value[static_cast<std::size_t>(lower[j])];
    const int hi = upper[j] < 0 ? static_cast<int>(n) + 1
                                : matched_value[static_cast<std::size_t>(upper[j])];
    const std::size_t last = n - (k - j);  // leaves room for the rest
    std::size_t i = next_index[j];
    while (i <= last && !(tv[i] > lo && tv[i] < hi)) ++i;
    if (i <= last) {
      matched_value[j] = tv[i];
      next_index[j] = i + 1;
      if (j + 1 == k) return true;
      ++j;
      next_index[j] = i + 1;
    } else {
      if (j == 0) return false;
      --j;
    }
  }
}

Permutation inverse(const Permutation& pi) {
  std::vector<Permutation::value_type> out(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    out[static_cast<std::size_t>(pi[i] - 1)] = static_cast<Permutation::value_type>(i + 1);
  }
  return Permutation::from_trusted(std::move(out));
}

Permutation reverse_complement(const Permutation& pi) {
  PointSet pts = plot(pi);
  for (auto& p : pts) p = {-p.x, -p.y};
  return standardize(pts);
}

Permutation rotate90(const Permutation& pi) {
  PointSet pts = plot(pi);
  for (auto& p : pts) p = {-p.y, p.x};
  return standardize(pts);
}

Permutation rotate(const Permutation& pi, int quarter_turns) {
  const int turns = ((quarter_turns % 4) + 4) % 4;
  Permutation out = pi;
  for (int t = 0; t < turns; ++t) out = rotate90(out);
  return out;
}

Permutation direct_sum(const Permutation& pi, const Permutation& sigma) {
  const std::size_t k = pi.size();
  if (k + sigma.size() > kMaxLength) throw InvalidPermutation("sum too long");
  std::vector<Permutation::value_type> out(pi.values().begin(), pi.values().end());
  for (auto v : sigma.values()) out.push_back(static_cast<Permutation::value_type>(v + k));
  return Permutation::from_trusted(std::move(out));
}

Permutation skew_sum(const Permutation& pi, const Permutation& sigma) {
  const std::size_t l = sigma.size();
  if (pi.size() + l > kMaxLength) throw InvalidPermutation("skew sum too long");
  std::vector<Permutation::value_type> out;
  out.reserve(pi.size() + l);
  for (auto v : pi.values()) out.push_back(static_cast<Permutation::value_type>(v + l));
  for (auto v : sigma.values()) out.push_back(v);
  return Permutation::from_trusted(std::move(out));
}

namespace {

Permutation segment_pattern(const Permutation& pi, std::size_t begin, std::size_t end) {
  std::vector<int> vals(pi.values().begin() + static_cast<std::ptrdiff_t>(begin),
                        pi.values().begin() + static_cast<std::ptrdiff_t>(end));
  return pattern_of(vals);
}

// Split points: a prefix of length i+1 is a sum block iff its maximum is
// i+1, and a skew block iff its minimum is n-i.
std::vector<Permutation> components(const Permutation& pi, bool skew) {
  if (pi.empty()) throw EmptyPermutation("decomposition of the empty permutation");
  const std::size_t n = pi.size();
  std::vector<Permutation> out;
  std::size_t start = 0;
  int running_max = 0;
  int running_min = static_cast<int>(n) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    running_max = std::max(running_max, pi[i]);
    running_min = std::min(running_min, pi[i]);
    const bool boundary = skew ? running_min == static_cast<int>(n - i)
                               : running_max == static_cast<int>(i + 1);
    if (boundary) {
      out.push_back(segment_pattern(pi, start, i + 1));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

std::vector<Permutation> sum_components(const Permutation& pi) { return components(pi, false); }
std::vector<Permutation> skew_components(const Permutation& pi) { return components(pi, true); }

bool is_sum_decomposable(const Permutation& pi) {
  int running_max = 0;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    running_max = std::max(running_max, pi[i]);
    if (running_max == static_cast<int>(i + 1)) return true;
  }
  return false;
}

bool is_skew_decomposable(const Permutation& pi) {
  const int n = static_cast<int>(pi.size());
  int running_min = n + 1;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    running_min = std::min(running_min, pi[i]);
    if (running_min == n - static_cast<int>(i)) return true;
  }
  return false;
}

std::vector<IndexRange> proper_intervals(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::vector<IndexRange> out;
  for (std::size_t a = 0; a < n; ++a) {
    int lo = pi[a], hi = pi[a];
    for (std::size_t b = a + 1; b < n; ++b) {
      lo = std::min(lo, pi[b]);
      hi = std::max(hi, pi[b]);
      const std::size_t size = b - a + 1;
      if (size >= n) break;
      if (static_cast<std::size_t>(hi - lo) + 1 == size) out.push_back({a + 1, b + 1});
    }
  }
  return out;
}

std::vector<Permutation> one_point_deletions(const Permutation& pi) {
  if (pi.empty()) throw EmptyPermutation("no entry to delete");
  std::set<Permutation> out;
  for (std::size_t i = 0; i < pi.size(); ++i) out.insert(pi.delete_at(i));
  return {out.begin(), out.end()};
}

std::vector<Permutation> one_point_extensions(const Permutation& pi) {
  std::set<Permutation> out;
  const std::size_t n = pi.size();
  for (std::size_t pos = 0; pos <= n; ++pos) {
    for (int v = 1; v <= static_cast<int>(n) + 1; ++v) out.insert(pi.insert_at(pos, v));
  }
  return {out.begin(), out.end()};
}

std::string to_string(const Permutation& pi) {
  if (pi.empty()) return "ε";
  std::ostringstream os;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) os << ' ';
    os << pi[i];
  }
  return os.str();
}

std::string to_compact_string(const Permutation& pi) {
  if (pi.empty() || pi.size() > 9) return to_string(pi);
  std::string s;
  for (auto v : pi.values()) s.push_back(static_cast<char>('0' + v));
  return s;
}

Permutation parse_permutation(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty() || text == "ε" || text == "e" || text == "eps") return {};

  const bool has_separator = std::any_of(text.begin(), text.end(),
                                         [&](char c) { return is_space(c) || c == ','; });
  std::vector<int> values;
  if (!has_separator) {
    if (text.size() > 9) {
      throw ParseError("compact form only allowed for n <= 9: '" + std::string(text) + "'");
    }
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("bad digit in '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  } else {
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      if (!std::all_of(token.begin(), token.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          token.size() > 3) {
        throw ParseError("bad entry '" + token + "'");
      }
      values.push_back(std::stoi(token));
      token.clear();
    };
    for (char c : text) {
      if (is_space(c) || c == ',') {
        flush();
      } else {
        token.push_back(c);
      }
    }
    flush();
  }
  return Permutation(values);
}

}  // namespace widdershins
