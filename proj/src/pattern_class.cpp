#include "widdershins/pattern_class.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <unordered_set>

#include "widdershins/parallel.hpp"

namespace widdershins {

PatternBasis::PatternBasis(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
  if (!is_antichain(patterns_)) throw NotAntichain("basis patterns must be pairwise incomparable");
}

std::size_t PatternBasis::max_length() const {
  std::size_t m = 0;
  for (const auto& p : patterns_) m = std::max(m, p.size());
  return m;
}

PatternBasis parse_basis(std::string_view text) {
  std::vector<Permutation> out;
  std::string token;
  auto flush = [&] {
    const auto first = token.find_first_not_of(" \t\r");
    if (first != std::string::npos) out.push_back(parse_permutation(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == '\n' || c == ';') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return PatternBasis(std::move(out));
}

std::string format_basis(const PatternBasis& basis) {
  std::string out;
  for (const auto& p : basis.patterns()) {
    out += to_string(p);
    out += '\n';
  }
  return out;
}

bool avoids_all(const Permutation& pi, std::span<const Permutation> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& b) { return contains(b, pi); });
}

bool avoids_all(const Permutation& pi, const PatternBasis& basis) {
  return avoids_all(pi, std::span<const Permutation>(basis.patterns()));
}

bool is_antichain(std::span<const Permutation> perms) {
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = 0; j < perms.size(); ++j) {
      if (i != j && contains(perms[i], perms[j])) return false;
    }
  }
  return true;
}

MembershipOracle avoidance_oracle(const PatternBasis& basis) {
  std::string id = "av:";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) id += ',';
    id += to_compact_string(basis.patterns()[i]);
  }
  return {std::move(id), [basis](const Permutation& p) { return avoids_all(p, basis); },
          std::nullopt};
}

MembershipOracle union_oracle(MembershipOracle a, MembershipOracle b) {
  std::optional<std::size_t> trusted;
  if (a.trusted_max_length && b.trusted_max_length) {
    trusted = std::min(*a.trusted_max_length, *b.trusted_max_length);
  } else {
    trusted = a.trusted_max_length ? a.trusted_max_length : b.trusted_max_length;
  }
  std::string id = "(" + a.id + ")|(" + b.id + ")";
  auto fa = std::move(a.accepts);
  auto fb = std::move(b.accepts);
  return {std::move(id), [fa, fb](const Permutation& p) { return fa(p) || fb(p); }, trusted};
}

MembershipOracle always_true_oracle() {
  return {"all", [](const Permutation&) { return true; }, std::nullopt};
}

namespace {

ClassLevel extend_level(const MembershipOracle& member, const std::vector<Permutation>& previous,
                        std::size_t workers) {
  std::unordered_set<std::uint64_t> known;
  known.reserve(previous.size() * 2);
  for (const auto& p : previous) known.insert(p.pack());

  if (workers == 0) workers = default_workers();
  std::vector<ClassLevel> partial(workers);
  parallel_chunks(previous.size(), workers, [&](std::size_t begin, std::size_t end, std::size_t w) {
    ClassLevel& out = partial[w];
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Permutation& parent = previous[idx];
      const std::size_t m = parent.size();
      for (std::size_t pos = 0; pos <= m; ++pos) {
        for (int v = 1; v <= static_cast<int>(m) + 1; ++v) {
          const Permutation candidate = parent.insert_at(pos, v);
          // Each candidate is handled only from its canonical parent: the
          // deletion at the smallest position that lands in the class.
          bool duplicate = false;
          for (std::size_t q = 0; q < pos && !duplicate; ++q) {
            duplicate = known.contains(candidate.delete_at(q).pack());
          }
          if (duplicate) continue;
          if (member(candidate)) {
            out.members.push_back(candidate);
          } else if (pos == 0) {
            // Only pos == 0 can have every deletion inside the class.
            bool minimal = true;
            for (std::size_t q = 1; q <= m && minimal; ++q) {
              minimal = known.contains(candidate.delete_at(q).pack());
            }
            if (minimal) out.basis.push_back(candidate);
          }
        }
      }
    }
  });

  ClassLevel merged;
  for (auto& part : partial) {
    merged.members.insert(merged.members.end(), part.members.begin(), part.members.end());
    merged.basis.insert(merged.basis.end(), part.basis.begin(), part.basis.end());
  }
  std::sort(merged.members.begin(), merged.members.end());
  std::sort(merged.basis.begin(), merged.basis.end());
  return merged;
}

void check_domain(const MembershipOracle& member, std::size_t max_n) {
  if (member.trusted_max_length && max_n > *member.trusted_max_length) {
    throw DomainExceeded("oracle '" + member.id + "' is trusted only up to length " +
                         std::to_string(*member.trusted_max_length));
  }
  if (max_n > kMaxPackedLength) {
    throw DomainExceeded("level search supports lengths up to " +
                         std::to_string(kMaxPackedLength));
  }
}

}  // namespace

std::vector<ClassLevel> explore_class(const MembershipOracle& member, std::size_t max_n,
                                      const SearchOptions& options) {
  check_domain(member, max_n);
  std::vector<ClassLevel> levels;
  levels.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (options.cache) {
      if (auto cached = options.cache->load(member.id, n)) {
        levels.push_back(std::move(*cached));
        if (options.progress) {
          options.progress("length " + std::to_string(n) + ": " +
                           std::to_string(levels.back().members.size()) + " members (cached)");
        }
        continue;
      }
    }
    const auto start = std::chrono::steady_clock::now();
    ClassLevel level;
    if (n == 0) {
      if (member(Permutation{})) {
        level.members.emplace_back();
      } else {
        level.basis.emplace_back();
      }
    } else {
      level = extend_level(member, levels[n - 1].members, options.workers);
    }
    if (options.cache) options.cache->store(member.id, n, level);
    if (options.progress) {
      const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
      std::ostringstream os;
      os << "length " << n << ": " << level.members.size() << " members, " << level.basis.size()
         << " basis elements (" << secs.count() << " s)";
      options.progress(os.str());
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<std::size_t> ClassEnumeration::counts() const {
  std::vector<std::size_t> out;
  out.reserve(members.size());
  for (const auto& level : members) out.push_back(level.size());
  return out;
}

ClassEnumeration enumerate_class(const MembershipOracle& member, std::size_t max_n,
                                 const SearchOptions& options) {
  auto levels = explore_class(member, max_n, options);
  ClassEnumeration out;
  for (auto& level : levels) out.members.push_back(std::move(level.members));
  return out;
}

PatternBasis compute_basis(const MembershipOracle& member, std::size_t max_len,
                           const SearchOptions& options) {
  auto levels = explore_class(member, max_len, options);
  std::vector<Permutation> all;
  for (auto& level : levels) all.insert(all.end(), level.basis.begin(), level.basis.end());
  return PatternBasis(std::move(all));
}

std::size_t union_search_bound(const PatternBasis& c, const PatternBasis& d) {
  return c.max_length() + d.max_length();
}

PatternBasis union_basis(const PatternBasis& c, const PatternBasis& d,
                         std::optional<std::size_t> max_len, const SearchOptions& options) {
  const std::size_t bound = max_len.value_or(union_search_bound(c, d));
  return compute_basis(union_oracle(avoidance_oracle(c), avoidance_oracle(d)), bound, options);
}

}  // namespace widdershins
