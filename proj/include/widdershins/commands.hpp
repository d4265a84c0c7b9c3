#pragma once

// Verification claims, enumeration and one-shot queries behind the CLI.
// Every result renders both as text and as JSON with the same content.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "widdershins/pattern_class.hpp"

namespace widdershins {

using Json = nlohmann::ordered_json;

struct VerificationReport {
  std::string claim;
  Json parameters = Json::object();
  bool passed = false;
  std::optional<std::string> counterexample;
  Json details = Json::object();
  /// Not serialized unless asked for, so reports stay reproducible.
  double wall_seconds = 0.0;

  friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.claim == b.claim && a.parameters == b.parameters && a.passed == b.passed &&
           a.counterexample == b.counterexample && a.details == b.details &&
           a.wall_seconds == b.wall_seconds;
  }
};

Json to_json(const VerificationReport& report, bool include_timing = false);
VerificationReport report_from_json(const Json& j);
std::string to_text(const VerificationReport& report, bool include_timing = false);

struct VerifyBounds {
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> max_k;
  std::optional<std::size_t> graph_n;
  std::optional<std::size_t> perm_n;
  std::optional<std::size_t> samples;
  /// Unlocks the long cor3.5 run past length 8.
  bool extended = false;
};

struct RunContext {
  std::size_t workers = 0;
  LevelCache* cache = nullptr;
  std::function<void(const std::string&)> progress;

  SearchOptions search() const { return {workers, cache, progress}; }
};

/// prop3.3, cor3.5, cor3.2, prop4.3, prop4.4, fig1, prop1.1, oracles, encoding.
const std::vector<std::string>& known_claims();

/// Throws ParseError for an unknown claim and DomainExceeded for bounds
/// outside the supported range.
VerificationReport run_verify(std::string_view claim, const VerifyBounds& bounds,
                              const RunContext& context = {});

struct CommandOutput {
  std::string text;
  Json json;
};

/// Kinds: contains <sigma> <pi>, graph-of <pi>, decompose <pi>,
/// member <pi> [class], realizers <graph6|catalog-name>.
CommandOutput run_query(std::string_view kind, const std::vector<std::string>& args);

struct EnumerateRequest {
  std::string class_name = "W";
  std::size_t max_n = 6;
  bool counts_only = false;
};

CommandOutput run_enumerate(const EnumerateRequest& request, const RunContext& context = {});

}  // namespace widdershins
