#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ftau/stopping.hpp"

namespace ftau {

// A parsed instance file: the filtration, the optional random time, and a
// free-form "meta" object carried through round trips untouched.
struct Instance {
  Filtration filtration;
  std::optional<StoppingTime> tau;
  nlohmann::ordered_json meta;  // null when absent

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.filtration == b.filtration && a.tau == b.tau && a.meta == b.meta;
  }
};

struct ParseOptions {
  enum class UnknownKeys { warn, error };
  UnknownKeys unknown_keys = UnknownKeys::warn;
};

struct ParseResult {
  Instance instance;
  std::vector<std::string> warnings;
  // Validity of tau as a stopping time (reported, never assumed);
  // nullopt when the file has no "tau".
  std::optional<StoppingTimeReport> tau_validity;
};

// Parses and validates an instance document:
//   {
//     "omega":      ["w1", ...],
//     "times":      [0, 1, ...],               // integers or finite decimals
//     "filtration": {"0": [["w1","w2"], ...], ...},
//     "terminal":   [["w1"], ...],             // optional, default: last level
//     "tau":        {"w1": 1, ..., "w8": "inf"},  // optional
//     "meta":       { ... }                    // optional, preserved verbatim
//   }
// The filtration is validated (NonRefiningError when a level fails to
// refine an earlier one); tau validity is only reported.
ParseResult parse_instance_text(std::string_view text, const ParseOptions& opts = {});
ParseResult parse_instance_file(const std::filesystem::path& path,
                                const ParseOptions& opts = {});

// Canonical serialization: blocks in canonical order, times as JSON
// numbers, tau = inf as the string "inf". parse(serialize(x)) == x.
std::string serialize_instance(const Instance& inst);

}  // namespace ftau
