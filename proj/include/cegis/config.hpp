#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cegis/pairing.hpp"

namespace cegis {

/// Everything `cegis-lab run` needs. Unset optionals take family defaults.
struct RunConfig {
  std::string family = "chain";
  /// chain "5"; rectangle "-1,1,-1,1" or "universal"; diagonal "diag:3" or
  /// "fin:[[0,2],[1,7]]"; gold "full" or "minus:17".
  std::string target;
  std::string engine = "cegis";
  /// Empty selects the family default.
  std::string generalizer;
  std::string strategy = "first-found";
  Natural seed = 0;
  std::string schedule = "canonical";
  std::optional<std::size_t> budget;
  std::optional<std::size_t> trace_length;
  std::optional<std::size_t> window;
  /// Chain: B = cap + 2. Diagonal, gold: B itself.
  std::optional<Natural> universe_bound;
  std::optional<std::int64_t> grid;
  std::vector<Natural> avoid;
  std::string out;

  bool operator==(const RunConfig&) const = default;
};

/// Flat `key = value` text, TOML-compatible: strings quoted, integers bare,
/// `avoid` as an integer array. Unset optionals are omitted.
std::string to_config_text(const RunConfig& config);

/// Throws ConfigError on unknown keys, malformed values, or duplicates.
RunConfig parse_config_text(std::string_view text);
RunConfig load_config(const std::string& path);

}  // namespace cegis
