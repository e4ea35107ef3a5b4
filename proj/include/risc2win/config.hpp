#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "risc2win/engine.hpp"

namespace risc2win {

inline constexpr std::int64_t kDefaultRunHorizon = 100000;
inline constexpr std::int64_t kDefaultSweepHorizon = 20000;

/// Contents of a `key = value` configuration file.
///
/// Recognized keys: rho_a, rho_b, w, R, r0, epsilon, horizon, seed, seeds,
/// floor_policy, modified_cap, profile, and either len_min + len_max (uniform
/// lengths) or pmf ("6:0.1 7:0.1 ..."). Blank lines and `#` comments are
/// ignored. Defaults: w = 10, R = r0 = 10, epsilon = 0.15, lengths uniform
/// on 6..15, neutral profile.
struct RunConfig {
  Scenario scenario;
  double epsilon = 0.15;
  std::vector<std::uint64_t> seeds;
  std::optional<std::int64_t> horizon;  // unset: command-specific default

  RunConfig();
  /// Scenario with the horizon resolved against `default_horizon`.
  Scenario resolved(std::int64_t default_horizon) const;

  bool operator==(const RunConfig&) const = default;
};

/// Throws ConfigError with the offending line number.
RunConfig parse_config(std::string_view text);

/// Throws ConfigError if the file cannot be read or parsed.
RunConfig load_config(const std::filesystem::path& path);

/// Writes every parameter so that parse_config reproduces `cfg` exactly.
std::string to_config_text(const RunConfig& cfg);

/// Parses "1,2,3" or "1 2 3".
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

}  // namespace risc2win
