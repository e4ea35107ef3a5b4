#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "risc2win/model.hpp"
#include "risc2win/reputation.hpp"
#include "risc2win/strategy.hpp"

namespace risc2win {

inline constexpr std::string_view kCodeVersion = "risc2win 1.0.0";

struct Scenario {
  TrafficConfig traffic;
  ReputationConfig reputation;
  double w = 10.0;
  StrategyProfile profile;

  /// Throws ConfigError.
  void validate() const;
  /// Stable one-line description of every parameter except the seed.
  std::string canonical_text() const;

  bool operator==(const Scenario&) const = default;
};

struct RunOptions {
  bool record_events = true;
  bool record_r_trace = true;      // r in force during every slot
  bool record_slot_trace = false;  // behavior and QoS levels of every slot
};

struct SlotSample {
  BehaviorState behavior;
  std::uint8_t f_a = 0;
  std::uint8_t f_b = 0;
  bool operator==(const SlotSample&) const = default;
};

struct RunMetadata {
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;  // FNV-1a of Scenario::canonical_text()
  std::string rng_scheme;
  std::string code_version;
  bool operator==(const RunMetadata&) const = default;
};

struct SimulationResult {
  // Completed sessions in boundary order; at a shared boundary B precedes A.
  std::vector<SessionRecord> sessions;
  std::vector<ReputationEvent> events;
  std::vector<int> r_trace;
  std::vector<SlotSample> slot_trace;
  UtilityReport report;
  std::optional<std::int64_t> revoked_at;
  bool halted = false;  // stopped early under FloorPolicy::HaltOnRevocation
  std::int64_t slots_simulated = 0;
  int r_min = 0;
  int r_max = 0;
  RunMetadata metadata;

  bool operator==(const SimulationResult&) const = default;
};

std::uint64_t fnv1a64(std::string_view text);

/// Simulates slots [0, horizon) with traffic drawn from `seed` (overriding
/// scenario.traffic.seed). Sessions ending exactly at the horizon are
/// completed; sessions still running are dropped.
SimulationResult run(const Scenario& scenario, std::uint64_t seed, const RunOptions& options = {});

/// Same, over pre-generated schedules. Schedules must cover the horizon.
SimulationResult run(const Scenario& scenario, const SessionSchedule& schedule_a,
                     const SessionSchedule& schedule_b, std::uint64_t seed,
                     const RunOptions& options = {});

/// Exponential smoother with gain n^-0.05 for the n-th sample (gain 1 at n = 1).
/// For plotting only. Throws DomainError on empty input.
std::vector<double> smooth_trajectory(std::span<const double> values);

}  // namespace risc2win
