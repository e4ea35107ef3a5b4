#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "risc2win/model.hpp"

namespace risc2win {

enum class FloorPolicy : std::uint8_t {
  Unclamped,         // r may go negative; first r < 0 is recorded as revocation
  ClampAtZero,       // decrements stop at 0
  HaltOnRevocation,  // as Unclamped, but the simulation stops at revocation
};

std::string_view to_string(FloorPolicy p);
FloorPolicy parse_floor_policy(std::string_view text);

struct ReputationConfig {
  int R = 10;
  int r0 = 10;
  FloorPolicy floor_policy = FloorPolicy::Unclamped;
  // Upper bound of the modified reputation. Unset means R; 1.0 gives the
  // literal "min{1, ...}" variant.
  std::optional<double> modified_cap;

  double cap() const { return modified_cap.value_or(static_cast<double>(R)); }
  void validate() const;

  bool operator==(const ReputationConfig&) const = default;
};

/// Station A's reputation and the AP's running per-session utility sums.
struct ReputationState {
  int r = 10;
  double sum_u_a = 0.0;
  double sum_u_b = 0.0;
  std::int64_t count_a = 0;
  std::int64_t count_b = 0;
  std::optional<std::int64_t> revoked_at;

  static ReputationState initial(const ReputationConfig& cfg) {
    ReputationState s;
    s.r = cfg.r0;
    return s;
  }

  double mean_u_a() const { return count_a ? sum_u_a / static_cast<double>(count_a) : 0.0; }
  double mean_u_b() const { return count_b ? sum_u_b / static_cast<double>(count_b) : 0.0; }

  bool operator==(const ReputationState&) const = default;
};

enum class ReputationEventKind : std::uint8_t { Unchanged, Incremented, Decremented, Revoked };

std::string_view to_string(ReputationEventKind k);

/// One reputation check at a session end. Carries its inputs so that a log
/// can be replayed through the automaton.
struct ReputationEvent {
  std::int64_t slot = 0;
  Station trigger = Station::A;  // whose session ended
  ReputationEventKind kind = ReputationEventKind::Unchanged;
  TrafficClass cos_ended = TrafficClass::BE;
  double utility = 0.0;
  TrafficClass cos_b_current = TrafficClass::BE;  // only meaningful for A
  int r_before = 0;
  int r_after = 0;
  double r_modified = 0.0;

  bool operator==(const ReputationEvent&) const = default;
};

struct ReputationUpdate {
  ReputationState state;
  ReputationEvent event;
};

/// Reputation boosted by the ratio of B's to A's mean utility when B is ahead:
/// min{cap, (r + 1) * mean_b / mean_a - 1}. Falls back to r until both
/// stations have completed a session; mean_a = 0 < mean_b yields cap.
double modified_reputation(const ReputationState& state, double cap);

/// Folds one completed session's utility into the running means.
/// Throws DomainError if u is outside [0, 1].
ReputationState record_utility(ReputationState state, Station station, double u);

/// Increment check at the end of a B session. `state` must not yet contain
/// the ending session's utility.
ReputationUpdate on_b_session_end(const ReputationState& state, TrafficClass cos_b_ended,
                                  double u_b, const ReputationConfig& cfg, std::int64_t slot);

/// Decrement check at the end of an A session. `cos_b_current` is the CoS of
/// the B session covering the slot just before the boundary.
ReputationUpdate on_a_session_end(const ReputationState& state, TrafficClass cos_a_ended,
                                  double u_a, TrafficClass cos_b_current,
                                  const ReputationConfig& cfg, std::int64_t slot);

/// Re-executes a recorded event log (grouped by slot, B before A, utilities
/// folded after both checks) and returns r after each event.
std::vector<int> replay(const ReputationConfig& cfg, std::span<const ReputationEvent> events);

}  // namespace risc2win
