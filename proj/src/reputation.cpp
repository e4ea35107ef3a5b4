#include "risc2win/reputation.hpp"

#include <algorithm>
#include <string>

namespace risc2win {

std::string_view to_string(FloorPolicy p) {
  switch (p) {
    case FloorPolicy::Unclamped: return "unclamped";
    case FloorPolicy::ClampAtZero: return "clamp_at_zero";
    case FloorPolicy::HaltOnRevocation: return "halt_on_revocation";
  }
  return "unclamped";
}

FloorPolicy parse_floor_policy(std::string_view text) {
  if (text == "unclamped") return FloorPolicy::Unclamped;
  if (text == "clamp_at_zero") return FloorPolicy::ClampAtZero;
  if (text == "halt_on_revocation") return FloorPolicy::HaltOnRevocation;
  throw ConfigError("unknown floor_policy '" + std::string(text) + "'");
}

std::string_view to_string(ReputationEventKind k) {
  switch (k) {
    case ReputationEventKind::Unchanged: return "unchanged";
    case ReputationEventKind::Incremented: return "incremented";
    case ReputationEventKind::Decremented: return "decremented";
    case ReputationEventKind::Revoked: return "revoked";
  }
  return "unchanged";
}

void ReputationConfig::validate() const {
  if (R < 1) throw ConfigError("R must be at least 1");
  if (r0 < 0 || r0 > R) throw ConfigError("r0 must lie in [0, R]");
  if (modified_cap && !(*modified_cap > 0.0)) throw ConfigError("modified_cap must be positive");
}

double modified_reputation(const ReputationState& state, double cap) {
  const double r = static_cast<double>(state.r);
  if (state.count_a == 0 || state.count_b == 0) return r;
  const double mean_a = state.mean_u_a();
  const double mean_b = state.mean_u_b();
  if (!(mean_b > mean_a)) return r;
  if (mean_a == 0.0) return cap;
  return std::min(cap, (r + 1.0) * mean_b / mean_a - 1.0);
}

ReputationState record_utility(ReputationState state, Station station, double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("record_utility: utility outside [0, 1]");
  if (station == Station::A) {
    state.sum_u_a += u;
    ++state.count_a;
  } else {
    state.sum_u_b += u;
    ++state.count_b;
  }
  return state;
}

ReputationUpdate on_b_session_end(const ReputationState& state, TrafficClass cos_b_ended,
                                  double u_b, const ReputationConfig& cfg, std::int64_t slot) {
  ReputationUpdate out{state, {}};
  ReputationEvent& ev = out.event;
  ev.slot = slot;
  ev.trigger = Station::B;
  ev.cos_ended = cos_b_ended;
  ev.utility = u_b;
  ev.cos_b_current = cos_b_ended;
  ev.r_before = state.r;
  ev.r_modified = modified_reputation(state, cfg.cap());

  const double R = static_cast<double>(cfg.R);
  if (cos_b_ended == TrafficClass::VO && u_b >= 1.0 - ev.r_modified / R) {
    out.state.r = std::min(cfg.R, state.r + 1);
    ev.kind = ReputationEventKind::Incremented;
  }
  ev.r_after = out.state.r;
  return out;
}

ReputationUpdate on_a_session_end(const ReputationState& state, TrafficClass cos_a_ended,
                                  double u_a, TrafficClass cos_b_current,
                                  const ReputationConfig& cfg, std::int64_t slot) {
  ReputationUpdate out{state, {}};
  ReputationEvent& ev = out.event;
  ev.slot = slot;
  ev.trigger = Station::A;
  ev.cos_ended = cos_a_ended;
  ev.utility = u_a;
  ev.cos_b_current = cos_b_current;
  ev.r_before = state.r;
  ev.r_modified = modified_reputation(state, cfg.cap());

  const double R = static_cast<double>(cfg.R);
  const bool triggered = cos_a_ended == TrafficClass::VO && u_a >= ev.r_modified / R &&
                         cos_b_current == TrafficClass::BE;
  if (triggered) {
    if (cfg.floor_policy == FloorPolicy::ClampAtZero) {
      out.state.r = std::max(0, state.r - 1);
      if (out.state.r != state.r) ev.kind = ReputationEventKind::Decremented;
    } else {
      out.state.r = state.r - 1;
      ev.kind = ReputationEventKind::Decremented;
      if (out.state.r < 0 && !state.revoked_at) {
        out.state.revoked_at = slot;
        ev.kind = ReputationEventKind::Revoked;
      }
    }
  }
  ev.r_after = out.state.r;
  return out;
}

std::vector<int> replay(const ReputationConfig& cfg, std::span<const ReputationEvent> events) {
  std::vector<int> trace;
  trace.reserve(events.size());
  ReputationState state = ReputationState::initial(cfg);

  std::size_t i = 0;
  while (i < events.size()) {
    const std::int64_t slot = events[i].slot;
    std::vector<std::pair<Station, double>> ended;
    for (; i < events.size() && events[i].slot == slot; ++i) {
      const ReputationEvent& ev = events[i];
      ReputationUpdate up =
          ev.trigger == Station::B
              ? on_b_session_end(state, ev.cos_ended, ev.utility, cfg, slot)
              : on_a_session_end(state, ev.cos_ended, ev.utility, ev.cos_b_current, cfg, slot);
      state = up.state;
      trace.push_back(state.r);
      ended.emplace_back(ev.trigger, ev.utility);
    }
    for (const auto& [station, u] : ended) state = record_utility(state, station, u);
  }
  return trace;
}

}  // namespace risc2win
