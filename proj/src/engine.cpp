#include "risc2win/engine.hpp"

#include <algorithm>
#include <cmath>

#include "risc2win/format.hpp"
#include "risc2win/rng.hpp"

namespace risc2win {

void Scenario::validate() const {
  traffic.validate();
  reputation.validate();
  if (!(w > 0.0)) throw ConfigError("w must be positive");
  if (!profile.valid()) throw ConfigError("strategy profile violates threshold ordering");
}

std::string Scenario::canonical_text() const {
  std::string s;
  s += "rho_a=" + format_double(traffic.rho_a);
  s += ";rho_b=" + format_double(traffic.rho_b);
  s += ";pmf=";
  for (const auto& [len, p] : traffic.length_pmf) {
    s += std::to_string(len) + ":" + format_double(p) + ",";
  }
  s += ";horizon=" + std::to_string(traffic.horizon);
  s += ";R=" + std::to_string(reputation.R);
  s += ";r0=" + std::to_string(reputation.r0);
  s += ";floor_policy=" + std::string(to_string(reputation.floor_policy));
  s += ";modified_cap=" + format_double(reputation.cap());
  s += ";w=" + format_double(w);
  s += ";profile=" + profile.to_string();
  return s;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SimulationResult run(const Scenario& scenario, std::uint64_t seed, const RunOptions& options) {
  TrafficConfig traffic = scenario.traffic;
  traffic.seed = seed;
  return run(scenario, generate_schedule(traffic, Station::A), generate_schedule(traffic, Station::B),
             seed, options);
}

SimulationResult run(const Scenario& scenario, const SessionSchedule& schedule_a,
                     const SessionSchedule& schedule_b, std::uint64_t seed,
                     const RunOptions& options) {
  scenario.validate();
  const std::int64_t horizon = scenario.traffic.horizon;
  const auto& sa = schedule_a.sessions;
  const auto& sb = schedule_b.sessions;
  if (sa.empty() || sb.empty() || sa.back().end() < horizon || sb.back().end() < horizon) {
    throw DomainError("run: schedules do not cover the horizon");
  }

  const ReputationConfig& rcfg = scenario.reputation;
  const ThresholdsA tha = scenario.profile.a;
  const ThresholdsB thb = scenario.profile.b;

  SimulationResult res;
  res.metadata = {seed, fnv1a64(scenario.canonical_text()), std::string(rng::kSchemeId),
                  std::string(kCodeVersion)};
  res.sessions.reserve(sa.size() + sb.size());
  if (options.record_events) res.events.reserve(sa.size() + sb.size());
  if (options.record_r_trace) res.r_trace.reserve(static_cast<std::size_t>(horizon));
  if (options.record_slot_trace) res.slot_trace.reserve(static_cast<std::size_t>(horizon));

  ReputationState rep = ReputationState::initial(rcfg);
  res.r_min = res.r_max = rep.r;

  std::size_t ia = 0;
  std::size_t ib = 0;
  BehaviorState bs;
  {
    const BDecision db = decide_b_at_b_start(thb, rep.r, sb[0].icos);
    bs.cos_b = db.cos_b;
    bs.ac_b = db.ac_b;
    const ADecision da = decide_a_at_a_start(tha, rep.r, sa[0].icos, bs.cos_b);
    bs.cos_a = da.cos_a;
    bs.ac_a = da.ac_a;
    bs.ac_ba = da.ac_ba;
  }

  std::int64_t t = 0;
  int high_a = 0;
  int high_b = 0;
  while (true) {
    const std::int64_t end_a = sa[ia].end();
    const std::int64_t end_b = sb[ib].end();
    const std::int64_t next = std::min({end_a, end_b, horizon});

    // Behavior is constant between boundaries, so the whole stretch accrues at once.
    const int fa = qos_level(Station::A, bs.ac_a, bs.ac_ba, bs.ac_b);
    const int fb = qos_level(Station::B, bs.ac_a, bs.ac_ba, bs.ac_b);
    const auto span = static_cast<int>(next - t);
    high_a += fa * span;
    high_b += fb * span;
    if (options.record_r_trace) res.r_trace.insert(res.r_trace.end(), span, rep.r);
    if (options.record_slot_trace) {
      res.slot_trace.insert(res.slot_trace.end(), span,
                            SlotSample{bs, static_cast<std::uint8_t>(fa), static_cast<std::uint8_t>(fb)});
    }
    t = next;

    const bool a_ended = end_a == t;
    const bool b_ended = end_b == t;
    if (!a_ended && !b_ended) break;  // horizon reached mid-session for both

    const double u_a = a_ended ? static_cast<double>(high_a) / sa[ia].length : 0.0;
    const double u_b = b_ended ? static_cast<double>(high_b) / sb[ib].length : 0.0;

    if (b_ended) {
      ReputationUpdate up = on_b_session_end(rep, bs.cos_b, u_b, rcfg, t);
      rep = up.state;
      if (options.record_events) res.events.push_back(up.event);
    }
    if (a_ended) {
      // bs.cos_b is still the B session covering slot t-1, i.e. the one whose
      // half-open interval (start, end] contains t.
      ReputationUpdate up = on_a_session_end(rep, bs.cos_a, u_a, bs.cos_b, rcfg, t);
      rep = up.state;
      if (options.record_events) res.events.push_back(up.event);
    }
    res.r_min = std::min(res.r_min, rep.r);
    res.r_max = std::max(res.r_max, rep.r);

    if (b_ended) {
      rep = record_utility(rep, Station::B, u_b);
      const Session& s = sb[ib];
      res.sessions.push_back(
          SessionRecord{Station::B, s.index, s.start, s.length, s.icos, bs.cos_b, high_b, u_b});
      high_b = 0;
      ++ib;
    }
    if (a_ended) {
      rep = record_utility(rep, Station::A, u_a);
      const Session& s = sa[ia];
      res.sessions.push_back(
          SessionRecord{Station::A, s.index, s.start, s.length, s.icos, bs.cos_a, high_a, u_a});
      high_a = 0;
      ++ia;
    }

    if (rcfg.floor_policy == FloorPolicy::HaltOnRevocation && rep.revoked_at) {
      res.halted = true;
      break;
    }
    if (t >= horizon) break;

    // Strategy decisions with the post-update reputation. B's announcement
    // always precedes any A rule that reads it.
    if (b_ended) {
      const BDecision db = decide_b_at_b_start(thb, rep.r, sb[ib].icos);
      bs.cos_b = db.cos_b;
      bs.ac_b = db.ac_b;
    }
    if (a_ended) {
      const ADecision da = decide_a_at_a_start(tha, rep.r, sa[ia].icos, bs.cos_b);
      bs.cos_a = da.cos_a;
      bs.ac_a = da.ac_a;
      bs.ac_ba = da.ac_ba;
      if (!b_ended) bs.ac_b = decide_b_at_a_start(thb, rep.r, bs.cos_b);
    } else {
      const ARelayDecision dr = decide_a_at_b_start(tha, rep.r, bs.cos_a, bs.cos_b);
      bs.ac_a = dr.ac_a;
      bs.ac_ba = dr.ac_ba;
    }
  }

  res.slots_simulated = t;
  res.revoked_at = rep.revoked_at;
  res.report = aggregate_utilities(res.sessions, scenario.w);
  return res;
}

std::vector<double> smooth_trajectory(std::span<const double> values) {
  if (values.empty()) throw DomainError("smooth_trajectory: empty input");
  std::vector<double> out;
  out.reserve(values.size());
  out.push_back(values[0]);
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double gain = std::pow(static_cast<double>(i + 1), -0.05);
    out.push_back((1.0 - gain) * out.back() + gain * values[i]);
  }
  return out;
}

}  // namespace risc2win
