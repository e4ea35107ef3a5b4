#include <cmath>
#include <random>

#include "doctest.h"
#include "risc2win/reputation.hpp"

using namespace risc2win;
using enum TrafficClass;

namespace {

ReputationState at_r(int r) {
  ReputationState s;
  s.r = r;
  return s;
}

ReputationState with_means(int r, double mean_a, double mean_b) {
  ReputationState s = at_r(r);
  s = record_utility(s, Station::A, mean_a);
  s = record_utility(s, Station::B, mean_b);
  return s;
}

const ReputationConfig kCfg{10, 10, FloorPolicy::Unclamped, std::nullopt};

}  // namespace

TEST_CASE("modified reputation") {
  CHECK(modified_reputation(with_means(4, 0.5, 0.4), 10) == 4.0);
  CHECK(modified_reputation(with_means(4, 0.4, 0.6), 10) == doctest::Approx(6.5).epsilon(1e-15));
  CHECK(modified_reputation(with_means(9, 0.1, 0.9), 10) == 10.0);
  CHECK(modified_reputation(with_means(3, 0.0, 0.5), 10) == 10.0);

  // Literal cap of 1.
  CHECK(modified_reputation(with_means(4, 0.4, 0.6), 1.0) == 1.0);

  // Not enough data yet.
  ReputationState only_b = record_utility(at_r(2), Station::B, 1.0);
  CHECK(modified_reputation(only_b, 10) == 2.0);
  CHECK(modified_reputation(at_r(7), 10) == 7.0);
}

TEST_CASE("record utility keeps running means") {
  ReputationState s = at_r(10);
  s = record_utility(s, Station::A, 0.5);
  CHECK(s.mean_u_a() == 0.5);
  CHECK(s.count_a == 1);
  s = record_utility(s, Station::A, 1.0);
  CHECK(s.mean_u_a() == 0.75);
  const ReputationState before = s;
  s = record_utility(s, Station::B, 0.2);
  CHECK(s.mean_u_a() == before.mean_u_a());
  CHECK(s.count_a == before.count_a);
  CHECK(s.mean_u_b() == 0.2);
  CHECK_THROWS_AS(record_utility(s, Station::A, 1.5), DomainError);
  CHECK_THROWS_AS(record_utility(s, Station::B, -0.1), DomainError);
}

TEST_CASE("increment rule at the end of a B session") {
  // mean_b <= mean_a, so r_Am = r = 4; threshold 1 - 0.4.
  const ReputationState s = with_means(4, 0.5, 0.4);
  auto up = on_b_session_end(s, VO, 0.6, kCfg, 100);
  CHECK(up.state.r == 5);
  CHECK(up.event.kind == ReputationEventKind::Incremented);
  CHECK(up.event.r_modified == 4.0);
  CHECK(up.event.slot == 100);

  CHECK(on_b_session_end(s, VO, 0.5, kCfg, 0).state.r == 4);
  for (double u : {0.0, 0.6, 1.0}) {
    auto be = on_b_session_end(s, BE, u, kCfg, 0);
    CHECK(be.state.r == 4);
    CHECK(be.event.kind == ReputationEventKind::Unchanged);
  }
  // Capped at R.
  CHECK(on_b_session_end(with_means(10, 0.5, 0.4), VO, 1.0, kCfg, 0).state.r == 10);
  // Utilities are not folded in by the check itself.
  CHECK(up.state.count_b == s.count_b);
}

TEST_CASE("decrement rule at the end of an A session") {
  const ReputationState s = with_means(4, 0.5, 0.4);
  auto up = on_a_session_end(s, VO, 0.9, BE, kCfg, 50);
  CHECK(up.state.r == 3);
  CHECK(up.event.kind == ReputationEventKind::Decremented);

  CHECK(on_a_session_end(s, VO, 0.9, VO, kCfg, 50).state.r == 4);
  CHECK(on_a_session_end(s, BE, 0.9, BE, kCfg, 50).state.r == 4);
  CHECK(on_a_session_end(s, VO, 0.3, BE, kCfg, 50).state.r == 4);
}

TEST_CASE("floor policies") {
  const ReputationState zero = with_means(0, 0.5, 0.4);

  auto unclamped = on_a_session_end(zero, VO, 1.0, BE, kCfg, 77);
  CHECK(unclamped.state.r == -1);
  CHECK(unclamped.event.kind == ReputationEventKind::Revoked);
  CHECK(unclamped.state.revoked_at == 77);
  // Further decrements keep the first revocation slot.
  auto again = on_a_session_end(unclamped.state, VO, 1.0, BE, kCfg, 90);
  CHECK(again.state.r == -2);
  CHECK(again.event.kind == ReputationEventKind::Decremented);
  CHECK(again.state.revoked_at == 77);

  ReputationConfig clamp = kCfg;
  clamp.floor_policy = FloorPolicy::ClampAtZero;
  auto clamped = on_a_session_end(zero, VO, 1.0, BE, clamp, 77);
  CHECK(clamped.state.r == 0);
  CHECK_FALSE(clamped.state.revoked_at);

  ReputationConfig halt = kCfg;
  halt.floor_policy = FloorPolicy::HaltOnRevocation;
  CHECK(on_a_session_end(zero, VO, 1.0, BE, halt, 77).state.revoked_at == 77);

  CHECK(parse_floor_policy("clamp_at_zero") == FloorPolicy::ClampAtZero);
  CHECK_THROWS_AS(parse_floor_policy("floor"), ConfigError);
}

TEST_CASE("higher reputation makes both comparisons easier for A") {
  const int R = 10;
  const ReputationConfig cfg{R, R, FloorPolicy::Unclamped, std::nullopt};
  // Equal means keep r_Am = r, so r scans r_Am over [0, R].
  for (int lo = 0; lo < R; ++lo) {
    const ReputationState low = with_means(lo, 0.5, 0.5);
    const ReputationState high = with_means(lo + 1, 0.5, 0.5);
    for (int k = 0; k <= 120; ++k) {
      const double u = k / 120.0;
      const bool inc_lo = on_b_session_end(low, VO, u, cfg, 0).event.kind == ReputationEventKind::Incremented;
      const bool inc_hi = on_b_session_end(high, VO, u, cfg, 0).event.kind == ReputationEventKind::Incremented;
      if (inc_lo) CHECK(inc_hi);
      const bool dec_lo = on_a_session_end(low, VO, u, BE, cfg, 0).state.r < lo;
      const bool dec_hi = on_a_session_end(high, VO, u, BE, cfg, 0).state.r < lo + 1;
      if (dec_hi) CHECK(dec_lo);
    }
  }
}

TEST_CASE("r never exceeds R and moves by at most one per check; BE-only A is never decremented") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int R = 1 + static_cast<int>(gen() % 10);
    const ReputationConfig cfg{R, static_cast<int>(gen() % (R + 1)), FloorPolicy::Unclamped, std::nullopt};
    ReputationState s = ReputationState::initial(cfg);
    for (int step = 0; step < 300; ++step) {
      const double u = std::round(unit(gen) * 12) / 12;
      const auto cos = gen() % 2 ? VO : BE;
      ReputationUpdate up = gen() % 2
                                ? on_b_session_end(s, cos, u, cfg, step)
                                : on_a_session_end(s, BE, u, gen() % 2 ? VO : BE, cfg, step);
      CHECK(up.state.r <= R);
      CHECK(std::abs(up.state.r - s.r) <= 1);
      CHECK(up.state.r >= s.r);  // A only ever announced BE
      s = record_utility(up.state, up.event.trigger, u);
    }
  }
}

TEST_CASE("replaying an event log reproduces the r trajectory") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    const ReputationConfig cfg{3, 3, FloorPolicy::Unclamped, std::nullopt};
    ReputationState s = ReputationState::initial(cfg);
    std::vector<ReputationEvent> log;
    std::vector<int> trace;
    for (int slot = 1; slot <= 200; ++slot) {
      const int which = static_cast<int>(gen() % 4);  // 0 none, 1 B, 2 A, 3 both
      if (which == 0) continue;
      std::vector<std::pair<Station, double>> ended;
      const TrafficClass cos_b = gen() % 2 ? VO : BE;
      if (which & 1) {
        const double u = (gen() % 7) / 6.0;
        auto up = on_b_session_end(s, cos_b, u, cfg, slot);
        s = up.state;
        log.push_back(up.event);
        trace.push_back(s.r);
        ended.emplace_back(Station::B, u);
      }
      if (which & 2) {
        const double u = (gen() % 7) / 6.0;
        auto up = on_a_session_end(s, gen() % 2 ? VO : BE, u, cos_b, cfg, slot);
        s = up.state;
        log.push_back(up.event);
        trace.push_back(s.r);
        ended.emplace_back(Station::A, u);
      }
      for (auto [st, u] : ended) s = record_utility(s, st, u);
    }
    CHECK(replay(cfg, log) == trace);
  }
}
