#include <algorithm>
#include <random>

#include "doctest.h"
#include "risc2win/game.hpp"

using namespace risc2win;

namespace {

PayoffTable table_from(const std::vector<std::vector<double>>& ua,
                       const std::vector<std::vector<double>>& ub, std::uint64_t seed = 0) {
  PayoffTable t;
  t.seed = seed;
  t.config_id = "test";
  for (std::size_t i = 0; i < ua.size(); ++i) t.strategies_a.push_back({static_cast<int>(i), 0});
  for (std::size_t j = 0; j < ua[0].size(); ++j) t.strategies_b.push_back({static_cast<int>(j), 0});
  for (std::size_t i = 0; i < ua.size(); ++i) {
    for (std::size_t j = 0; j < ua[0].size(); ++j) {
      PayoffCell c;
      c.a = t.strategies_a[i];
      c.b = t.strategies_b[j];
      c.U_a = ua[i][j];
      c.U_b = ub[i][j];
      t.cells.push_back(c);
    }
  }
  return t;
}

// Direct reading of the definition: compare each profile against every
// unilateral deviation.
std::vector<ProfileIndex> brute_force_eps_ne(const PayoffTable& t, double eps) {
  std::vector<ProfileIndex> out;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      bool ok = true;
      for (std::size_t k = 0; k < t.rows(); ++k) ok = ok && t.at(i, j).U_a >= (1 - eps) * t.at(k, j).U_a;
      for (std::size_t k = 0; k < t.cols(); ++k) ok = ok && t.at(i, j).U_b >= (1 - eps) * t.at(i, k).U_b;
      if (ok) out.push_back({i, j});
    }
  }
  return out;
}

PayoffTable random_table(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 11.0);
  const std::size_t rows = 1 + gen() % 6;
  const std::size_t cols = 1 + gen() % 6;
  std::vector<std::vector<double>> ua(rows, std::vector<double>(cols));
  auto ub = ua;
  for (auto* m : {&ua, &ub}) {
    for (auto& row : *m) {
      for (double& x : row) x = gen() % 5 == 0 ? std::round(u(gen)) : u(gen);  // some ties
    }
  }
  return table_from(ua, ub);
}

Scenario small_scenario() {
  Scenario sc;
  sc.traffic.length_pmf = TrafficConfig::uniform_lengths(6, 15);
  sc.traffic.horizon = 3000;
  sc.reputation.R = 2;
  sc.reputation.r0 = 2;
  return sc;
}

}  // namespace

TEST_CASE("2x2 example against the brute-force definition") {
  const PayoffTable t = table_from({{10, 2}, {8, 9}}, {{5, 1}, {4, 6}});
  const std::vector<ProfileIndex> expected{{0, 0}, {1, 1}};
  CHECK(brute_force_eps_ne(t, 0.15) == expected);
  CHECK(epsilon_nash(t, 0.15).members == expected);
}

TEST_CASE("epsilon extremes") {
  const PayoffTable t = table_from({{10, 2}, {8, 9}}, {{5, 1}, {4, 6}});
  CHECK(epsilon_nash(t, 1.0).members.size() == 4);

  // Strictly dominant (row 0, col 1) profile is the only exact equilibrium.
  const PayoffTable d = table_from({{5, 6}, {1, 2}}, {{1, 3}, {0, 1}});
  CHECK(epsilon_nash(d, 0.0).members == std::vector<ProfileIndex>{{0, 1}});

  // Exact ties are all kept.
  const PayoffTable tie = table_from({{3, 3}, {3, 3}}, {{2, 2}, {2, 2}});
  CHECK(epsilon_nash(tie, 0.0).members.size() == 4);

  CHECK_THROWS_AS(epsilon_nash(PayoffTable{}, 0.1), DomainError);
  CHECK_THROWS_AS(epsilon_nash(t, -0.1), DomainError);
  CHECK_THROWS_AS(epsilon_nash(t, 1.1), DomainError);
}

TEST_CASE("random tables: recheck closure and epsilon monotonicity") {
  std::mt19937_64 gen(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const PayoffTable t = random_table(gen);
    const double e1 = std::uniform_real_distribution<double>(0, 1)(gen);
    const double e2 = std::uniform_real_distribution<double>(e1, 1)(gen);
    const auto s1 = epsilon_nash(t, e1).members;
    const auto s2 = epsilon_nash(t, e2).members;
    CHECK(s1 == brute_force_eps_ne(t, e1));
    CHECK(std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()));
  }
}

TEST_CASE("sweep covers S_A x S_B with common traffic") {
  const Scenario sc = small_scenario();
  const PayoffTable t = sweep(sc, 5, {.threads = 1});
  CHECK(t.rows() == 5);
  CHECK(t.cols() == 5);
  CHECK(t.cells.size() == 25);
  CHECK(t.seed == 5);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const PayoffCell& c = t.at(i, j);
      CHECK(c.a == t.strategies_a[i]);
      CHECK(c.b == t.strategies_b[j]);
      for (double u : {c.u_a_be, c.u_a_vo, c.u_b_be, c.u_b_vo}) {
        CHECK(u >= 0.0);
        CHECK(u <= 1.0);
      }
      CHECK(c.U_a <= 1 + sc.w);
      CHECK(c.U_b <= 1 + sc.w);

      // Each cell equals a standalone run on the same seed.
      Scenario one = sc;
      one.profile = {to_thresholds_a(c.a), to_thresholds_b(c.b)};
      const SimulationResult r = run(one, 5);
      CHECK(r.report.a.weighted == c.U_a);
      CHECK(r.report.b.weighted == c.U_b);
    }
  }
}

TEST_CASE("sweep result is independent of the thread count") {
  const Scenario sc = small_scenario();
  CHECK(sweep(sc, 8, {.threads = 1}) == sweep(sc, 8, {.threads = 4}));
  CHECK(sweep(sc, 8, {.threads = 1}).cells != sweep(sc, 9, {.threads = 1}).cells);
}

TEST_CASE("full strategy space at R = 10") {
  Scenario sc = small_scenario();
  sc.reputation.R = 10;
  sc.reputation.r0 = 10;
  sc.traffic.horizon = 200;
  const PayoffTable t = sweep(sc, 1);
  CHECK(t.cells.size() == 4225);
}

TEST_CASE("finite strategies never revoke A's status") {
  // Every A strategy in S_A has T_A,down >= 0, so A falls back to BE at r = 0.
  Scenario sc = small_scenario();
  sc.reputation.floor_policy = FloorPolicy::HaltOnRevocation;
  const PayoffTable t = sweep(sc, 2, {.threads = 1});
  CHECK(std::none_of(t.cells.begin(), t.cells.end(), [](const PayoffCell& c) { return c.halted; }));
  sc.profile = StrategyProfile::parse("(0,-inf,inf,-inf)");
  CHECK(run(sc, 2).halted);
}

TEST_CASE("summary counts") {
  const PayoffTable t1 = [] {
    PayoffTable t = table_from({{10, 2}, {8, 9}}, {{5, 1}, {4, 6}}, 1);
    t.cells[0].u_a_vo = 0.6;
    t.cells[0].u_b_vo = 0.4;
    t.cells[3].u_a_vo = 0.3;
    t.cells[3].u_b_vo = 0.5;
    return t;
  }();
  PayoffTable t2 = table_from({{0, 2}, {1, 3}}, {{1, 1}, {0, 2}}, 2);
  const std::vector<PayoffTable> tables{t1, t2};
  const std::vector<EquilibriumSet> sets{epsilon_nash(t1, 0.15), epsilon_nash(t2, 0.15)};
  const EquilibriumSummary s = summarize(sets, tables);
  REQUIRE(s.runs.size() == 2);
  CHECK(s.runs[0].count == 2);
  CHECK(s.runs[0].starved == 0);
  CHECK(s.points.size() == s.runs[0].count + s.runs[1].count);
  CHECK(s.empty_runs == 0);
  REQUIRE(s.frac_vo_a_ge_b);

  // Only run 0 with no starvation when run 1 is dropped.
  const EquilibriumSummary s0 = summarize(std::span(sets).first(1), std::span(tables).first(1));
  CHECK(s0.starved == 0);
  CHECK(*s0.frac_vo_a_ge_b == 0.5);
  CHECK(*s0.frac_be_a_ge_b == 1.0);

  // Empty equilibrium set is reported, not an error.
  EquilibriumSet none{0.15, 1, {}};
  const EquilibriumSummary e = summarize(std::vector{none}, std::span(tables).first(1));
  CHECK(e.empty_runs == 1);
  CHECK_FALSE(e.frac_vo_a_ge_b);

  PayoffTable other = t2;
  other.config_id = "different";
  const std::vector<PayoffTable> mixed{t1, other};
  CHECK_THROWS_AS(summarize(sets, mixed), DomainError);
  CHECK_THROWS_AS(summarize(std::span(sets).first(1), tables), DomainError);
}

TEST_CASE("starvation counted when either weighted utility is zero") {
  const PayoffTable t = table_from({{0}}, {{4}}, 3);
  const std::vector<PayoffTable> tables{t};
  const std::vector<EquilibriumSet> sets{epsilon_nash(t, 0.15)};
  const EquilibriumSummary s = summarize(sets, tables);
  CHECK(s.points.size() == 1);
  CHECK(s.starved == 1);
}
