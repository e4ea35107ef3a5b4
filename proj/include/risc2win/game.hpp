#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "risc2win/engine.hpp"
#include "risc2win/strategy.hpp"

namespace risc2win {

struct PayoffCell {
  ThresholdPair a;  // (T_A,comb, T_A,down)
  ThresholdPair b;  // (T_B,down, T_B,up)
  double u_a_be = 0.0;
  double u_a_vo = 0.0;
  double u_b_be = 0.0;
  double u_b_vo = 0.0;
  double U_a = 0.0;
  double U_b = 0.0;
  bool halted = false;  // run stopped at revocation; utilities cover the partial run

  bool operator==(const PayoffCell&) const = default;
};

/// Payoffs of one traffic realization over S_A x S_B, row-major (A's strategy
/// selects the row).
struct PayoffTable {
  std::vector<ThresholdPair> strategies_a;
  std::vector<ThresholdPair> strategies_b;
  std::vector<PayoffCell> cells;
  std::uint64_t seed = 0;
  double w = 10.0;
  std::string config_id;  // identifies every parameter except the seed

  std::size_t rows() const { return strategies_a.size(); }
  std::size_t cols() const { return strategies_b.size(); }
  const PayoffCell& at(std::size_t i, std::size_t j) const { return cells[i * cols() + j]; }

  bool operator==(const PayoffTable&) const = default;
};

struct SweepOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Canonical text of `base` with its profile dropped; equal for all cells and
/// seeds of one experiment.
std::string sweep_config_id(const Scenario& base);

/// Runs every profile in S_A x S_B against the same pair of schedules drawn
/// from `seed`. The result does not depend on the thread count.
PayoffTable sweep(const Scenario& base, std::uint64_t seed, const SweepOptions& options = {});

struct ProfileIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  auto operator<=>(const ProfileIndex&) const = default;
};

struct EquilibriumSet {
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::vector<ProfileIndex> members;  // row-major order
};

/// Profiles where each station gets at least (1 - epsilon) of its best reply.
/// Throws DomainError on an empty table or epsilon outside [0, 1].
EquilibriumSet epsilon_nash(const PayoffTable& table, double epsilon);

struct EquilibriumPoint {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  ProfileIndex index;
  PayoffCell cell;
};

struct RunEquilibria {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t starved = 0;
};

struct EquilibriumSummary {
  double epsilon = 0.0;
  std::vector<RunEquilibria> runs;
  std::vector<EquilibriumPoint> points;  // pooled over runs
  std::size_t starved = 0;               // pooled members with U_a = 0 or U_b = 0
  std::size_t empty_runs = 0;
  std::optional<double> frac_vo_a_ge_b;  // unset when no equilibria at all
  std::optional<double> frac_be_a_ge_b;
};

/// Pools equilibrium sets computed on tables of one configuration.
/// Throws DomainError on size or configuration mismatch.
EquilibriumSummary summarize(std::span<const EquilibriumSet> sets,
                             std::span<const PayoffTable> tables);

}  // namespace risc2win
