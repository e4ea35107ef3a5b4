#pragma once

#include <random>

#include "risc2win/engine.hpp"

namespace risc2win::testing {

/// Threshold drawn from {-inf, -1, ..., R + 1, +inf}.
inline Threshold random_threshold(std::mt19937_64& gen, int R) {
  const int k = static_cast<int>(gen() % static_cast<unsigned>(R + 5));
  if (k == 0) return Threshold::minus_inf();
  if (k == R + 4) return Threshold::plus_inf();
  return Threshold(k - 2);
}

/// Small scenario for oracle comparisons: R <= 3, horizon <= 500, short
/// sessions so that coincident boundaries are frequent.
inline Scenario random_small_scenario(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Scenario sc;
  sc.reputation.R = 1 + static_cast<int>(gen() % 3);
  sc.reputation.r0 = static_cast<int>(gen() % static_cast<unsigned>(sc.reputation.R + 1));
  sc.reputation.floor_policy = static_cast<FloorPolicy>(gen() % 3);
  if (gen() % 4 == 0) sc.reputation.modified_cap = 1.0;
  sc.w = 0.5 + 20 * unit(gen);

  sc.traffic.rho_a = unit(gen);
  sc.traffic.rho_b = unit(gen);
  sc.traffic.horizon = 20 + static_cast<std::int64_t>(gen() % 481);
  const int max_len = 1 + static_cast<int>(gen() % 6);
  std::vector<double> weights;
  double total = 0.0;
  for (int len = 1; len <= max_len; ++len) {
    weights.push_back(0.05 + unit(gen));
    total += weights.back();
  }
  double acc = 0.0;
  for (int len = 1; len <= max_len; ++len) {
    const double p = len == max_len ? 1.0 - acc : weights[len - 1] / total;
    sc.traffic.length_pmf[len] = p;
    acc += p;
  }

  auto ordered_pair = [&] {
    Threshold x = random_threshold(gen, sc.reputation.R);
    Threshold y = random_threshold(gen, sc.reputation.R);
    if (x < y) std::swap(x, y);
    return std::pair{x, y};
  };
  const auto [comb, down_a] = ordered_pair();
  const auto [down_b, up] = ordered_pair();
  sc.profile = {{comb, down_a}, {down_b, up}};
  return sc;
}

}  // namespace risc2win::testing
