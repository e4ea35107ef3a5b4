#include "risc2win/game.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace risc2win {

std::string sweep_config_id(const Scenario& base) {
  Scenario s = base;
  s.profile = StrategyProfile::neutral();
  s.traffic.seed = 0;
  return s.canonical_text();
}

PayoffTable sweep(const Scenario& base, std::uint64_t seed, const SweepOptions& options) {
  base.validate();
  PayoffTable table;
  table.strategies_a = enumerate_space(base.reputation.R, Station::A);
  table.strategies_b = enumerate_space(base.reputation.R, Station::B);
  table.seed = seed;
  table.w = base.w;
  table.config_id = sweep_config_id(base);
  table.cells.resize(table.rows() * table.cols());

  TrafficConfig traffic = base.traffic;
  traffic.seed = seed;
  const SessionSchedule sched_a = generate_schedule(traffic, Station::A);
  const SessionSchedule sched_b = generate_schedule(traffic, Station::B);

  const RunOptions lean{.record_events = false, .record_r_trace = false, .record_slot_trace = false};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Scenario sc = base;
    for (std::size_t k = next++; k < table.cells.size(); k = next++) {
      const ThresholdPair pa = table.strategies_a[k / table.cols()];
      const ThresholdPair pb = table.strategies_b[k % table.cols()];
      sc.profile = {to_thresholds_a(pa), to_thresholds_b(pb)};
      const SimulationResult r = run(sc, sched_a, sched_b, seed, lean);
      table.cells[k] = PayoffCell{pa,
                                  pb,
                                  r.report.a.u_be,
                                  r.report.a.u_vo,
                                  r.report.b.u_be,
                                  r.report.b.u_vo,
                                  r.report.a.weighted,
                                  r.report.b.weighted,
                                  r.halted};
    }
  };

  unsigned n = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, table.cells.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  return table;
}

EquilibriumSet epsilon_nash(const PayoffTable& table, double epsilon) {
  if (table.cells.empty()) throw DomainError("epsilon_nash: empty payoff table");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw DomainError("epsilon_nash: epsilon outside [0, 1]");

  const std::size_t rows = table.rows();
  const std::size_t cols = table.cols();
  // Best reply of A against column j, of B against row i.
  std::vector<double> best_a(cols, 0.0);
  std::vector<double> best_b(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const PayoffCell& c = table.at(i, j);
      best_a[j] = std::max(best_a[j], c.U_a);
      best_b[i] = std::max(best_b[i], c.U_b);
    }
  }

  EquilibriumSet out{epsilon, table.seed, {}};
  const double keep = 1.0 - epsilon;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const PayoffCell& c = table.at(i, j);
      if (c.U_a >= keep * best_a[j] && c.U_b >= keep * best_b[i]) out.members.push_back({i, j});
    }
  }
  return out;
}

EquilibriumSummary summarize(std::span<const EquilibriumSet> sets,
                             std::span<const PayoffTable> tables) {
  if (sets.size() != tables.size()) throw DomainError("summarize: one equilibrium set per table");
  EquilibriumSummary out;
  if (sets.empty()) return out;
  out.epsilon = sets.front().epsilon;

  std::size_t vo_ge = 0;
  std::size_t be_ge = 0;
  for (std::size_t run = 0; run < sets.size(); ++run) {
    const EquilibriumSet& set = sets[run];
    const PayoffTable& table = tables[run];
    if (table.config_id != tables.front().config_id) {
      throw DomainError("summarize: tables come from different configurations");
    }
    if (set.epsilon != out.epsilon) throw DomainError("summarize: mixed epsilon values");
    if (set.seed != table.seed) throw DomainError("summarize: set does not belong to its table");

    RunEquilibria re{run, table.seed, set.members.size(), 0};
    for (const ProfileIndex& idx : set.members) {
      if (idx.i >= table.rows() || idx.j >= table.cols()) {
        throw DomainError("summarize: equilibrium index outside its table");
      }
      const PayoffCell& c = table.at(idx.i, idx.j);
      out.points.push_back({run, table.seed, idx, c});
      if (c.U_a == 0.0 || c.U_b == 0.0) ++re.starved;
      if (c.u_a_vo >= c.u_b_vo) ++vo_ge;
      if (c.u_a_be >= c.u_b_be) ++be_ge;
    }
    out.starved += re.starved;
    if (re.count == 0) ++out.empty_runs;
    out.runs.push_back(re);
  }
  if (!out.points.empty()) {
    const auto n = static_cast<double>(out.points.size());
    out.frac_vo_a_ge_b = static_cast<double>(vo_ge) / n;
    out.frac_be_a_ge_b = static_cast<double>(be_ge) / n;
  }
  return out;
}

}  // namespace risc2win
