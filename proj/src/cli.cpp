#include "risc2win/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "risc2win/config.hpp"
#include "risc2win/format.hpp"
#include "risc2win/io.hpp"
#include "risc2win/rng.hpp"

namespace risc2win::cli {

namespace {

namespace fs = std::filesystem;

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw OutputError("cannot create output directory '" + dir.string() + "'");
  }
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot write '" + path.string() + "'");
  body(out);
  out.flush();
  if (!out) throw OutputError("write failed for '" + path.string() + "'");
}

// Config echo first, so the manifest itself parses as a config file.
void write_manifest(const fs::path& dir, const RunConfig& cfg, const std::string& command,
                    const std::vector<std::uint64_t>& seeds, const std::vector<std::string>& outputs) {
  write_file(dir / "manifest.txt", [&](std::ostream& out) {
    out << "# command: " << command << '\n';
    out << "# code_version: " << kCodeVersion << '\n';
    out << "# rng_scheme: " << rng::kSchemeId << '\n';
    out << "# config_hash: " << fnv1a64(cfg.resolved(kDefaultRunHorizon).canonical_text()) << '\n';
    out << "# seeds:";
    for (std::uint64_t s : seeds) out << ' ' << s;
    out << '\n';
    out << "# outputs:";
    for (const std::string& o : outputs) out << ' ' << o;
    out << '\n';

    out << to_config_text(cfg);
  });
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

}  // namespace

int simulate(const SimulateArgs& args, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    RunConfig cfg = load_config(args.config);
    if (args.profile) cfg.scenario.profile = StrategyProfile::parse(*args.profile);
    if (args.seed) cfg.scenario.traffic.seed = *args.seed;
    if (!cfg.horizon) cfg.horizon = kDefaultRunHorizon;
    const Scenario scenario = cfg.resolved(kDefaultRunHorizon);
    scenario.validate();
    ensure_dir(args.out_dir);

    const SimulationResult result = run(scenario, scenario.traffic.seed);

    write_file(args.out_dir / "sessions.csv", [&](std::ostream& o) { io::write_sessions_csv(o, result); });
    write_file(args.out_dir / "reputation.csv", [&](std::ostream& o) { io::write_reputation_csv(o, result); });
    write_file(args.out_dir / "trajectories.csv",
               [&](std::ostream& o) { io::write_trajectories_csv(o, result); });
    write_file(args.out_dir / "summary.csv", [&](std::ostream& o) { io::write_summary_csv(o, result); });
    write_manifest(args.out_dir, cfg, "simulate", {scenario.traffic.seed},
                   {"sessions.csv", "reputation.csv", "trajectories.csv", "summary.csv"});

    log << "profile " << scenario.profile.to_string() << " seed " << scenario.traffic.seed << ": U_A="
        << format_double(result.report.a.weighted) << " U_B=" << format_double(result.report.b.weighted);
    if (result.revoked_at) log << " revoked at slot " << *result.revoked_at;
    if (result.halted) log << " (halted)";
    log << '\n';
    return kOk;
  });
}

int sweep(const SweepArgs& args, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    RunConfig cfg = load_config(args.config);
    std::vector<std::uint64_t> seeds = args.seeds;
    if (seeds.empty()) seeds = cfg.seeds;
    if (seeds.empty()) seeds = {cfg.scenario.traffic.seed};
    cfg.seeds = seeds;
    if (!cfg.horizon) cfg.horizon = kDefaultSweepHorizon;
    const Scenario base = cfg.resolved(kDefaultSweepHorizon);
    base.validate();
    ensure_dir(args.out_dir);

    std::vector<std::string> outputs;
    for (std::uint64_t seed : seeds) {
      const PayoffTable table = risc2win::sweep(base, seed, SweepOptions{args.threads});
      const std::string name = "payoffs_" + std::to_string(seed) + ".csv";
      write_file(args.out_dir / name, [&](std::ostream& o) { io::write_payoffs_csv(o, table); });
      write_file(io::meta_path_for(args.out_dir / name), [&](std::ostream& o) { io::write_payoff_meta(o, table); });
      outputs.push_back(name);
      log << "seed " << seed << ": " << table.cells.size() << " profiles -> " << name << '\n';
    }
    write_manifest(args.out_dir, cfg, "sweep", seeds, outputs);
    return kOk;
  });
}

int nash(const NashArgs& args, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    if (args.payoff_files.empty()) throw ConfigError("no payoff files given");
    if (!(args.epsilon >= 0.0 && args.epsilon <= 1.0)) throw ConfigError("epsilon must lie in [0, 1]");

    std::vector<PayoffTable> tables;
    for (const fs::path& p : args.payoff_files) tables.push_back(io::read_payoffs(p));
    for (const PayoffTable& t : tables) {
      if (t.config_id != tables.front().config_id) {
        throw ConfigError("payoff files come from different configurations");
      }
    }
    std::vector<EquilibriumSet> sets;
    for (const PayoffTable& t : tables) sets.push_back(epsilon_nash(t, args.epsilon));
    const EquilibriumSummary summary = summarize(sets, tables);

    ensure_dir(args.out_dir);
    write_file(args.out_dir / "nash.csv", [&](std::ostream& o) { io::write_nash_csv(o, summary); });
    write_file(args.out_dir / "report.txt", [&](std::ostream& o) { io::write_report(o, summary); });
    log << summary.points.size() << " equilibria over " << tables.size() << " runs\n";
    return kOk;
  });
}

}  // namespace risc2win::cli
