#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace risc2win::cli {

enum ExitCode : int { kOk = 0, kUsageError = 2, kRuntimeError = 3 };

struct SimulateArgs {
  std::filesystem::path config;
  std::optional<std::string> profile;  // overrides the config's profile
  std::optional<std::uint64_t> seed;   // overrides the config's seed
  std::filesystem::path out_dir;
};

/// Writes sessions.csv, reputation.csv, trajectories.csv, summary.csv and
/// manifest.txt into out_dir.
int simulate(const SimulateArgs& args, std::ostream& log, std::ostream& err);

struct SweepArgs {
  std::filesystem::path config;
  std::vector<std::uint64_t> seeds;  // empty: config's seeds, else its seed
  std::filesystem::path out_dir;
  unsigned threads = 0;
};

/// Writes payoffs_<seed>.csv (+ .meta) per seed and manifest.txt.
int sweep(const SweepArgs& args, std::ostream& log, std::ostream& err);

struct NashArgs {
  std::vector<std::filesystem::path> payoff_files;
  double epsilon = 0.15;
  std::filesystem::path out_dir;
};

/// Writes nash.csv and report.txt.
int nash(const NashArgs& args, std::ostream& log, std::ostream& err);

}  // namespace risc2win::cli
