#include <iostream>

#include "CLI11.hpp"
#include "risc2win/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = risc2win::cli;

  CLI::App app{"Two-hop relay reputation simulator and threshold-game analysis"};
  app.require_subcommand(1);

  cli::SimulateArgs sim;
  std::string sim_profile;
  std::uint64_t sim_seed = 0;
  auto* simulate = app.add_subcommand("simulate", "Run one strategy profile and write trajectories");
  simulate->add_option("-c,--config", sim.config, "Configuration file")->required();
  auto* profile_opt = simulate->add_option("-p,--profile", sim_profile,
                                           "Profile \"(T_A,comb, T_A,down, T_B,down, T_B,up)\"");
  auto* seed_opt = simulate->add_option("-s,--seed", sim_seed, "Traffic seed");
  simulate->add_option("-o,--out", sim.out_dir, "Output directory")->required();

  cli::SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Payoff table over S_A x S_B for each seed");
  sweep->add_option("-c,--config", sw.config, "Configuration file")->required();
  sweep->add_option("-s,--seeds", sw.seeds, "Seeds (default: config seeds)")->delimiter(',');
  sweep->add_option("-o,--out", sw.out_dir, "Output directory")->required();
  sweep->add_option("-j,--threads", sw.threads, "Worker threads (0 = all cores)");

  cli::NashArgs ne;
  auto* nash = app.add_subcommand("nash", "Epsilon-Nash equilibria of payoff tables");
  nash->add_option("payoffs", ne.payoff_files, "payoffs_<seed>.csv files")->required();
  nash->add_option("-e,--epsilon", ne.epsilon, "Relative tolerance in [0, 1]");
  nash->add_option("-o,--out", ne.out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsageError;
  }

  if (*simulate) {
    if (*profile_opt) sim.profile = sim_profile;
    if (*seed_opt) sim.seed = sim_seed;
    return cli::simulate(sim, std::cout, std::cerr);
  }
  if (*sweep) return cli::sweep(sw, std::cout, std::cerr);
  return cli::nash(ne, std::cout, std::cerr);
}
