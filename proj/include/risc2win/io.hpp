#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "risc2win/engine.hpp"
#include "risc2win/game.hpp"

// Plot-ready CSV outputs. Every file has a header row, fixed column order and
// shortest round-trip decimals, so identical inputs give identical bytes.
namespace risc2win::io {

// station,k,start,length,icos,cos,high_slots,u
void write_sessions_csv(std::ostream& out, const SimulationResult& result);

// slot,station,kind,cos_ended,u,cos_b_current,r_before,r_after,r_modified
void write_reputation_csv(std::ostream& out, const SimulationResult& result);

// series,x,value
// Series u_A_BE, u_A_VO, u_B_BE, u_B_VO: smoothed per-session utilities of one
// station and intrinsic class, x = session end slot. Series r: reputation in
// force during slot x.
void write_trajectories_csv(std::ostream& out, const SimulationResult& result);

// station,u_be,u_vo,U,count_be,count_vo,be_empty,vo_empty,w
void write_summary_csv(std::ostream& out, const SimulationResult& result);

inline constexpr const char* kPayoffHeader =
    "ta_comb,ta_down,tb_down,tb_up,u_a_be,u_a_vo,u_b_be,u_b_vo,U_a,U_b";

void write_payoffs_csv(std::ostream& out, const PayoffTable& table);

/// Sidecar next to a payoff file: seed, w, R, config_id, halted cells.
void write_payoff_meta(std::ostream& out, const PayoffTable& table);

/// Path of the sidecar for `csv` (same stem, ".meta").
std::filesystem::path meta_path_for(const std::filesystem::path& csv);

/// Loads a payoff CSV and its sidecar. Throws ConfigError when either is
/// missing, malformed, or the rows do not form S_A x S_B in order.
PayoffTable read_payoffs(const std::filesystem::path& csv);

// run,seed,ta_comb,ta_down,tb_down,tb_up,u_a_be,u_a_vo,u_b_be,u_b_vo,U_a,U_b
void write_nash_csv(std::ostream& out, const EquilibriumSummary& summary);

void write_report(std::ostream& out, const EquilibriumSummary& summary);

}  // namespace risc2win::io
