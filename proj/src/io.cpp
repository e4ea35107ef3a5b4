#include "risc2win/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "risc2win/format.hpp"

namespace risc2win::io {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

void write_payoff_columns(std::ostream& out, const PayoffCell& c) {
  out << c.a.first << ',' << c.a.second << ',' << c.b.first << ',' << c.b.second << ','
      << format_double(c.u_a_be) << ',' << format_double(c.u_a_vo) << ','
      << format_double(c.u_b_be) << ',' << format_double(c.u_b_vo) << ','
      << format_double(c.U_a) << ',' << format_double(c.U_b);
}

}  // namespace

void write_sessions_csv(std::ostream& out, const SimulationResult& result) {
  out << "station,k,start,length,icos,cos,high_slots,u\n";
  for (const SessionRecord& s : result.sessions) {
    out << to_string(s.station) << ',' << s.index << ',' << s.start << ',' << s.length << ','
        << to_string(s.icos) << ',' << to_string(s.cos) << ',' << s.high_slots << ','
        << format_double(s.utility) << '\n';
  }
}

void write_reputation_csv(std::ostream& out, const SimulationResult& result) {
  out << "slot,station,kind,cos_ended,u,cos_b_current,r_before,r_after,r_modified\n";
  for (const ReputationEvent& e : result.events) {
    out << e.slot << ',' << to_string(e.trigger) << ',' << to_string(e.kind) << ','
        << to_string(e.cos_ended) << ',' << format_double(e.utility) << ','
        << to_string(e.cos_b_current) << ',' << e.r_before << ',' << e.r_after << ','
        << format_double(e.r_modified) << '\n';
  }
}

void write_trajectories_csv(std::ostream& out, const SimulationResult& result) {
  out << "series,x,value\n";
  for (Station st : {Station::A, Station::B}) {
    for (TrafficClass c : {TrafficClass::BE, TrafficClass::VO}) {
      std::vector<double> raw;
      std::vector<std::int64_t> ends;
      for (const SessionRecord& s : result.sessions) {
        if (s.station == st && s.icos == c) {
          raw.push_back(s.utility);
          ends.push_back(s.start + s.length);
        }
      }
      if (raw.empty()) continue;
      const std::vector<double> smooth = smooth_trajectory(raw);
      const std::string name = "u_" + std::string(to_string(st)) + "_" + std::string(to_string(c));
      for (std::size_t i = 0; i < smooth.size(); ++i) {
        out << name << ',' << ends[i] << ',' << format_double(smooth[i]) << '\n';
      }
    }
  }
  for (std::size_t t = 0; t < result.r_trace.size(); ++t) {
    out << "r," << t << ',' << result.r_trace[t] << '\n';
  }
}

void write_summary_csv(std::ostream& out, const SimulationResult& result) {
  out << "station,u_be,u_vo,U,count_be,count_vo,be_empty,vo_empty,w\n";
  for (Station st : {Station::A, Station::B}) {
    const StationUtilities& u = result.report.of(st);
    out << to_string(st) << ',' << format_double(u.u_be) << ',' << format_double(u.u_vo) << ','
        << format_double(u.weighted) << ',' << u.count_be << ',' << u.count_vo << ','
        << (u.be_empty ? 1 : 0) << ',' << (u.vo_empty ? 1 : 0) << ','
        << format_double(result.report.w) << '\n';
  }
}

void write_payoffs_csv(std::ostream& out, const PayoffTable& table) {
  out << kPayoffHeader << '\n';
  for (const PayoffCell& c : table.cells) {
    write_payoff_columns(out, c);
    out << '\n';
  }
}

void write_payoff_meta(std::ostream& out, const PayoffTable& table) {
  out << "seed = " << table.seed << '\n';
  out << "w = " << format_double(table.w) << '\n';
  out << "rows = " << table.rows() << '\n';
  out << "cols = " << table.cols() << '\n';
  out << "config_id = " << table.config_id << '\n';
  out << "halted_cells =";
  for (std::size_t k = 0; k < table.cells.size(); ++k) {
    if (table.cells[k].halted) out << ' ' << k;
  }
  out << '\n';
}

std::filesystem::path meta_path_for(const std::filesystem::path& csv) {
  std::filesystem::path p = csv;
  p.replace_extension(".meta");
  return p;
}

PayoffTable read_payoffs(const std::filesystem::path& csv) {
  PayoffTable table;
  std::vector<std::size_t> halted;
  {
    const std::filesystem::path meta = meta_path_for(csv);
    std::ifstream in(meta);
    if (!in) throw ConfigError("missing payoff metadata '" + meta.string() + "'");
    std::string line;
    while (std::getline(in, line)) {
      const auto eq = line.find(" = ");
      const auto eq_empty = line.find(" =");
      if (eq_empty == std::string::npos) throw ConfigError("malformed line in " + meta.string());
      const std::string key = line.substr(0, eq_empty);
      const std::string value = eq == std::string::npos ? "" : line.substr(eq + 3);
      if (key == "seed") table.seed = parse_integer<std::uint64_t>(value, key);
      else if (key == "w") table.w = parse_double(value, key);
      else if (key == "config_id") table.config_id = value;
      else if (key == "halted_cells") {
        std::istringstream ks(value);
        std::size_t k = 0;
        while (ks >> k) halted.push_back(k);
      }
    }
    if (table.config_id.empty()) throw ConfigError("payoff metadata lacks config_id: " + meta.string());
  }

  std::ifstream in(csv);
  if (!in) throw ConfigError("cannot read payoff file '" + csv.string() + "'");
  std::string line;
  if (!std::getline(in, line) || line != kPayoffHeader) {
    throw ConfigError("unexpected payoff header in " + csv.string());
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv(line);
    if (f.size() != 10) throw ConfigError("payoff row with wrong column count in " + csv.string());
    PayoffCell c;
    c.a = {parse_integer<int>(f[0], "ta_comb"), parse_integer<int>(f[1], "ta_down")};
    c.b = {parse_integer<int>(f[2], "tb_down"), parse_integer<int>(f[3], "tb_up")};
    c.u_a_be = parse_double(f[4], "u_a_be");
    c.u_a_vo = parse_double(f[5], "u_a_vo");
    c.u_b_be = parse_double(f[6], "u_b_be");
    c.u_b_vo = parse_double(f[7], "u_b_vo");
    c.U_a = parse_double(f[8], "U_a");
    c.U_b = parse_double(f[9], "U_b");
    table.cells.push_back(c);
  }
  if (table.cells.empty()) throw ConfigError("payoff file has no rows: " + csv.string());

  // Recover S_A and S_B from the row-major layout and check it is a full grid.
  for (const PayoffCell& c : table.cells) {
    if (c.a != table.cells.front().a) break;
    table.strategies_b.push_back(c.b);
  }
  const std::size_t cols = table.strategies_b.size();
  if (table.cells.size() % cols != 0) throw ConfigError("payoff rows do not form a grid: " + csv.string());
  for (std::size_t k = 0; k < table.cells.size(); ++k) {
    if (k % cols == 0) table.strategies_a.push_back(table.cells[k].a);
    if (table.cells[k].a != table.strategies_a.back() || table.cells[k].b != table.strategies_b[k % cols]) {
      throw ConfigError("payoff rows do not form a grid: " + csv.string());
    }
  }
  for (std::size_t k : halted) {
    if (k >= table.cells.size()) throw ConfigError("halted cell index out of range in metadata");
    table.cells[k].halted = true;
  }
  return table;
}

void write_nash_csv(std::ostream& out, const EquilibriumSummary& summary) {
  out << "run,seed," << kPayoffHeader << '\n';
  for (const EquilibriumPoint& p : summary.points) {
    out << p.run << ',' << p.seed << ',';
    write_payoff_columns(out, p.cell);
    out << '\n';
  }
}

void write_report(std::ostream& out, const EquilibriumSummary& summary) {
  out << "epsilon: " << format_double(summary.epsilon) << '\n';
  out << "runs: " << summary.runs.size() << '\n';
  out << "pooled equilibria: " << summary.points.size() << '\n';
  out << "runs without equilibria: " << summary.empty_runs << '\n';
  out << "starved equilibria (U_a = 0 or U_b = 0): " << summary.starved << '\n';
  auto frac = [](const std::optional<double>& f) { return f ? format_double(*f) : std::string("n/a"); };
  out << "fraction with u_a_vo >= u_b_vo: " << frac(summary.frac_vo_a_ge_b) << '\n';
  out << "fraction with u_a_be >= u_b_be: " << frac(summary.frac_be_a_ge_b) << '\n';
  out << "per run (run seed count starved):\n";
  for (const RunEquilibria& r : summary.runs) {
    out << "  " << r.run << ' ' << r.seed << ' ' << r.count << ' ' << r.starved
        << (r.count == 0 ? "  EMPTY" : "") << '\n';
  }
}

}  // namespace risc2win::io
