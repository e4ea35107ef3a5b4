#include "risc2win/config.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "risc2win/format.hpp"

namespace risc2win {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on commas and whitespace, dropping empty tokens.
std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i])))) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ',' && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::map<int, double> parse_pmf(std::string_view text) {
  std::map<int, double> pmf;
  for (std::string_view tok : tokens(text)) {
    const auto colon = tok.find(':');
    if (colon == std::string_view::npos) throw ConfigError("pmf entries must look like len:prob");
    const int len = parse_integer<int>(tok.substr(0, colon), "pmf length");
    if (pmf.contains(len)) throw ConfigError("pmf lists length " + std::to_string(len) + " twice");
    pmf[len] = parse_double(tok.substr(colon + 1), "pmf probability");
  }
  return pmf;
}

}  // namespace

RunConfig::RunConfig() {
  scenario.traffic.length_pmf = TrafficConfig::uniform_lengths(6, 15);
}

Scenario RunConfig::resolved(std::int64_t default_horizon) const {
  Scenario s = scenario;
  s.traffic.horizon = horizon.value_or(default_horizon);
  return s;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  for (std::string_view tok : tokens(text)) seeds.push_back(parse_integer<std::uint64_t>(tok, "seed"));
  return seeds;
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::optional<int> len_min;
  std::optional<int> len_max;
  bool have_pmf = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw ConfigError(where + "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError(where + "duplicate key '" + key + "'");

    try {
      TrafficConfig& tr = cfg.scenario.traffic;
      ReputationConfig& rep = cfg.scenario.reputation;
      if (key == "rho_a") tr.rho_a = parse_double(value, key);
      else if (key == "rho_b") tr.rho_b = parse_double(value, key);
      else if (key == "w") cfg.scenario.w = parse_double(value, key);
      else if (key == "R") rep.R = parse_integer<int>(value, key);
      else if (key == "r0") rep.r0 = parse_integer<int>(value, key);
      else if (key == "epsilon") cfg.epsilon = parse_double(value, key);
      else if (key == "horizon") cfg.horizon = parse_integer<std::int64_t>(value, key);
      else if (key == "seed") tr.seed = parse_integer<std::uint64_t>(value, key);
      else if (key == "seeds") cfg.seeds = parse_seed_list(value);
      else if (key == "floor_policy") rep.floor_policy = parse_floor_policy(value);
      else if (key == "modified_cap") rep.modified_cap = parse_double(value, key);
      else if (key == "profile") cfg.scenario.profile = StrategyProfile::parse(value);
      else if (key == "len_min") len_min = parse_integer<int>(value, key);
      else if (key == "len_max") len_max = parse_integer<int>(value, key);
      else if (key == "pmf") {
        tr.length_pmf = parse_pmf(value);
        have_pmf = true;
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }

  if (have_pmf && (len_min || len_max)) throw ConfigError("use either pmf or len_min/len_max, not both");
  if (len_min.has_value() != len_max.has_value()) throw ConfigError("len_min and len_max go together");
  if (len_min) cfg.scenario.traffic.length_pmf = TrafficConfig::uniform_lengths(*len_min, *len_max);

  if (!(cfg.epsilon >= 0.0 && cfg.epsilon <= 1.0)) throw ConfigError("epsilon must lie in [0, 1]");
  cfg.resolved(kDefaultRunHorizon).validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_config_text(const RunConfig& cfg) {
  const Scenario& s = cfg.scenario;
  std::ostringstream out;
  out << "rho_a = " << format_double(s.traffic.rho_a) << "\n";
  out << "rho_b = " << format_double(s.traffic.rho_b) << "\n";
  out << "pmf =";
  for (const auto& [len, p] : s.traffic.length_pmf) out << " " << len << ":" << format_double(p);
  out << "\n";
  if (cfg.horizon) out << "horizon = " << *cfg.horizon << "\n";
  out << "seed = " << s.traffic.seed << "\n";
  if (!cfg.seeds.empty()) {
    out << "seeds =";
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) out << (i ? "," : " ") << cfg.seeds[i];
    out << "\n";
  }
  out << "w = " << format_double(s.w) << "\n";
  out << "R = " << s.reputation.R << "\n";
  out << "r0 = " << s.reputation.r0 << "\n";
  out << "floor_policy = " << to_string(s.reputation.floor_policy) << "\n";
  if (s.reputation.modified_cap) out << "modified_cap = " << format_double(*s.reputation.modified_cap) << "\n";
  out << "epsilon = " << format_double(cfg.epsilon) << "\n";
  out << "profile = " << s.profile.to_string() << "\n";
  return out.str();
}

}  // namespace risc2win
