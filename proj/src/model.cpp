#include "risc2win/model.hpp"

#include <cmath>
#include <numeric>

#include "risc2win/rng.hpp"

namespace risc2win {

std::string_view to_string(TrafficClass c) { return c == TrafficClass::VO ? "VO" : "BE"; }
std::string_view to_string(Station s) { return s == Station::A ? "A" : "B"; }

std::map<int, double> TrafficConfig::uniform_lengths(int lo, int hi) {
  if (lo < 1 || hi < lo) {
    throw ConfigError("uniform length range must satisfy 1 <= len_min <= len_max");
  }
  std::map<int, double> pmf;
  const double p = 1.0 / static_cast<double>(hi - lo + 1);
  for (int len = lo; len <= hi; ++len) pmf[len] = p;
  return pmf;
}

void TrafficConfig::validate() const {
  auto check_rho = [](double rho, const char* name) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
      throw ConfigError(std::string(name) + " must lie in [0, 1]");
    }
  };
  check_rho(rho_a, "rho_a");
  check_rho(rho_b, "rho_b");
  if (length_pmf.empty()) throw ConfigError("session length pmf is empty");
  double total = 0.0;
  for (const auto& [len, p] : length_pmf) {
    if (len < 1) throw ConfigError("session lengths must be positive");
    if (!(p >= 0.0)) throw ConfigError("session length probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ConfigError("session length pmf must sum to 1");
  }
  if (horizon < 1) throw ConfigError("horizon must be positive");
}

SessionSchedule generate_schedule(const TrafficConfig& config, Station station) {
  config.validate();

  const bool is_a = station == Station::A;
  rng::Stream lengths(config.seed, is_a ? rng::StreamTag::LengthA : rng::StreamTag::LengthB);
  rng::Stream classes(config.seed, is_a ? rng::StreamTag::ClassA : rng::StreamTag::ClassB);
  const double rho = config.rho(station);

  // Inverse-CDF table in ascending length order; the last entry absorbs
  // round-off so every uniform draw maps to a support point.
  std::vector<std::pair<double, int>> cdf;
  double acc = 0.0;
  for (const auto& [len, p] : config.length_pmf) {
    if (p <= 0.0) continue;
    acc += p;
    cdf.emplace_back(acc, len);
  }
  cdf.back().first = 2.0;

  SessionSchedule schedule{station, {}};
  std::int64_t start = 0;
  int index = 1;
  while (start < config.horizon) {
    const double u = lengths.uniform();
    int len = cdf.back().second;
    for (const auto& [bound, l] : cdf) {
      if (u < bound) {
        len = l;
        break;
      }
    }
    const TrafficClass icos = classes.uniform() < rho ? TrafficClass::VO : TrafficClass::BE;
    schedule.sessions.push_back(Session{index++, start, len, icos});
    start += len;
  }
  return schedule;
}

double session_utility(std::span<const int> slot_levels) {
  if (slot_levels.empty()) throw DomainError("session_utility: empty session");
  const long sum = std::accumulate(slot_levels.begin(), slot_levels.end(), 0L);
  return static_cast<double>(sum) / static_cast<double>(slot_levels.size());
}

UtilityReport aggregate_utilities(std::span<const SessionRecord> records, double w) {
  if (!(w > 0.0)) throw DomainError("aggregate_utilities: w must be positive");

  struct Sums {
    double be = 0.0, vo = 0.0;
    std::int64_t n_be = 0, n_vo = 0;
  };
  Sums sums[2];
  for (const SessionRecord& rec : records) {
    Sums& s = sums[static_cast<int>(rec.station)];
    if (rec.icos == TrafficClass::VO) {
      s.vo += rec.utility;
      ++s.n_vo;
    } else {
      s.be += rec.utility;
      ++s.n_be;
    }
  }

  auto finish = [w](const Sums& s) {
    StationUtilities out;
    out.count_be = s.n_be;
    out.count_vo = s.n_vo;
    out.be_empty = s.n_be == 0;
    out.vo_empty = s.n_vo == 0;
    out.u_be = s.n_be ? s.be / static_cast<double>(s.n_be) : 0.0;
    out.u_vo = s.n_vo ? s.vo / static_cast<double>(s.n_vo) : 0.0;
    out.weighted = out.u_be + w * out.u_vo;
    return out;
  };
  return UtilityReport{w, finish(sums[0]), finish(sums[1])};
}

}  // namespace risc2win
