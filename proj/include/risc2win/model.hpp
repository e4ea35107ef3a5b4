#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace risc2win {

/// Invalid user-supplied configuration (bad pmf, out-of-range parameter, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Access category / class of service. VO outranks BE.
enum class TrafficClass : std::uint8_t { BE = 0, VO = 1 };

enum class Station : std::uint8_t { A = 0, B = 1 };

constexpr bool operator<(TrafficClass lhs, TrafficClass rhs) {
  return static_cast<int>(lhs) < static_cast<int>(rhs);
}

std::string_view to_string(TrafficClass c);
std::string_view to_string(Station s);

/// Traffic generation parameters shared by both stations.
struct TrafficConfig {
  double rho_a = 0.5;  // Pr[intrinsic class of an A session = VO]
  double rho_b = 0.5;
  std::map<int, double> length_pmf;  // session length (slots) -> probability
  std::int64_t horizon = 100000;
  std::uint64_t seed = 1;

  /// Uniform pmf over {lo, ..., hi}.
  static std::map<int, double> uniform_lengths(int lo, int hi);

  double rho(Station s) const { return s == Station::A ? rho_a : rho_b; }

  /// Throws ConfigError when an invariant is violated.
  void validate() const;

  bool operator==(const TrafficConfig&) const = default;
};

struct Session {
  int index = 1;           // 1-based
  std::int64_t start = 0;  // first slot occupied
  int length = 1;
  TrafficClass icos = TrafficClass::BE;

  std::int64_t end() const { return start + length; }
  bool operator==(const Session&) const = default;
};

/// Back-to-back sessions of one station; the first starts at slot 0.
struct SessionSchedule {
  Station station = Station::A;
  std::vector<Session> sessions;

  bool operator==(const SessionSchedule&) const = default;
};

/// The five access-decision values in force during a slot.
struct BehaviorState {
  TrafficClass cos_a = TrafficClass::BE;
  TrafficClass ac_a = TrafficClass::BE;
  TrafficClass ac_ba = TrafficClass::BE;
  TrafficClass cos_b = TrafficClass::BE;
  TrafficClass ac_b = TrafficClass::BE;

  bool operator==(const BehaviorState&) const = default;
};

struct SessionRecord {
  Station station = Station::A;
  int index = 1;
  std::int64_t start = 0;
  int length = 1;
  TrafficClass icos = TrafficClass::BE;
  TrafficClass cos = TrafficClass::BE;  // announced
  int high_slots = 0;                    // slots with QoS level 1
  double utility = 0.0;

  bool operator==(const SessionRecord&) const = default;
};

struct StationUtilities {
  double u_be = 0.0;
  double u_vo = 0.0;
  double weighted = 0.0;  // u_be + w * u_vo
  std::int64_t count_be = 0;
  std::int64_t count_vo = 0;
  bool be_empty = true;  // no intrinsically-BE session completed; u_be reported as 0
  bool vo_empty = true;

  bool operator==(const StationUtilities&) const = default;
};

struct UtilityReport {
  double w = 10.0;
  StationUtilities a;
  StationUtilities b;

  const StationUtilities& of(Station s) const { return s == Station::A ? a : b; }
  bool operator==(const UtilityReport&) const = default;
};

/// Draws iid session lengths and intrinsic classes until `horizon` slots are
/// covered. Deterministic in (config.seed, station); see rng.hpp for the
/// substream derivation.
SessionSchedule generate_schedule(const TrafficConfig& config, Station station);

/// QoS level received by `station` in a slot with the given access categories.
/// A gets 1 iff ac_a = VO and (ac_b = BE or ac_ba = BE).
/// B gets 1 iff ac_a = BE and ac_b = VO and ac_ba = VO.
constexpr int qos_level(Station station, TrafficClass ac_a, TrafficClass ac_ba,
                        TrafficClass ac_b) {
  using enum TrafficClass;
  if (station == Station::A) {
    return (ac_a == VO && (ac_b == BE || ac_ba == BE)) ? 1 : 0;
  }
  return (ac_a == BE && ac_b == VO && ac_ba == VO) ? 1 : 0;
}

/// Mean of the per-slot QoS levels of one session. Throws DomainError if empty.
double session_utility(std::span<const int> slot_levels);

/// Long-term per-class averages keyed by intrinsic class. Throws DomainError
/// for w <= 0.
UtilityReport aggregate_utilities(std::span<const SessionRecord> records, double w);

}  // namespace risc2win
