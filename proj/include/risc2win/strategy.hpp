#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "risc2win/model.hpp"

namespace risc2win {

/// Integer threshold extended with -inf ("always below r") and +inf ("never
/// reached").
class Threshold {
 public:
  constexpr Threshold() = default;
  constexpr explicit Threshold(int value) : kind_(Kind::Finite), value_(value) {}

  static constexpr Threshold minus_inf() { return Threshold(Kind::MinusInf); }
  static constexpr Threshold plus_inf() { return Threshold(Kind::PlusInf); }

  constexpr bool finite() const { return kind_ == Kind::Finite; }
  constexpr int value() const { return value_; }

  /// r >= t
  friend constexpr bool reaches(int r, Threshold t) {
    switch (t.kind_) {
      case Kind::MinusInf: return true;
      case Kind::PlusInf: return false;
      case Kind::Finite: break;
    }
    return r >= t.value_;
  }
  /// r <= t
  friend constexpr bool within(int r, Threshold t) {
    switch (t.kind_) {
      case Kind::MinusInf: return false;
      case Kind::PlusInf: return true;
      case Kind::Finite: break;
    }
    return r <= t.value_;
  }

  friend constexpr std::strong_ordering operator<=>(Threshold lhs, Threshold rhs) {
    if (lhs.kind_ != rhs.kind_ || lhs.kind_ != Kind::Finite) {
      return rank(lhs.kind_) <=> rank(rhs.kind_);
    }
    return lhs.value_ <=> rhs.value_;
  }
  friend constexpr bool operator==(Threshold lhs, Threshold rhs) {
    return (lhs <=> rhs) == std::strong_ordering::equal;
  }

  std::string to_string() const;
  /// Accepts an integer, "inf", "+inf" or "-inf". Throws ConfigError.
  static Threshold parse(std::string_view text);

 private:
  enum class Kind { Finite, MinusInf, PlusInf };
  constexpr explicit Threshold(Kind k) : kind_(k) {}
  static constexpr int rank(Kind k) { return k == Kind::MinusInf ? 0 : k == Kind::Finite ? 1 : 2; }

  Kind kind_ = Kind::Finite;
  int value_ = 0;
};

/// Station A: combined attack when r >= comb, own downgrade when r <= down.
struct ThresholdsA {
  Threshold comb = Threshold::plus_inf();
  Threshold down = Threshold::minus_inf();

  bool valid() const { return comb >= down; }
  bool operator==(const ThresholdsA&) const = default;
};

/// Station B: own downgrade when r >= down, own upgrade when r <= up.
struct ThresholdsB {
  Threshold down = Threshold::plus_inf();
  Threshold up = Threshold::minus_inf();

  bool valid() const { return down >= up; }
  bool operator==(const ThresholdsB&) const = default;
};

/// Canonical textual order: (T_A,comb, T_A,down, T_B,down, T_B,up).
struct StrategyProfile {
  ThresholdsA a;
  ThresholdsB b;

  static StrategyProfile neutral() { return {}; }

  bool valid() const { return a.valid() && b.valid(); }
  std::string to_string() const;
  /// Parses "(3, 1, 4, 1)" or "(inf,-inf,inf,-inf)"; parentheses optional.
  /// Throws ConfigError on syntax or ordering violations.
  static StrategyProfile parse(std::string_view text);

  bool operator==(const StrategyProfile&) const = default;
};

struct BDecision {
  TrafficClass cos_b;
  TrafficClass ac_b;
  bool operator==(const BDecision&) const = default;
};

struct ARelayDecision {
  TrafficClass ac_a;
  TrafficClass ac_ba;
  bool operator==(const ARelayDecision&) const = default;
};

struct ADecision {
  TrafficClass cos_a;
  TrafficClass ac_a;
  TrafficClass ac_ba;
  bool operator==(const ADecision&) const = default;
};

// Branches are tested top to bottom, so on equal thresholds the downgrade
// branch wins.

/// B's session start: announce and pick access category for the new session.
constexpr BDecision decide_b_at_b_start(ThresholdsB th, int r, TrafficClass icos_b) {
  if (reaches(r, th.down)) return {TrafficClass::BE, TrafficClass::BE};
  if (within(r, th.up)) return {TrafficClass::VO, TrafficClass::VO};
  return {icos_b, icos_b};
}

/// A's refresh when B starts a session while A is mid-session.
constexpr ARelayDecision decide_a_at_b_start(ThresholdsA th, int r, TrafficClass cos_a_current,
                                             TrafficClass cos_b_new) {
  if (within(r, th.down)) return {TrafficClass::BE, cos_b_new};
  if (reaches(r, th.comb)) return {cos_a_current, TrafficClass::BE};
  return {cos_a_current, cos_b_new};
}

/// B's refresh when A starts a session while B is mid-session.
constexpr TrafficClass decide_b_at_a_start(ThresholdsB th, int r, TrafficClass cos_b_current) {
  if (reaches(r, th.down)) return TrafficClass::BE;
  return cos_b_current;
}

/// A's session start.
constexpr ADecision decide_a_at_a_start(ThresholdsA th, int r, TrafficClass icos_a,
                                        TrafficClass cos_b_current) {
  if (within(r, th.down)) return {TrafficClass::BE, TrafficClass::BE, cos_b_current};
  if (reaches(r, th.comb)) return {TrafficClass::VO, TrafficClass::VO, TrafficClass::BE};
  return {icos_a, icos_a, cos_b_current};
}

/// A finite threshold pair (first >= second).
struct ThresholdPair {
  int first = 0;
  int second = 0;
  bool operator==(const ThresholdPair&) const = default;
};

/// All pairs x >= y over {0..R} in lexicographic order, without (R, R) for A
/// and (0, 0) for B. Throws DomainError for R < 1.
std::vector<ThresholdPair> enumerate_space(int R, Station station);

inline ThresholdsA to_thresholds_a(ThresholdPair p) {
  return {Threshold(p.first), Threshold(p.second)};
}
inline ThresholdsB to_thresholds_b(ThresholdPair p) {
  return {Threshold(p.first), Threshold(p.second)};
}

}  // namespace risc2win
