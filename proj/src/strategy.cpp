#include "risc2win/strategy.hpp"

#include <cctype>
#include <charconv>

namespace risc2win {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string Threshold::to_string() const {
  switch (kind_) {
    case Kind::MinusInf: return "-inf";
    case Kind::PlusInf: return "inf";
    case Kind::Finite: break;
  }
  return std::to_string(value_);
}

Threshold Threshold::parse(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "+inf") return plus_inf();
  if (text == "-inf") return minus_inf();
  int v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError("bad threshold '" + std::string(text) + "'");
  }
  return Threshold(v);
}

std::string StrategyProfile::to_string() const {
  return "(" + a.comb.to_string() + "," + a.down.to_string() + "," + b.down.to_string() + "," +
         b.up.to_string() + ")";
}

StrategyProfile StrategyProfile::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ConfigError("unbalanced parentheses in profile");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<Threshold> parts;
  while (true) {
    const auto comma = text.find(',');
    parts.push_back(Threshold::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (parts.size() != 4) throw ConfigError("profile needs exactly four thresholds");
  StrategyProfile p{{parts[0], parts[1]}, {parts[2], parts[3]}};
  if (!p.a.valid()) throw ConfigError("profile requires T_A,comb >= T_A,down");
  if (!p.b.valid()) throw ConfigError("profile requires T_B,down >= T_B,up");
  return p;
}

std::vector<ThresholdPair> enumerate_space(int R, Station station) {
  if (R < 1) throw DomainError("enumerate_space: R must be at least 1");
  std::vector<ThresholdPair> out;
  out.reserve(static_cast<std::size_t>((R + 1) * (R + 2) / 2));
  for (int x = 0; x <= R; ++x) {
    for (int y = 0; y <= x; ++y) {
      if (station == Station::A && x == R && y == R) continue;
      if (station == Station::B && x == 0 && y == 0) continue;
      out.push_back({x, y});
    }
  }
  return out;
}

}  // namespace risc2win
