#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace risc2win::rng {

// Substream derivation, version 1:
//
//   stream_seed = splitmix64(master_seed ^ splitmix64(stream_tag))
//   engine      = std::mt19937_64(stream_seed)
//   uniform     = (engine() >> 11) * 2^-53          in [0, 1)
//
// Each (station, attribute) pair has a fixed tag, so a station's lengths and
// classes never depend on how many draws another stream consumed. Both the
// mixer and std::mt19937_64 are fully specified, so output is identical across
// platforms and standard libraries.
inline constexpr std::string_view kSchemeId = "splitmix64+mt19937_64/v1";

enum class StreamTag : std::uint64_t {
  LengthA = 0x4c454e2d41ULL,  // "LEN-A"
  LengthB = 0x4c454e2d42ULL,
  ClassA = 0x434f532d41ULL,   // "COS-A"
  ClassB = 0x434f532d42ULL,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, StreamTag tag) {
  return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(tag)));
}

class Stream {
 public:
  Stream(std::uint64_t master, StreamTag tag) : engine_(derive_seed(master, tag)) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace risc2win::rng
