#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>

namespace hetsnet {

// Finalizer from the splitmix64 generator. Used to decorrelate user-chosen
// seeds and to derive independent substreams (seed ^ stream-index) so that
// parallel trials never share generator state.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random stream. std::mt19937_64 is fully specified by the
// standard, and the uniform/normal transforms below are hand-rolled, so a
// given seed produces identical draws on every platform and toolchain.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  // Independent stream for one unit of parallel work. The seed is mixed
  // before the xor so that nearby master seeds do not alias onto each
  // other's stream keys when stream indices are small integers.
  static Rng substream(std::uint64_t seed, std::uint64_t stream_index) {
    return Rng(splitmix64(seed) ^ stream_index);
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log() argument.
  double uniform_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Two independent standard normals via the Box-Muller transform.
  std::pair<double, double> normal_pair() {
    const double radius = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double angle = 2.0 * std::numbers::pi_v<double> * uniform();
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace hetsnet
