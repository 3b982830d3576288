#ifndef ATTNMOD_RNG_HPP
#define ATTNMOD_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace attnmod {

// std::mt19937_64 output is fully specified by the standard, but the
// standard distributions are not; the helpers below derive doubles from the
// raw stream so traces are byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Decorrelated stream for (seed, stream, step); the same triple always
  /// yields the same sequence.
  static Rng derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t step) {
    std::uint64_t z = seed;
    z = splitmix(z + 0x9E3779B97F4A7C15ull * (stream + 1));
    z = splitmix(z + 0x9E3779B97F4A7C15ull * (step + 1));
    return Rng(z);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; consumes two uniforms per call.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace attnmod

#endif  // ATTNMOD_RNG_HPP
