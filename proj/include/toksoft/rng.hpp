#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace toksoft {

// xoshiro256++ seeded through splitmix64. The generator and every derived
// draw (uniform, int, normal, categorical) are implemented here explicitly so
// that a given seed produces bit-identical streams on every platform and
// toolchain. There is no global RNG anywhere in the library; streams are
// passed by the caller.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform();
  double uniform_range(double lo, double hi);

  // Uniform over {0, ..., n-1}; unbiased via rejection.
  int uniform_int(int n);

  // Box-Muller; draws two uniforms per call, no cached spare.
  double normal(double mean = 0.0, double stddev = 1.0);

  // Index draw from an (approximately normalized) probability vector.
  int categorical(std::span<const double> probs);

  std::array<std::uint64_t, 4> state() const { return s_; }
  void set_state(const std::array<std::uint64_t, 4>& s) { s_ = s; }

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace toksoft
