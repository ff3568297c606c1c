#pragma once

#include <cstdint>

namespace bohr {

/// Counter-based 64-bit generator.
///
/// Draw i (i = 0, 1, ...) of stream s under seed k is
///   mix(key + (i + 1) * G),  key = mix(k + (s + 1) * G),
/// with G = 0x9E3779B97F4A7C15 and mix the SplitMix64 finaliser. Any draw can
/// be recomputed from (seed, stream, index) alone, so per-sample streams are
/// independent of evaluation order and thread count.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform on [0,1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

  [[nodiscard]] std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

[[nodiscard]] std::uint64_t splitmix64_mix(std::uint64_t x);

}  // namespace bohr
