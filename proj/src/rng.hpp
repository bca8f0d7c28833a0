#ifndef CACHESIM_RNG_HPP_
#define CACHESIM_RNG_HPP_

#include <cstdint>
#include <random>

namespace cachesim {

// Deterministic random stream: a std::mt19937_64 engine behind fixed bit
// mappings, so a given seed reproduces the same draws bit for bit on every
// run. Independent streams are derived from (base seed, stream id) with
// splitmix64, which lets trials execute in any order or in parallel without
// coordinating.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // The stream_id'th output of a splitmix64 generator seeded with `base`.
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream_id);

  static RandomStream derived(std::uint64_t base, std::uint64_t stream_id) {
    return RandomStream(derive_seed(base, stream_id));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) using the top 53 bits.
  double next_uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer on [0, bound), unbiased. bound must be >= 1.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace cachesim

#endif  // CACHESIM_RNG_HPP_
