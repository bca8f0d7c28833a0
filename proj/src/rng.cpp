#include "rng.hpp"

namespace cachesim {

std::uint64_t RandomStream::derive_seed(std::uint64_t base,
                                        std::uint64_t stream_id) {
  // splitmix64 (Steele, Lea, Flood 2014): state walks in increments of the
  // golden-ratio constant, one finalizer application per output.
  std::uint64_t z = base + (stream_id + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t RandomStream::next_below(std::uint64_t bound) {
  // Rejection below (2^64 mod bound) keeps the result exactly uniform.
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace cachesim
