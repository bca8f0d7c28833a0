#ifndef CACHESIM_PLACEMENT_HPP_
#define CACHESIM_PLACEMENT_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "rng.hpp"

namespace cachesim {

// m = round(n^k) clamped to [1, n]; domain error unless 0 <= k <= 1.
int resolve_cache_size(int n, double k);

// Pool of n files served to n destinations, each source caching m of them.
struct CacheConfig {
  CacheConfig(int n, int m);
  int n;
  int m;
};

// Per-source cache contents. Destination j requests exactly file j, so the
// set of destinations a source can serve is the same index set as its cache.
class CachePlacement {
 public:
  static CachePlacement sample(const CacheConfig& config, RandomStream& stream);
  static CachePlacement from_caches(int n, std::vector<std::vector<int>> caches);

  int size() const { return n_; }
  int cache_size() const { return m_; }

  // File indices cached at source i, sorted ascending.
  std::span<const int> cache(int source) const {
    return {caches_[static_cast<std::size_t>(source)]};
  }
  // Destination indices source i can serve (identical to cache(i)).
  std::span<const int> serveable(int source) const { return cache(source); }

 private:
  CachePlacement(int n, int m, std::vector<std::vector<int>> caches);

  int n_;
  int m_;
  std::vector<std::vector<int>> caches_;
};

// Fraction of destinations that at least one source can serve.
double coverage(const CachePlacement& placement);

// How the per-source cache size is chosen for a given network size: either a
// memory exponent k (m = round(n^k)) or an explicit count.
class CacheRule {
 public:
  static CacheRule exponent(double k);
  static CacheRule explicit_size(int m);

  int resolve(int n) const;
  // log(m)/log(n) for explicit sizes, k itself for exponent rules.
  double effective_k(int n) const;
  bool is_exponent() const { return is_exponent_; }
  // Distinct 64-bit tag folded into stream derivation so that different
  // rules at the same n use different randomness.
  std::uint64_t seed_tag() const;

 private:
  CacheRule(bool is_exponent, double k, int m)
      : is_exponent_(is_exponent), k_(k), m_(m) {}

  bool is_exponent_;
  double k_;
  int m_;
};

}  // namespace cachesim

#endif  // CACHESIM_PLACEMENT_HPP_
