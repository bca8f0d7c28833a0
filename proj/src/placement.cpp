#include "placement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cachesim {

int resolve_cache_size(int n, double k) {
  if (n < 1) {
    throw std::invalid_argument("node count must be at least 1");
  }
  if (!(k >= 0.0 && k <= 1.0)) {
    throw std::domain_error("memory exponent must lie in [0, 1]");
  }
  double m = std::floor(std::pow(static_cast<double>(n), k) + 0.5);
  m = std::clamp(m, 1.0, static_cast<double>(n));
  return static_cast<int>(m);
}

CacheConfig::CacheConfig(int n, int m) : n(n), m(m) {
  if (n < 1) {
    throw std::invalid_argument("node count must be at least 1");
  }
  if (m < 1 || m > n) {
    throw std::invalid_argument("cache size must lie in [1, n]");
  }
}

CachePlacement::CachePlacement(int n, int m,
                               std::vector<std::vector<int>> caches)
    : n_(n), m_(m), caches_(std::move(caches)) {}

CachePlacement CachePlacement::sample(const CacheConfig& config,
                                      RandomStream& stream) {
  std::vector<std::vector<int>> caches(config.n);
  std::vector<int> pool(config.n);
  for (auto& cache : caches) {
    std::iota(pool.begin(), pool.end(), 0);
    // Partial Fisher-Yates: after m swaps the prefix is a uniform m-subset.
    for (int j = 0; j < config.m; ++j) {
      auto pick = j + static_cast<int>(stream.next_below(
                          static_cast<std::uint64_t>(config.n - j)));
      std::swap(pool[j], pool[pick]);
    }
    cache.assign(pool.begin(), pool.begin() + config.m);
    std::sort(cache.begin(), cache.end());
  }
  return CachePlacement(config.n, config.m, std::move(caches));
}

CachePlacement CachePlacement::from_caches(
    int n, std::vector<std::vector<int>> caches) {
  if (n < 1) {
    throw std::invalid_argument("node count must be at least 1");
  }
  if (caches.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("need one cache per source");
  }
  std::size_t m = caches.front().size();
  if (m < 1 || m > static_cast<std::size_t>(n)) {
    throw std::invalid_argument("cache size must lie in [1, n]");
  }
  for (auto& cache : caches) {
    if (cache.size() != m) {
      throw std::invalid_argument("all caches must have equal size");
    }
    std::sort(cache.begin(), cache.end());
    for (std::size_t j = 0; j < cache.size(); ++j) {
      if (cache[j] < 0 || cache[j] >= n) {
        throw std::invalid_argument("file index out of range");
      }
      if (j > 0 && cache[j] == cache[j - 1]) {
        throw std::invalid_argument("duplicate file in cache");
      }
    }
  }
  return CachePlacement(n, static_cast<int>(m), std::move(caches));
}

double coverage(const CachePlacement& placement) {
  std::vector<char> seen(static_cast<std::size_t>(placement.size()), 0);
  for (int i = 0; i < placement.size(); ++i) {
    for (int j : placement.serveable(i)) {
      seen[static_cast<std::size_t>(j)] = 1;
    }
  }
  int covered = 0;
  for (char s : seen) covered += s;
  return static_cast<double>(covered) / placement.size();
}

CacheRule CacheRule::exponent(double k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw std::domain_error("memory exponent must lie in [0, 1]");
  }
  return CacheRule(true, k, 0);
}

CacheRule CacheRule::explicit_size(int m) {
  if (m < 1) {
    throw std::invalid_argument("cache size must be at least 1");
  }
  return CacheRule(false, 0.0, m);
}

int CacheRule::resolve(int n) const {
  if (is_exponent_) {
    return resolve_cache_size(n, k_);
  }
  if (m_ > n) {
    throw std::invalid_argument("cache size exceeds pool size");
  }
  return m_;
}

double CacheRule::effective_k(int n) const {
  if (is_exponent_) return k_;
  if (n < 2) return 0.0;
  return std::log(static_cast<double>(m_)) / std::log(static_cast<double>(n));
}

std::uint64_t CacheRule::seed_tag() const {
  if (is_exponent_) return std::bit_cast<std::uint64_t>(k_);
  return std::bit_cast<std::uint64_t>(-static_cast<double>(m_));
}

}  // namespace cachesim
