#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace cachesim {

OracleResult oracle_optimum(const ChannelMatrix& gamma,
                            const CachePlacement& placement,
                            const LinkBudget& budget) {
  int n = gamma.size();
  if (n != placement.size()) {
    throw std::invalid_argument("matrix and placement sizes differ");
  }
  if (n > 10) {
    throw std::length_error("exhaustive search limited to n <= 10");
  }
  double assignments = std::pow(static_cast<double>(placement.cache_size()),
                                static_cast<double>(n));
  if (assignments > 1e6) {
    throw std::length_error("too many destination assignments to enumerate");
  }

  int m = placement.cache_size();
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  std::vector<int> dest(static_cast<std::size_t>(n));
  std::vector<char> served(static_cast<std::size_t>(n), 0);

  OracleResult best;
  best.best_throughput = -1;

  bool more = true;
  while (more) {
    for (int i = 0; i < n; ++i) {
      dest[static_cast<std::size_t>(i)] =
          placement.serveable(i)[static_cast<std::size_t>(
              digits[static_cast<std::size_t>(i)])];
    }
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::fill(served.begin(), served.end(), 0);
      int throughput = 0;
      for (int s = 0; s < n; ++s) {
        if (!(mask & (1u << s))) continue;
        auto d = static_cast<std::size_t>(dest[static_cast<std::size_t>(s)]);
        double denom = budget.noise;
        for (int k = 0; k < n; ++k) {
          if (k != s && (mask & (1u << k))) {
            denom += gamma.gain(k, static_cast<int>(d));
          }
        }
        if (denom <= 0.0) {
          throw std::domain_error("SINR denominator is zero");
        }
        double direct = gamma.gain(s, static_cast<int>(d));
        if (direct / denom >= budget.beta && !served[d]) {
          served[d] = 1;
          ++throughput;
        }
      }
      if (throughput > best.best_throughput) {
        best.best_throughput = throughput;
        best.best_dest = dest;
        best.active.clear();
        for (int s = 0; s < n; ++s) {
          if (mask & (1u << s)) best.active.push_back(s);
        }
      }
    }
    more = false;
    for (int i = 0; i < n; ++i) {
      auto idx = static_cast<std::size_t>(i);
      if (++digits[idx] < m) {
        more = true;
        break;
      }
      digits[idx] = 0;
    }
  }
  return best;
}

GapSummary optimality_gap(int trials, const CacheConfig& config,
                          const LinkBudget& budget, ParetoShape shape,
                          std::uint64_t master_seed) {
  if (trials < 1) {
    throw std::invalid_argument("need at least one trial");
  }
  GapSummary summary;
  summary.rows.reserve(static_cast<std::size_t>(trials));
  double sum_alg = 0.0;
  double sum_oracle = 0.0;
  double sum_ratio = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    auto stream =
        RandomStream::derived(master_seed, static_cast<std::uint64_t>(trial));
    auto gamma = generate_matrix(config.n, shape, stream);
    auto placement = CachePlacement::sample(config, stream);
    auto [strategy, outcome] = run_algorithm1(gamma, placement, budget);
    auto optimum = oracle_optimum(gamma, placement, budget);

    GapRow row;
    row.trial = trial;
    row.t_alg = outcome.throughput;
    row.t_oracle = optimum.best_throughput;
    row.ratio = optimum.best_throughput > 0
                    ? static_cast<double>(row.t_alg) / row.t_oracle
                    : 1.0;
    sum_alg += row.t_alg;
    sum_oracle += row.t_oracle;
    sum_ratio += row.ratio;
    summary.rows.push_back(row);
  }
  summary.mean_alg = sum_alg / trials;
  summary.mean_oracle = sum_oracle / trials;
  summary.mean_ratio = sum_ratio / trials;
  return summary;
}

}  // namespace cachesim
