#ifndef CACHESIM_ORACLE_HPP_
#define CACHESIM_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "scheduler.hpp"

namespace cachesim {

struct OracleResult {
  int best_throughput = 0;
  std::vector<int> best_dest;  // witness destination per source
  std::vector<int> active;     // witness activation set, ascending
};

// True optimum by exhaustive search over every destination assignment and
// every non-empty activation subset. Assignments are enumerated in
// mixed-radix order (source 0 least significant), subsets by binary counter;
// the first maximizer is kept. Rejects instances beyond n = 10 or with more
// than 1e6 assignments.
OracleResult oracle_optimum(const ChannelMatrix& gamma,
                            const CachePlacement& placement,
                            const LinkBudget& budget);

struct GapRow {
  int trial = 0;
  int t_alg = 0;
  int t_oracle = 0;
  double ratio = 1.0;
};

struct GapSummary {
  double mean_alg = 0.0;
  double mean_oracle = 0.0;
  double mean_ratio = 1.0;
  std::vector<GapRow> rows;
};

// Paired comparison on shared realizations: each trial draws one matrix and
// one placement, runs both the scheduler and the oracle, and records
// T_alg / T_oracle (1 when the oracle scores 0, which forces T_alg = 0 too).
GapSummary optimality_gap(int trials, const CacheConfig& config,
                          const LinkBudget& budget, ParetoShape shape,
                          std::uint64_t master_seed);

}  // namespace cachesim

#endif  // CACHESIM_ORACLE_HPP_
