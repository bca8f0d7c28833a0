#ifndef CACHESIM_EXPERIMENTS_HPP_
#define CACHESIM_EXPERIMENTS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "channel.hpp"
#include "placement.hpp"
#include "scheduler.hpp"
#include "theory.hpp"

namespace cachesim {

struct ExperimentSpec {
  ExperimentSpec(std::vector<int> n_values, CacheRule rule, ParetoShape shape,
                 LinkBudget budget, int trials, std::uint64_t master_seed,
                 bool freeze_placement = false);

  std::vector<int> n_values;  // non-empty, strictly increasing
  CacheRule rule;
  ParetoShape shape;
  LinkBudget budget;
  int trials;
  std::uint64_t master_seed;
  bool freeze_placement;
};

struct AggregatePoint {
  int n = 0;
  int m = 0;
  double mean_throughput = 0.0;
  double std_throughput = 0.0;
  double ci95_half_width = 0.0;
  double mean_activation = 0.0;
  int trials = 0;
};

struct ScalingEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double predicted_slope = 0.0;
  int points_used = 0;
  int n_min = 0;
  int n_max = 0;
};

struct ExponentCell {
  double k = 0.0;
  double alpha = 0.0;
  ScalingEstimate estimate;
};

struct TheoremRow {
  int n = 0;
  int m = 0;
  double mean_throughput = 0.0;
  double lower_bound = 0.0;
  bool met = false;
};

// Average `trials` independent realizations at one network size. Each trial
// draws its own stream from (point seed, trial index), so results do not
// depend on execution order; `threads` > 1 splits trials across workers and
// aggregates in trial order, reproducing the serial result exactly.
AggregatePoint run_point(const ExperimentSpec& spec, int n, int threads = 1);

// One AggregatePoint per n value; every point derives its own seed from
// (master seed, n, cache rule, alpha), so adding sizes never changes
// existing points.
std::vector<AggregatePoint> sweep(const ExperimentSpec& spec, int threads = 1);

// OLS of log(mean throughput) on log(n). Points with zero mean throughput
// are skipped (at least two positive points required).
ScalingEstimate fit_exponent(std::span<const AggregatePoint> points, double k,
                             ParetoShape shape);

// One sweep-and-fit per (k, alpha) pair; row order follows the input lists,
// k outermost.
std::vector<ExponentCell> exponent_grid(std::span<const double> k_values,
                                        std::span<const double> alpha_values,
                                        const ExperimentSpec& base,
                                        int threads = 1);

// Measured mean throughput next to the t/4 reference. The flag is
// informational: the bound is asymptotic and may not hold at small n.
std::vector<TheoremRow> validate_theorem(const ExperimentSpec& spec,
                                         double epsilon, int threads = 1);

}  // namespace cachesim

#endif  // CACHESIM_EXPERIMENTS_HPP_
