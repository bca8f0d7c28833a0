#ifndef CACHESIM_SCHEDULER_HPP_
#define CACHESIM_SCHEDULER_HPP_

#include <span>
#include <utility>
#include <vector>

#include "channel.hpp"
#include "placement.hpp"

namespace cachesim {

// SINR threshold and AWGN power, both linear scale.
struct LinkBudget {
  LinkBudget(double beta, double noise);
  double beta;
  double noise;
};

// The pair (best-destination vector, activated source set) plus the sorted
// pair order that the activation prefix refers to.
struct TransmissionStrategy {
  std::vector<int> best_dest;      // chosen destination per source
  std::vector<double> direct_power;  // gain on each chosen link
  std::vector<int> order;    // sources sorted by direct_power ascending
  std::vector<int> active;   // activated sources, strongest first
  int t_star = 0;            // |active|
};

// One slot's result: how many distinct destinations were served, plus the
// per-activated-link detail (aligned with TransmissionStrategy::active).
struct TrialOutcome {
  int throughput = 0;
  int t_star = 0;
  int link_successes = 0;  // successful links, before destination dedup
  std::vector<char> successes;
  std::vector<double> sinr;
};

struct BestDestinations {
  std::vector<int> best_dest;
  std::vector<double> direct_power;
};

// For each source, the serveable destination with the largest gain; ties go
// to the lowest destination index.
BestDestinations best_destinations(const ChannelMatrix& gamma,
                                   const CachePlacement& placement);

// gamma(source, dest) / (noise + sum of gamma(k, dest) over other active k).
double sinr(const ChannelMatrix& gamma, std::span<const int> active,
            int source, int dest, const LinkBudget& budget);

// Evaluate one activation set: a link succeeds when its SINR meets the
// threshold; throughput counts distinct destinations with a successful
// incoming link.
TrialOutcome evaluate_throughput(const ChannelMatrix& gamma,
                                 std::span<const int> best_dest,
                                 std::span<const int> active,
                                 const LinkBudget& budget);

// Full opportunistic scheduling pass: pick best destinations, sort pairs by
// direct power, try every top-i activation prefix, keep the throughput
// maximizer (smallest prefix on ties). Runs in O(n^2) via incremental
// per-destination interference sums.
std::pair<TransmissionStrategy, TrialOutcome> run_algorithm1(
    const ChannelMatrix& gamma, const CachePlacement& placement,
    const LinkBudget& budget);

}  // namespace cachesim

#endif  // CACHESIM_SCHEDULER_HPP_
