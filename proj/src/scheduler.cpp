#include "scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cachesim {

LinkBudget::LinkBudget(double beta, double noise) : beta(beta), noise(noise) {
  if (!std::isfinite(beta) || beta <= 0.0) {
    throw std::invalid_argument("SINR threshold must be positive and finite");
  }
  if (!std::isfinite(noise) || noise < 0.0) {
    throw std::invalid_argument("noise power must be non-negative and finite");
  }
}

BestDestinations best_destinations(const ChannelMatrix& gamma,
                                   const CachePlacement& placement) {
  if (gamma.size() != placement.size()) {
    throw std::invalid_argument("matrix and placement sizes differ");
  }
  int n = gamma.size();
  BestDestinations out;
  out.best_dest.resize(static_cast<std::size_t>(n));
  out.direct_power.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto serveable = placement.serveable(i);
    if (serveable.empty()) {
      throw std::invalid_argument("source has no serveable destination");
    }
    int best = serveable[0];
    double best_gain = gamma.gain(i, best);
    for (int j : serveable.subspan(1)) {
      double g = gamma.gain(i, j);
      if (g > best_gain) {  // ties keep the lowest destination index
        best_gain = g;
        best = j;
      }
    }
    out.best_dest[static_cast<std::size_t>(i)] = best;
    out.direct_power[static_cast<std::size_t>(i)] = best_gain;
  }
  return out;
}

double sinr(const ChannelMatrix& gamma, std::span<const int> active,
            int source, int dest, const LinkBudget& budget) {
  double denom = budget.noise;
  for (int k : active) {
    if (k != source) denom += gamma.gain(k, dest);
  }
  if (denom <= 0.0) {
    throw std::domain_error("SINR denominator is zero");
  }
  return gamma.gain(source, dest) / denom;
}

TrialOutcome evaluate_throughput(const ChannelMatrix& gamma,
                                 std::span<const int> best_dest,
                                 std::span<const int> active,
                                 const LinkBudget& budget) {
  if (active.empty()) {
    throw std::invalid_argument("activation set must be non-empty");
  }
  TrialOutcome outcome;
  outcome.t_star = static_cast<int>(active.size());
  outcome.successes.reserve(active.size());
  outcome.sinr.reserve(active.size());
  std::vector<char> served(static_cast<std::size_t>(gamma.size()), 0);
  for (int s : active) {
    int d = best_dest[static_cast<std::size_t>(s)];
    double value = sinr(gamma, active, s, d, budget);
    bool ok = value >= budget.beta;
    outcome.sinr.push_back(value);
    outcome.successes.push_back(ok ? 1 : 0);
    if (ok) {
      ++outcome.link_successes;
      if (!served[static_cast<std::size_t>(d)]) {
        served[static_cast<std::size_t>(d)] = 1;
        ++outcome.throughput;
      }
    }
  }
  return outcome;
}

std::pair<TransmissionStrategy, TrialOutcome> run_algorithm1(
    const ChannelMatrix& gamma, const CachePlacement& placement,
    const LinkBudget& budget) {
  int n = gamma.size();
  auto [best_dest, direct_power] = best_destinations(gamma, placement);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double pa = direct_power[static_cast<std::size_t>(a)];
    double pb = direct_power[static_cast<std::size_t>(b)];
    return pa < pb || (pa == pb && a < b);
  });

  // Candidate i activates the i strongest pairs. Growing the set one source
  // at a time keeps a running total of received power at each destination,
  // so each candidate costs O(n).
  std::vector<double> received(static_cast<std::size_t>(n), 0.0);
  std::vector<int> active;  // strongest first
  active.reserve(static_cast<std::size_t>(n));
  std::vector<char> served(static_cast<std::size_t>(n), 0);

  int best_t = 0;
  int best_throughput = -1;
  for (int i = 1; i <= n; ++i) {
    int added = order[static_cast<std::size_t>(n - i)];
    active.push_back(added);
    for (int d = 0; d < n; ++d) {
      received[static_cast<std::size_t>(d)] += gamma.gain(added, d);
    }
    std::fill(served.begin(), served.end(), 0);
    int throughput = 0;
    for (int s : active) {
      auto d = static_cast<std::size_t>(best_dest[static_cast<std::size_t>(s)]);
      double direct = gamma.gain(s, static_cast<int>(d));
      double denom = budget.noise + received[d] - direct;
      if (denom <= 0.0) {
        throw std::domain_error("SINR denominator is zero");
      }
      if (direct / denom >= budget.beta && !served[d]) {
        served[d] = 1;
        ++throughput;
      }
    }
    if (throughput > best_throughput) {
      best_throughput = throughput;
      best_t = i;
    }
  }

  TransmissionStrategy strategy;
  strategy.best_dest = std::move(best_dest);
  strategy.direct_power = std::move(direct_power);
  strategy.order = std::move(order);
  strategy.t_star = best_t;
  strategy.active.reserve(static_cast<std::size_t>(best_t));
  for (int i = 1; i <= best_t; ++i) {
    strategy.active.push_back(strategy.order[static_cast<std::size_t>(n - i)]);
  }

  TrialOutcome outcome = evaluate_throughput(gamma, strategy.best_dest,
                                             strategy.active, budget);
  return {std::move(strategy), outcome};
}

}  // namespace cachesim
