#include "experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "stats.hpp"

namespace cachesim {

namespace {

constexpr double kZ95 = 1.959963984540054;
constexpr std::uint64_t kFrozenPlacementTag = ~0ull;

std::uint64_t point_seed(const ExperimentSpec& spec, int n) {
  std::uint64_t seed = RandomStream::derive_seed(
      spec.master_seed, static_cast<std::uint64_t>(n));
  seed = RandomStream::derive_seed(seed, spec.rule.seed_tag());
  return RandomStream::derive_seed(
      seed, std::bit_cast<std::uint64_t>(spec.shape.alpha()));
}

}  // namespace

ExperimentSpec::ExperimentSpec(std::vector<int> n_values, CacheRule rule,
                               ParetoShape shape, LinkBudget budget,
                               int trials, std::uint64_t master_seed,
                               bool freeze_placement)
    : n_values(std::move(n_values)),
      rule(rule),
      shape(shape),
      budget(budget),
      trials(trials),
      master_seed(master_seed),
      freeze_placement(freeze_placement) {
  if (this->n_values.empty()) {
    throw std::invalid_argument("need at least one network size");
  }
  for (std::size_t i = 0; i < this->n_values.size(); ++i) {
    if (this->n_values[i] < 1) {
      throw std::invalid_argument("network sizes must be at least 1");
    }
    if (i > 0 && this->n_values[i] <= this->n_values[i - 1]) {
      throw std::invalid_argument("network sizes must be strictly increasing");
    }
  }
  if (trials < 1) {
    throw std::invalid_argument("need at least one trial");
  }
}

AggregatePoint run_point(const ExperimentSpec& spec, int n, int threads) {
  if (threads < 1) {
    throw std::invalid_argument("thread count must be at least 1");
  }
  int m = spec.rule.resolve(n);
  CacheConfig config(n, m);
  std::uint64_t seed = point_seed(spec, n);

  const CachePlacement* frozen = nullptr;
  std::vector<CachePlacement> frozen_storage;
  if (spec.freeze_placement) {
    auto stream = RandomStream::derived(seed, kFrozenPlacementTag);
    frozen_storage.push_back(CachePlacement::sample(config, stream));
    frozen = &frozen_storage.front();
  }

  std::vector<double> throughput(static_cast<std::size_t>(spec.trials));
  std::vector<double> activation(static_cast<std::size_t>(spec.trials));
  auto run_trial = [&](int trial) {
    auto stream = RandomStream::derived(seed, static_cast<std::uint64_t>(trial));
    auto gamma = generate_matrix(n, spec.shape, stream);
    auto placement =
        frozen ? *frozen : CachePlacement::sample(config, stream);
    auto [strategy, outcome] = run_algorithm1(gamma, placement, spec.budget);
    throughput[static_cast<std::size_t>(trial)] = outcome.throughput;
    activation[static_cast<std::size_t>(trial)] = outcome.t_star;
  };

  int workers = std::min(threads, spec.trials);
  if (workers <= 1) {
    for (int trial = 0; trial < spec.trials; ++trial) run_trial(trial);
  } else {
    // Results land in per-trial slots, so the striding below only affects
    // scheduling, never the aggregate.
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int trial = w; trial < spec.trials; trial += workers) {
            run_trial(trial);
          }
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  auto moments = sample_moments(throughput);
  AggregatePoint point;
  point.n = n;
  point.m = m;
  point.trials = spec.trials;
  point.mean_throughput = moments.mean;
  point.std_throughput = moments.stddev;
  point.ci95_half_width =
      kZ95 * moments.stddev / std::sqrt(static_cast<double>(spec.trials));
  point.mean_activation = sample_moments(activation).mean;
  return point;
}

std::vector<AggregatePoint> sweep(const ExperimentSpec& spec, int threads) {
  std::vector<AggregatePoint> points;
  points.reserve(spec.n_values.size());
  for (int n : spec.n_values) {
    points.push_back(run_point(spec, n, threads));
  }
  return points;
}

ScalingEstimate fit_exponent(std::span<const AggregatePoint> points, double k,
                             ParetoShape shape) {
  if (points.size() < 2) {
    throw std::invalid_argument("exponent fit needs at least 2 points");
  }
  std::vector<double> log_n;
  std::vector<double> log_t;
  int n_min = 0;
  int n_max = 0;
  for (const auto& p : points) {
    if (p.mean_throughput <= 0.0) continue;
    if (log_n.empty() || p.n < n_min) n_min = p.n;
    if (log_n.empty() || p.n > n_max) n_max = p.n;
    log_n.push_back(std::log(static_cast<double>(p.n)));
    log_t.push_back(std::log(p.mean_throughput));
  }
  if (log_n.size() < 2) {
    throw std::invalid_argument(
        "exponent fit needs at least 2 points with positive mean throughput");
  }
  auto fit = ols_fit(log_n, log_t);
  ScalingEstimate estimate;
  estimate.slope = fit.slope;
  estimate.intercept = fit.intercept;
  estimate.r_squared = fit.r_squared;
  estimate.predicted_slope = predicted_exponent(k, shape);
  estimate.points_used = static_cast<int>(log_n.size());
  estimate.n_min = n_min;
  estimate.n_max = n_max;
  return estimate;
}

std::vector<ExponentCell> exponent_grid(std::span<const double> k_values,
                                        std::span<const double> alpha_values,
                                        const ExperimentSpec& base,
                                        int threads) {
  if (k_values.empty() || alpha_values.empty()) {
    throw std::invalid_argument("grid axes must be non-empty");
  }
  std::vector<ExponentCell> cells;
  cells.reserve(k_values.size() * alpha_values.size());
  for (double k : k_values) {
    for (double alpha : alpha_values) {
      ExperimentSpec spec(base.n_values, CacheRule::exponent(k),
                          ParetoShape(alpha), base.budget, base.trials,
                          base.master_seed, base.freeze_placement);
      auto points = sweep(spec, threads);
      ExponentCell cell;
      cell.k = k;
      cell.alpha = alpha;
      cell.estimate = fit_exponent(points, k, spec.shape);
      cells.push_back(cell);
    }
  }
  return cells;
}

std::vector<TheoremRow> validate_theorem(const ExperimentSpec& spec,
                                         double epsilon, int threads) {
  if (!spec.rule.is_exponent()) {
    throw std::invalid_argument(
        "theorem validation needs a memory-exponent cache rule");
  }
  std::vector<TheoremRow> rows;
  rows.reserve(spec.n_values.size());
  for (int n : spec.n_values) {
    auto point = run_point(spec, n, threads);
    TheoryParams params(static_cast<double>(n), spec.rule.effective_k(n),
                        spec.shape, epsilon);
    TheoremRow row;
    row.n = n;
    row.m = point.m;
    row.mean_throughput = point.mean_throughput;
    row.lower_bound = theorem_lower_bound(params);
    row.met = point.mean_throughput >= row.lower_bound;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cachesim
