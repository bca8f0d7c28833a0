#include "cachesim/cachesim.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "experiments.hpp"
#include "oracle.hpp"
#include "theory.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
cachesim_status guarded(Fn&& fn) {
  try {
    fn();
    return CACHESIM_OK;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return CACHESIM_ERR_DOMAIN;
  } catch (const std::length_error& e) {
    g_last_error = e.what();
    return CACHESIM_ERR_LIMIT;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return CACHESIM_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CACHESIM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CACHESIM_ERR_INTERNAL;
  }
}

cachesim_status null_argument(const char* name) {
  g_last_error = std::string(name) + " must not be NULL";
  return CACHESIM_ERR_INVALID_ARGUMENT;
}

cachesim_point to_c_point(const cachesim::AggregatePoint& point) {
  cachesim_point out;
  out.n = point.n;
  out.m = point.m;
  out.mean_throughput = point.mean_throughput;
  out.std_throughput = point.std_throughput;
  out.ci95_half_width = point.ci95_half_width;
  out.mean_activation = point.mean_activation;
  out.trials = point.trials;
  return out;
}

}  // namespace

struct cachesim_experiment {
  double alpha = 2.0;
  double beta = 1.0;
  double noise = 1.0;
  int trials = 500;
  uint64_t seed = 0;
  bool use_exponent = true;
  double k = 0.5;
  int m = 1;
  bool freeze_placement = false;
  int threads = 1;

  cachesim::CacheRule rule() const {
    return use_exponent ? cachesim::CacheRule::exponent(k)
                        : cachesim::CacheRule::explicit_size(m);
  }
  cachesim::ExperimentSpec spec(std::vector<int> n_values) const {
    return cachesim::ExperimentSpec(std::move(n_values), rule(),
                                    cachesim::ParetoShape(alpha),
                                    cachesim::LinkBudget(beta, noise), trials,
                                    seed, freeze_placement);
  }
};

extern "C" {

const char* cachesim_version(void) { return "0.1.0"; }

const char* cachesim_last_error_message(void) { return g_last_error.c_str(); }

cachesim_status cachesim_experiment_create(cachesim_experiment** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new cachesim_experiment(); });
}

void cachesim_experiment_destroy(cachesim_experiment* experiment) {
  delete experiment;
}

cachesim_status cachesim_experiment_set_shape(cachesim_experiment* experiment,
                                              double alpha) {
  if (!experiment) return null_argument("experiment");
  return guarded([&] {
    cachesim::ParetoShape shape(alpha);
    experiment->alpha = shape.alpha();
  });
}

cachesim_status cachesim_experiment_set_budget(cachesim_experiment* experiment,
                                               double beta, double noise) {
  if (!experiment) return null_argument("experiment");
  return guarded([&] {
    cachesim::LinkBudget budget(beta, noise);
    experiment->beta = budget.beta;
    experiment->noise = budget.noise;
  });
}

cachesim_status cachesim_experiment_set_trials(cachesim_experiment* experiment,
                                               int trials) {
  if (!experiment) return null_argument("experiment");
  return guarded([&] {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    experiment->trials = trials;
  });
}

cachesim_status cachesim_experiment_set_seed(cachesim_experiment* experiment,
                                             uint64_t seed) {
  if (!experiment) return null_argument("experiment");
  experiment->seed = seed;
  return CACHESIM_OK;
}

cachesim_status cachesim_experiment_set_memory_exponent(
    cachesim_experiment* experiment, double k) {
  if (!experiment) return null_argument("experiment");
  return guarded([&] {
    cachesim::CacheRule::exponent(k);
    experiment->use_exponent = true;
    experiment->k = k;
  });
}

cachesim_status cachesim_experiment_set_cache_size(
    cachesim_experiment* experiment, int m) {
  if (!experiment) return null_argument("experiment");
  return guarded([&] {
    cachesim::CacheRule::explicit_size(m);
    experiment->use_exponent = false;
    experiment->m = m;
  });
}

cachesim_status cachesim_experiment_set_freeze_placement(
    cachesim_experiment* experiment, int freeze) {
  if (!experiment) return null_argument("experiment");
  experiment->freeze_placement = freeze != 0;
  return CACHESIM_OK;
}

cachesim_status cachesim_experiment_set_threads(
    cachesim_experiment* experiment, int threads) {
  if (!experiment) return null_argument("experiment");
  return guarded([&] {
    if (threads < 1) {
      throw std::invalid_argument("thread count must be at least 1");
    }
    experiment->threads = threads;
  });
}

cachesim_status cachesim_run_point(const cachesim_experiment* experiment,
                                   int n, cachesim_point* out) {
  if (!experiment) return null_argument("experiment");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto spec = experiment->spec({n});
    *out = to_c_point(cachesim::run_point(spec, n, experiment->threads));
  });
}

cachesim_status cachesim_run_sweep(const cachesim_experiment* experiment,
                                   const int* n_values, size_t n_count,
                                   cachesim_point* out_points) {
  if (!experiment) return null_argument("experiment");
  if (!n_values) return null_argument("n_values");
  if (!out_points) return null_argument("out_points");
  return guarded([&] {
    auto spec = experiment->spec({n_values, n_values + n_count});
    auto points = cachesim::sweep(spec, experiment->threads);
    for (size_t i = 0; i < points.size(); ++i) {
      out_points[i] = to_c_point(points[i]);
    }
  });
}

cachesim_status cachesim_fit_points(const cachesim_point* points, size_t count,
                                    double k, double alpha,
                                    cachesim_fit* out) {
  if (!points) return null_argument("points");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::vector<cachesim::AggregatePoint> converted(count);
    for (size_t i = 0; i < count; ++i) {
      converted[i].n = points[i].n;
      converted[i].m = points[i].m;
      converted[i].mean_throughput = points[i].mean_throughput;
      converted[i].std_throughput = points[i].std_throughput;
      converted[i].ci95_half_width = points[i].ci95_half_width;
      converted[i].mean_activation = points[i].mean_activation;
      converted[i].trials = points[i].trials;
    }
    auto estimate =
        cachesim::fit_exponent(converted, k, cachesim::ParetoShape(alpha));
    out->slope = estimate.slope;
    out->intercept = estimate.intercept;
    out->r_squared = estimate.r_squared;
    out->predicted_slope = estimate.predicted_slope;
    out->points_used = estimate.points_used;
    out->n_min = estimate.n_min;
    out->n_max = estimate.n_max;
  });
}

cachesim_status cachesim_oracle_compare(const cachesim_experiment* experiment,
                                        int n, int m, cachesim_gap_row* rows,
                                        cachesim_gap_summary* out) {
  if (!experiment) return null_argument("experiment");
  if (!out) return null_argument("out");
  return guarded([&] {
    cachesim::CacheConfig config(n, m);
    auto summary = cachesim::optimality_gap(
        experiment->trials, config,
        cachesim::LinkBudget(experiment->beta, experiment->noise),
        cachesim::ParetoShape(experiment->alpha), experiment->seed);
    if (rows) {
      for (size_t i = 0; i < summary.rows.size(); ++i) {
        rows[i].trial = summary.rows[i].trial;
        rows[i].alg_throughput = summary.rows[i].t_alg;
        rows[i].oracle_throughput = summary.rows[i].t_oracle;
        rows[i].ratio = summary.rows[i].ratio;
      }
    }
    out->mean_alg = summary.mean_alg;
    out->mean_oracle = summary.mean_oracle;
    out->mean_ratio = summary.mean_ratio;
  });
}

cachesim_status cachesim_theory_eval(double n, double k, double alpha,
                                     double epsilon, cachesim_theory* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    cachesim::ParetoShape shape(alpha);
    cachesim::TheoryParams params(n, k, shape, epsilon);
    cachesim_theory result;
    result.activation_scale = cachesim::activation_scale(params);
    result.predicted_exponent = cachesim::predicted_exponent(k, shape);
    result.lower_bound = cachesim::theorem_lower_bound(params);
    result.cache_scale = std::pow(n, k);
    result.a_n_asymptotic = cachesim::a_n_asymptotic(params);
    double t = result.activation_scale;
    if (t >= 1.0 && t < n) {
      auto falk =
          cachesim::falk_normalizers(n, t, result.cache_scale, shape);
      result.falk_a = falk.a_n;
      result.falk_b = falk.b_n;
    } else {
      result.falk_a = std::numeric_limits<double>::quiet_NaN();
      result.falk_b = std::numeric_limits<double>::quiet_NaN();
    }
    *out = result;
  });
}

}  // extern "C"
