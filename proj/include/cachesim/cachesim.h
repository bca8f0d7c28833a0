#ifndef CACHESIM_CACHESIM_H_
#define CACHESIM_CACHESIM_H_

/*
 * C interface to the cache-enabled wireless network simulator.
 *
 * All entry points return a cachesim_status; on any status other than
 * CACHESIM_OK the output arguments are untouched and a human-readable
 * message is available from cachesim_last_error_message() (thread-local).
 * Handles are opaque; create/destroy pairs own them.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cachesim_status {
  CACHESIM_OK = 0,
  CACHESIM_ERR_INVALID_ARGUMENT = 1,
  CACHESIM_ERR_DOMAIN = 2,
  CACHESIM_ERR_LIMIT = 3,
  CACHESIM_ERR_INTERNAL = 4
} cachesim_status;

const char* cachesim_version(void);

/* Message for the most recent failing call on this thread; never NULL. */
const char* cachesim_last_error_message(void);

/*
 * Experiment configuration handle. Defaults: alpha 2, beta 1, noise 1,
 * trials 500, seed 0, memory exponent 0.5, placement redrawn every trial,
 * single-threaded.
 */
typedef struct cachesim_experiment cachesim_experiment;

cachesim_status cachesim_experiment_create(cachesim_experiment** out);
void cachesim_experiment_destroy(cachesim_experiment* experiment);

cachesim_status cachesim_experiment_set_shape(cachesim_experiment* experiment,
                                              double alpha);
cachesim_status cachesim_experiment_set_budget(cachesim_experiment* experiment,
                                               double beta, double noise);
cachesim_status cachesim_experiment_set_trials(cachesim_experiment* experiment,
                                               int trials);
cachesim_status cachesim_experiment_set_seed(cachesim_experiment* experiment,
                                             uint64_t seed);
/* The two cache rules are mutually exclusive; the last setter wins. */
cachesim_status cachesim_experiment_set_memory_exponent(
    cachesim_experiment* experiment, double k);
cachesim_status cachesim_experiment_set_cache_size(
    cachesim_experiment* experiment, int m);
cachesim_status cachesim_experiment_set_freeze_placement(
    cachesim_experiment* experiment, int freeze);
cachesim_status cachesim_experiment_set_threads(cachesim_experiment* experiment,
                                                int threads);

/* Aggregated Monte Carlo result at one network size. */
typedef struct cachesim_point {
  int n;
  int m;
  double mean_throughput;
  double std_throughput;
  double ci95_half_width;
  double mean_activation;
  int trials;
} cachesim_point;

cachesim_status cachesim_run_point(const cachesim_experiment* experiment,
                                   int n, cachesim_point* out);

/* out_points must hold n_count entries; results follow n_values order. */
cachesim_status cachesim_run_sweep(const cachesim_experiment* experiment,
                                   const int* n_values, size_t n_count,
                                   cachesim_point* out_points);

typedef struct cachesim_fit {
  double slope;
  double intercept;
  double r_squared;
  double predicted_slope;
  int points_used;
  int n_min;
  int n_max;
} cachesim_fit;

/*
 * Log-log regression of mean throughput on network size across the given
 * points; k and alpha determine the predicted slope (k+1)/(alpha+1).
 * Zero-throughput points are skipped; at least two positive points needed.
 */
cachesim_status cachesim_fit_points(const cachesim_point* points, size_t count,
                                    double k, double alpha, cachesim_fit* out);

typedef struct cachesim_gap_row {
  int trial;
  int alg_throughput;
  int oracle_throughput;
  double ratio;
} cachesim_gap_row;

typedef struct cachesim_gap_summary {
  double mean_alg;
  double mean_oracle;
  double mean_ratio;
} cachesim_gap_summary;

/*
 * Paired scheduler-vs-exhaustive-search comparison at small n. The
 * experiment handle supplies alpha, budget, trials and seed; rows (if not
 * NULL) must hold `trials` entries. Exhaustive search is limited to n <= 10
 * and m^n <= 1e6.
 */
cachesim_status cachesim_oracle_compare(const cachesim_experiment* experiment,
                                        int n, int m, cachesim_gap_row* rows,
                                        cachesim_gap_summary* out);

/* Closed-form scaling quantities at real-valued n. */
typedef struct cachesim_theory {
  double activation_scale;   /* t = n^((k+1)/(alpha+1) - epsilon) */
  double predicted_exponent; /* (k+1)/(alpha+1) */
  double lower_bound;        /* t/4 */
  double cache_scale;        /* n^k, real-valued */
  double a_n_asymptotic;     /* n^((k+1)/(alpha+1)) * n^(epsilon/alpha) */
  double falk_a;             /* exact centering at i = t, m = n^k */
  double falk_b;             /* matching spread */
} cachesim_theory;

/* falk_a/falk_b are NaN when t falls outside [1, n). */

cachesim_status cachesim_theory_eval(double n, double k, double alpha,
                                     double epsilon, cachesim_theory* out);

#ifdef __cplusplus
}
#endif

#endif /* CACHESIM_CACHESIM_H_ */
