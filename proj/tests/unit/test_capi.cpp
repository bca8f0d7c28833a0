#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "cachesim/cachesim.h"
#include "channel.hpp"
#include "doctest.h"
#include "experiments.hpp"
#include "placement.hpp"
#include "scheduler.hpp"
#include "theory.hpp"

namespace {

struct Handle {
  Handle() { REQUIRE(cachesim_experiment_create(&h) == CACHESIM_OK); }
  ~Handle() { cachesim_experiment_destroy(h); }
  cachesim_experiment* h = nullptr;
};

}  // namespace

TEST_CASE("version and error message are always available") {
  CHECK(std::strlen(cachesim_version()) > 0);
  CHECK(cachesim_last_error_message() != nullptr);
}

TEST_CASE("null arguments are rejected with a message") {
  CHECK(cachesim_experiment_create(nullptr) ==
        CACHESIM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(cachesim_last_error_message()).find("NULL") !=
        std::string::npos);
  CHECK(cachesim_experiment_set_shape(nullptr, 2.0) ==
        CACHESIM_ERR_INVALID_ARGUMENT);
  Handle ex;
  CHECK(cachesim_run_point(ex.h, 10, nullptr) ==
        CACHESIM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("setter validation maps to status codes") {
  Handle ex;
  CHECK(cachesim_experiment_set_shape(ex.h, 1.0) == CACHESIM_ERR_DOMAIN);
  CHECK(std::strlen(cachesim_last_error_message()) > 0);
  CHECK(cachesim_experiment_set_shape(ex.h, 2.5) == CACHESIM_OK);
  CHECK(cachesim_experiment_set_trials(ex.h, 0) ==
        CACHESIM_ERR_INVALID_ARGUMENT);
  CHECK(cachesim_experiment_set_budget(ex.h, 0.0, 1.0) ==
        CACHESIM_ERR_INVALID_ARGUMENT);
  CHECK(cachesim_experiment_set_memory_exponent(ex.h, 1.5) ==
        CACHESIM_ERR_DOMAIN);
  CHECK(cachesim_experiment_set_cache_size(ex.h, 0) ==
        CACHESIM_ERR_INVALID_ARGUMENT);
  CHECK(cachesim_experiment_set_threads(ex.h, 0) ==
        CACHESIM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("point results match the native implementation") {
  Handle ex;
  REQUIRE(cachesim_experiment_set_shape(ex.h, 2.0) == CACHESIM_OK);
  REQUIRE(cachesim_experiment_set_budget(ex.h, 1.0, 1.0) == CACHESIM_OK);
  REQUIRE(cachesim_experiment_set_trials(ex.h, 60) == CACHESIM_OK);
  REQUIRE(cachesim_experiment_set_seed(ex.h, 911) == CACHESIM_OK);
  REQUIRE(cachesim_experiment_set_memory_exponent(ex.h, 0.5) == CACHESIM_OK);

  cachesim_point through_c;
  REQUIRE(cachesim_run_point(ex.h, 40, &through_c) == CACHESIM_OK);

  cachesim::ExperimentSpec spec({40}, cachesim::CacheRule::exponent(0.5),
                                cachesim::ParetoShape(2.0),
                                cachesim::LinkBudget(1.0, 1.0), 60, 911);
  auto native = cachesim::run_point(spec, 40);
  CHECK(through_c.n == native.n);
  CHECK(through_c.m == native.m);
  CHECK(through_c.mean_throughput == native.mean_throughput);
  CHECK(through_c.std_throughput == native.std_throughput);
  CHECK(through_c.ci95_half_width == native.ci95_half_width);
  CHECK(through_c.mean_activation == native.mean_activation);
}

TEST_CASE("sweep equals point-by-point evaluation") {
  Handle ex;
  REQUIRE(cachesim_experiment_set_shape(ex.h, 2.0) == CACHESIM_OK);
  REQUIRE(cachesim_experiment_set_trials(ex.h, 30) == CACHESIM_OK);
  REQUIRE(cachesim_experiment_set_seed(ex.h, 5) == CACHESIM_OK);
  REQUIRE(cachesim_experiment_set_memory_exponent(ex.h, 0.5) == CACHESIM_OK);

  std::vector<int> sizes{20, 30, 40};
  std::vector<cachesim_point> swept(sizes.size());
  REQUIRE(cachesim_run_sweep(ex.h, sizes.data(), sizes.size(),
                             swept.data()) == CACHESIM_OK);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    cachesim_point single;
    REQUIRE(cachesim_run_point(ex.h, sizes[i], &single) == CACHESIM_OK);
    CHECK(single.mean_throughput == swept[i].mean_throughput);
    CHECK(single.std_throughput == swept[i].std_throughput);
  }

  SUBCASE("unsorted sizes are rejected") {
    std::vector<int> bad{30, 20};
    std::vector<cachesim_point> out(2);
    CHECK(cachesim_run_sweep(ex.h, bad.data(), bad.size(), out.data()) ==
          CACHESIM_ERR_INVALID_ARGUMENT);
  }
}

TEST_CASE("regression fit through the C surface") {
  std::vector<cachesim_point> points(3);
  int idx = 0;
  for (int n : {10, 100, 1000}) {
    points[idx].n = n;
    points[idx].m = 1;
    points[idx].mean_throughput = 3.0 * std::pow(n, 0.25);
    points[idx].trials = 1;
    ++idx;
  }
  cachesim_fit fit;
  REQUIRE(cachesim_fit_points(points.data(), points.size(), 0.0, 3.0,
                              &fit) == CACHESIM_OK);
  CHECK(fit.slope == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(fit.predicted_slope == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.points_used == 3);

  cachesim_fit bad;
  CHECK(cachesim_fit_points(points.data(), 1, 0.0, 3.0, &bad) ==
        CACHESIM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("oracle comparison through the C surface") {
  Handle ex;
  REQUIRE(cachesim_experiment_set_shape(ex.h, 2.0) == CACHESIM_OK);
  REQUIRE(cachesim_experiment_set_trials(ex.h, 40) == CACHESIM_OK);
  REQUIRE(cachesim_experiment_set_seed(ex.h, 3) == CACHESIM_OK);

  std::vector<cachesim_gap_row> rows(40);
  cachesim_gap_summary summary;
  REQUIRE(cachesim_oracle_compare(ex.h, 5, 2, rows.data(), &summary) ==
          CACHESIM_OK);
  CHECK(summary.mean_ratio > 0.0);
  CHECK(summary.mean_ratio <= 1.0);
  for (const auto& row : rows) {
    CHECK(row.alg_throughput <= row.oracle_throughput);
  }

  SUBCASE("rows pointer may be omitted") {
    cachesim_gap_summary again;
    REQUIRE(cachesim_oracle_compare(ex.h, 5, 2, nullptr, &again) ==
            CACHESIM_OK);
    CHECK(again.mean_ratio == summary.mean_ratio);
  }

  SUBCASE("enumeration limits surface as limit errors") {
    cachesim_gap_summary ignored;
    CHECK(cachesim_oracle_compare(ex.h, 11, 1, nullptr, &ignored) ==
          CACHESIM_ERR_LIMIT);
    CHECK(cachesim_oracle_compare(ex.h, 10, 4, nullptr, &ignored) ==
          CACHESIM_ERR_LIMIT);
  }
}

TEST_CASE("closed-form evaluation through the C surface") {
  cachesim_theory values;
  REQUIRE(cachesim_theory_eval(100.0, 0.5, 2.0, 0.05, &values) ==
          CACHESIM_OK);
  CHECK(values.activation_scale ==
        doctest::Approx(7.9432823472428150207).epsilon(1e-13));
  CHECK(values.predicted_exponent == doctest::Approx(0.5));
  CHECK(values.lower_bound ==
        doctest::Approx(1.9858205868107037552).epsilon(1e-13));
  CHECK(values.cache_scale == doctest::Approx(10.0).epsilon(1e-13));
  CHECK(values.a_n_asymptotic ==
        doctest::Approx(11.220184543019634356).epsilon(1e-13));
  CHECK(values.falk_a ==
        doctest::Approx(11.014729578021953755).epsilon(1e-13));
  CHECK(values.falk_b ==
        doctest::Approx(2.0288109723687946415).epsilon(1e-13));

  SUBCASE("shape domain errors") {
    CHECK(cachesim_theory_eval(100.0, 0.5, 1.0, 0.05, &values) ==
          CACHESIM_ERR_DOMAIN);
    CHECK(cachesim_theory_eval(100.0, 1.5, 2.0, 0.05, &values) ==
          CACHESIM_ERR_DOMAIN);
  }

  SUBCASE("degenerate activation scale yields NaN normalizers") {
    cachesim_theory degenerate;
    REQUIRE(cachesim_theory_eval(100.0, 0.0, 2.0, 0.5, &degenerate) ==
            CACHESIM_OK);
    CHECK(std::isnan(degenerate.falk_a));
    CHECK(std::isnan(degenerate.falk_b));
    CHECK(degenerate.activation_scale < 1.0);
  }
}
