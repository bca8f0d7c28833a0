#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "channel.hpp"
#include "doctest.h"
#include "placement.hpp"
#include "rng.hpp"
#include "scheduler.hpp"

using namespace cachesim;

namespace {

CachePlacement identity_placement(int n) {
  std::vector<std::vector<int>> caches;
  for (int i = 0; i < n; ++i) caches.push_back({i});
  return CachePlacement::from_caches(n, std::move(caches));
}

// Highest throughput over every nested prefix, evaluated from scratch;
// ties go to the smaller prefix.
std::pair<int, int> best_prefix_reference(const ChannelMatrix& gamma,
                                          const TransmissionStrategy& s,
                                          const LinkBudget& budget) {
  int n = gamma.size();
  int best_t = 0;
  int best_throughput = -1;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> active(s.order.end() - i, s.order.end());
    auto outcome = evaluate_throughput(gamma, s.best_dest, active, budget);
    if (outcome.throughput > best_throughput) {
      best_throughput = outcome.throughput;
      best_t = i;
    }
  }
  return {best_throughput, best_t};
}

}  // namespace

TEST_CASE("budget validation") {
  CHECK_THROWS_AS(LinkBudget(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(LinkBudget(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(LinkBudget(1.0, -0.5), std::invalid_argument);
  LinkBudget ok(2.0, 0.0);
  CHECK(ok.beta == 2.0);
  CHECK(ok.noise == 0.0);
}

TEST_CASE("best destination selection") {
  ChannelMatrix gamma(3, {2.0, 7.0, 5.0,
                          1.0, 3.0, 9.0,
                          4.0, 4.0, 1.5});
  SUBCASE("single-file caches force the choice") {
    auto picks = best_destinations(gamma, identity_placement(3));
    CHECK(picks.best_dest == std::vector<int>{0, 1, 2});
    CHECK(picks.direct_power == std::vector<double>{2.0, 3.0, 1.5});
  }
  SUBCASE("argmax over the serveable set") {
    auto placement = CachePlacement::from_caches(3, {{0, 2}, {1, 2}, {0, 1}});
    auto picks = best_destinations(gamma, placement);
    CHECK(picks.best_dest == std::vector<int>{2, 2, 0});
    CHECK(picks.direct_power == std::vector<double>{5.0, 9.0, 4.0});
  }
  SUBCASE("gain ties pick the lowest destination index") {
    auto placement = CachePlacement::from_caches(3, {{0, 1}, {0, 1}, {0, 1}});
    auto picks = best_destinations(gamma, placement);
    CHECK(picks.best_dest[2] == 0);  // 4.0 at both destinations
    CHECK(picks.direct_power[2] == 4.0);
  }
}

TEST_CASE("SINR evaluation") {
  ChannelMatrix gamma(3, {10.0, 1.0, 1.0,
                          1.0, 1.0, 1.0,
                          2.0, 1.0, 1.0});
  LinkBudget budget(1.0, 1.0);
  std::vector<int> solo{0};
  CHECK(sinr(gamma, solo, 0, 0, budget) == doctest::Approx(10.0));

  std::vector<int> all{0, 1, 2};
  // interferers contribute 1 and 2 at destination 0
  CHECK(sinr(gamma, all, 0, 0, budget) == doctest::Approx(2.5));

  SUBCASE("ratio is invariant under common scaling") {
    auto scaled = gamma.scaled(7.0);
    LinkBudget scaled_budget(1.0, 7.0);
    CHECK(sinr(scaled, all, 0, 0, scaled_budget) ==
          doctest::Approx(sinr(gamma, all, 0, 0, budget)).epsilon(1e-12));
  }

  SUBCASE("zero denominator is rejected") {
    LinkBudget noiseless(1.0, 0.0);
    CHECK_THROWS_AS(sinr(gamma, solo, 0, 0, noiseless), std::domain_error);
  }
}

TEST_CASE("throughput evaluation") {
  LinkBudget budget(2.0, 1.0);
  ChannelMatrix gamma(2, {10.0, 1.0, 1.0, 10.0});
  std::vector<int> dest{0, 1};
  std::vector<int> active{0, 1};

  auto outcome = evaluate_throughput(gamma, dest, active, budget);
  CHECK(outcome.throughput == 2);
  CHECK(outcome.t_star == 2);
  CHECK(outcome.link_successes == 2);
  CHECK(outcome.sinr[0] == doctest::Approx(5.0));
  CHECK(outcome.sinr[1] == doctest::Approx(5.0));

  LinkBudget strict(6.0, 1.0);
  auto failed = evaluate_throughput(gamma, dest, active, strict);
  CHECK(failed.throughput == 0);
  CHECK(failed.link_successes == 0);

  SUBCASE("shared destination counts once") {
    ChannelMatrix collide(2, {10.0, 1.0, 2.0, 1.0});
    std::vector<int> same{0, 0};
    LinkBudget loose(2.0, 1.0);
    // source 0: 10/(1+2) >= 2 succeeds; source 1: 2/(1+10) fails
    auto c = evaluate_throughput(collide, same, active, loose);
    CHECK(c.throughput == 1);
    CHECK(c.link_successes == 1);
  }

  SUBCASE("two successes at one destination still count once") {
    ChannelMatrix collide(2, {10.0, 1.0, 9.0, 1.0});
    std::vector<int> same{0, 0};
    LinkBudget loose(0.5, 1.0);
    auto c = evaluate_throughput(collide, same, active, loose);
    CHECK(c.link_successes == 2);
    CHECK(c.throughput == 1);
  }

  CHECK_THROWS_AS(evaluate_throughput(gamma, dest, {}, budget),
                  std::invalid_argument);
}

TEST_CASE("full scheduling pass on a worked example") {
  ChannelMatrix gamma(3, {4.0, 1.0, 1.0,
                          1.0, 9.0, 1.0,
                          1.0, 1.0, 2.0});
  LinkBudget budget(1.0, 1.0);
  auto [strategy, outcome] = run_algorithm1(gamma, identity_placement(3),
                                            budget);
  CHECK(strategy.t_star == 2);
  CHECK(outcome.throughput == 2);
  CHECK(strategy.active == std::vector<int>{1, 0});  // strongest two pairs
  CHECK(strategy.order == std::vector<int>{2, 0, 1});
  CHECK(outcome.t_star == 2);
}

TEST_CASE("single pair outcomes") {
  LinkBudget budget(1.0, 1.0);
  auto placement = identity_placement(1);

  ChannelMatrix strong(1, {3.0});
  auto [s1, o1] = run_algorithm1(strong, placement, budget);
  CHECK(o1.throughput == 1);
  CHECK(s1.t_star == 1);

  ChannelMatrix weak(1, {1.0 - 1e-9});
  CHECK_THROWS_AS(ChannelMatrix(1, {0.0}), std::invalid_argument);
  auto [s2, o2] = run_algorithm1(weak, placement, LinkBudget(2.0, 1.0));
  CHECK(o2.throughput == 0);
  CHECK(s2.t_star == 1);  // a failing singleton still beats nothing
}

TEST_CASE("winner dominates every nested prefix") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto stream = RandomStream::derived(500, seed);
    int n = 2 + static_cast<int>(stream.next_below(10));
    int m = 1 + static_cast<int>(stream.next_below(
                    static_cast<std::uint64_t>(n)));
    auto gamma = generate_matrix(n, ParetoShape(2), stream);
    auto placement = CachePlacement::sample(CacheConfig(n, m), stream);
    LinkBudget budget(1.0, 1.0);
    auto [strategy, outcome] = run_algorithm1(gamma, placement, budget);
    auto [ref_throughput, ref_t] =
        best_prefix_reference(gamma, strategy, budget);
    CHECK(outcome.throughput == ref_throughput);
    CHECK(strategy.t_star == ref_t);
    CHECK(outcome.throughput <= strategy.t_star);
    CHECK(strategy.t_star <= n);
  }
}

TEST_CASE("scaling gains and noise together changes nothing") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto stream = RandomStream::derived(900, seed);
    int n = 3 + static_cast<int>(stream.next_below(8));
    auto gamma = generate_matrix(n, ParetoShape(2), stream);
    auto placement = CachePlacement::sample(CacheConfig(n, 2), stream);
    auto [strategy, outcome] =
        run_algorithm1(gamma, placement, LinkBudget(1.0, 1.0));
    for (double c : {0.1, 10.0, 1000.0}) {
      auto [s, o] =
          run_algorithm1(gamma.scaled(c), placement, LinkBudget(1.0, c));
      CHECK(o.throughput == outcome.throughput);
      CHECK(s.t_star == strategy.t_star);
      CHECK(s.best_dest == strategy.best_dest);
      CHECK(s.order == strategy.order);
      CHECK(s.active == strategy.active);
    }
  }
}

TEST_CASE("throughput never increases with a stricter threshold") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto stream = RandomStream::derived(321, seed);
    int n = 4 + static_cast<int>(stream.next_below(8));
    auto gamma = generate_matrix(n, ParetoShape(2), stream);
    auto placement = CachePlacement::sample(CacheConfig(n, 2), stream);
    int previous = n + 1;
    for (double beta : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      auto [s, o] = run_algorithm1(gamma, placement, LinkBudget(beta, 1.0));
      CHECK(o.throughput <= previous);
      previous = o.throughput;
    }
  }
}

TEST_CASE("full caches never weaken any direct link") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto stream = RandomStream::derived(77, seed);
    int n = 5 + static_cast<int>(stream.next_below(6));
    auto gamma = generate_matrix(n, ParetoShape(2), stream);
    auto partial = CachePlacement::sample(CacheConfig(n, 2), stream);
    auto full = CachePlacement::sample(CacheConfig(n, n), stream);
    auto small_picks = best_destinations(gamma, partial);
    auto full_picks = best_destinations(gamma, full);
    for (int i = 0; i < n; ++i) {
      CHECK(full_picks.direct_power[static_cast<std::size_t>(i)] >=
            small_picks.direct_power[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("runtime grows no worse than quadratically") {
  LinkBudget budget(1.0, 1.0);
  auto time_run = [&](int n) {
    auto stream = RandomStream::derived(4242, static_cast<std::uint64_t>(n));
    auto gamma = generate_matrix(n, ParetoShape(2), stream);
    auto placement =
        CachePlacement::sample(CacheConfig(n, resolve_cache_size(n, 0.5)),
                               stream);
    std::vector<double> times;
    for (int rep = 0; rep < 5; ++rep) {
      auto start = std::chrono::steady_clock::now();
      auto result = run_algorithm1(gamma, placement, budget);
      auto stop = std::chrono::steady_clock::now();
      (void)result;
      times.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    return times[2];
  };
  double small = time_run(100);
  double large = time_run(800);
  // 8x size means 64x work for a quadratic algorithm; allow 4x noise slack
  CHECK(large < 256.0 * std::max(small, 1e-6));
}
