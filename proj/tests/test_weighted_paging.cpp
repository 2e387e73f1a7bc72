#include <doctest.h>

#include "bijective/analysis.hpp"
#include "bijective/weighted_paging.hpp"
#include "oracles.hpp"

using namespace bijective;

namespace {

PagingInstance instance(std::vector<Rational> costs, int k, std::optional<std::vector<PageId>> cache = std::nullopt) {
  PagingInstance inst;
  inst.costs = std::move(costs);
  inst.k = k;
  inst.initial_cache = std::move(cache);
  return inst;
}

constexpr PageId p = 0;
constexpr PageId q = 1;
constexpr PageId r = 2;

}  // namespace

TEST_SUITE("weighted_paging") {
  TEST_CASE("reduction to a weighted star") {
    const PagingInstance inst = instance({2, 2, 20}, 2, std::vector<PageId>{p, q});
    const PagingStar star = paging_to_star(inst);
    CHECK(star.metric.distance(0, page_leaf(p)) == 1);
    CHECK(star.metric.distance(0, page_leaf(q)) == 1);
    CHECK(star.metric.distance(0, page_leaf(r)) == 10);
    CHECK(star.c0 == Configuration{page_leaf(p), page_leaf(q)});
    CHECK(star.metric.request_points().size() == 3);
    const PagingSimulator sim(inst);
    CHECK(sim.metric().length(sim.fault_cost(q, p)) == 2);
  }

  TEST_CASE("serve-and-return on the reduced star costs 22") {
    const PagingInstance inst = instance({2, 2, 20}, 2, std::vector<PageId>{p, q});
    const PagingStar star = paging_to_star(inst);
    AlgorithmSpec spec;
    spec.id = AlgorithmId::kcenter;
    spec.anchors = star.c0;
    const Algorithm kc(star.metric, 2, spec);
    const Trace t = simulate(kc, star.c0, std::vector<PointId>{page_leaf(r), page_leaf(p)});
    CHECK(t.total() == 22);
    // the lazy policies and the optimum pay less on the same requests
    const PagingSimulator sim(inst);
    const std::vector<PageId> sigma{r, p};
    CHECK(paging_cost(sim, PagingPolicy::greedy_min_cost, sigma) == 13);
    CHECK(offline_opt_paging(inst, sigma) == 11);
  }

  TEST_CASE("policy steps") {
    const PagingSimulator sim(instance({2, 2, 20}, 2, std::vector<PageId>{p, r}));
    PagingState s = sim.start();
    CHECK(sim.step(PagingPolicy::greedy_min_cost, s, p) == 0);
    PagingState g = sim.start();
    CHECK(sim.metric().length(sim.step(PagingPolicy::greedy_min_cost, g, q)) == 2);
    CHECK(g.cache == std::vector<PageId>{q, r});
    PagingState mx = sim.start();
    CHECK(sim.metric().length(sim.step(PagingPolicy::max_cost, mx, q)) == 11);
    CHECK(mx.cache == std::vector<PageId>{p, q});
  }

  TEST_CASE("fifo, lru and ties") {
    const PagingSimulator sim(instance({1, 1, 1}, 2));
    PagingState f = sim.start();
    sim.step(PagingPolicy::fifo, f, r);  // evicts p (tie, lowest id)
    CHECK(f.cache == std::vector<PageId>{q, r});
    sim.step(PagingPolicy::fifo, f, p);  // q loaded before r
    CHECK(f.cache == std::vector<PageId>{p, r});

    PagingState l = sim.start();
    sim.step(PagingPolicy::lru, l, p);  // hit refreshes p
    sim.step(PagingPolicy::lru, l, r);  // q least recently used
    CHECK(l.cache == std::vector<PageId>{p, r});

    PagingState h = sim.start();
    sim.step(PagingPolicy::greedy_min_cost, h, r, PageTie::highest_id);
    CHECK(h.cache == std::vector<PageId>{p, r});
  }

  TEST_CASE("default cache holds the cheapest pages") {
    CHECK(instance({5, 1, 3, 1}, 2).cache() == std::vector<PageId>{1, 3});
    CHECK(instance({1, 1, 1}, 2).cache() == std::vector<PageId>{0, 1});
    CHECK_THROWS_AS(instance({1, 1}, 2).validate(), std::invalid_argument);
    CHECK_THROWS_AS(instance({1, 0, 2}, 1).validate(), std::invalid_argument);
  }

  TEST_CASE("offline optimum equals the eviction brute force") {
    for (const auto& costs : {std::vector<Rational>{2, 2, 20}, std::vector<Rational>{1, Rational(3, 2), 4, 7}}) {
      const PagingInstance inst = instance(costs, 2);
      const PagingSimulator sim(inst);
      const int pages = inst.pages();
      for (int n = 0; n <= (pages == 3 ? 5 : 4); ++n) {
        for (const auto& sigma : oracle::all_sequences(pages, n)) {
          const Rational opt = offline_opt_paging(inst, sigma);
          REQUIRE(opt == oracle::paging_opt(costs, inst.cache(), sigma));
          for (PagingPolicy policy : {PagingPolicy::greedy_min_cost, PagingPolicy::max_cost, PagingPolicy::fifo,
                                      PagingPolicy::lru}) {
            CHECK(opt <= paging_cost(sim, policy, sigma));
          }
        }
      }
    }
  }

  TEST_CASE("greedy's profile is pointwise below every rival policy") {
    for (const auto& costs : {std::vector<Rational>{1, 1, 4}, std::vector<Rational>{1, 2, 3, 5}}) {
      const PagingInstance inst = instance(costs, 2);
      const PagingSimulator sim(inst);
      for (int n = 1; n <= 4; ++n) {
        const CostProfile g = paging_profile(sim, PagingPolicy::greedy_min_cost, n);
        for (PagingPolicy rival : {PagingPolicy::max_cost, PagingPolicy::fifo, PagingPolicy::lru}) {
          CHECK(dominates(g, paging_profile(sim, rival, n)));
        }
        CHECK(dominates(paging_opt_profile(inst, n), g));
      }
    }
  }

  TEST_CASE("policy names") {
    CHECK(parse_paging_policy("greedy") == PagingPolicy::greedy_min_cost);
    CHECK(to_string(PagingPolicy::lru) == "lru");
    CHECK_THROWS_AS(parse_paging_policy("random"), std::invalid_argument);
  }
}
