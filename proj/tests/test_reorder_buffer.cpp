#include <doctest.h>

#include "bijective/analysis.hpp"
#include "bijective/reorder_buffer.hpp"
#include "oracles.hpp"

using namespace bijective;

TEST_SUITE("reorder_buffer") {
  TEST_CASE("colour strings") {
    CHECK(parse_colours("aabc") == std::vector<Colour>{0, 0, 1, 2});
    CHECK(format_colours(std::vector<Colour>{2, 0}) == "ca");
    CHECK_THROWS_AS(parse_colours("aB"), std::invalid_argument);
  }

  TEST_CASE("hand examples") {
    for (int k = 1; k <= 4; ++k) CHECK(rbm_run(RbmPolicy::greedy_max_block, k, parse_colours("aaaa")).switches == 1);
    CHECK(rbm_run(RbmPolicy::greedy_max_block, 2, parse_colours("aabb")).switches == 2);
    const RbmResult abab = rbm_run(RbmPolicy::greedy_max_block, 2, parse_colours("abab"));
    CHECK(abab.switches == 2);
    // both a's are served under one switch, then both b's
    std::vector<std::size_t> order;
    for (const RbmEvent& e : abab.trace) order.push_back(e.item);
    CHECK(order == std::vector<std::size_t>{0, 2, 1, 3});
    CHECK(abab.trace[0].switched);
    CHECK_FALSE(abab.trace[1].switched);
    CHECK(abab.trace[2].switched);

    CHECK(offline_opt_rbm(3, parse_colours("aaaa")) == 1);
    CHECK(offline_opt_rbm(2, parse_colours("abab")) == 2);
    CHECK(rbm_run(RbmPolicy::greedy_max_block, 2, std::vector<Colour>{}).switches == 0);
  }

  TEST_CASE("policy choices on a switch") {
    // buffer {a, b, b}: greedy takes b, min_block takes a, fifo takes the oldest (a)
    const auto sigma = parse_colours("abb");
    CHECK(rbm_run(RbmPolicy::greedy_max_block, 3, sigma).trace[0].colour == 1);
    CHECK(rbm_run(RbmPolicy::min_block, 3, sigma).trace[0].colour == 0);
    CHECK(rbm_run(RbmPolicy::fifo_colour, 3, parse_colours("bab")).trace[0].colour == 1);
  }

  TEST_CASE("offline optimum equals the decision brute force") {
    for (int colours = 2; colours <= 3; ++colours) {
      for (int k = 1; k <= 3; ++k) {
        for (int n = 0; n <= 6; ++n) {
          for (const auto& sigma : oracle::all_sequences(colours, n)) {
            const std::uint64_t opt = offline_opt_rbm(k, sigma);
            REQUIRE(opt == static_cast<std::uint64_t>(oracle::rbm_opt(k, sigma)));
            for (RbmPolicy policy : {RbmPolicy::greedy_max_block, RbmPolicy::min_block, RbmPolicy::fifo_colour}) {
              CHECK(opt <= rbm_run(policy, k, sigma).switches);
            }
          }
        }
      }
    }
  }

  TEST_CASE("every item is served exactly once") {
    for (const auto& sigma : oracle::all_sequences(3, 5)) {
      for (RbmPolicy policy : {RbmPolicy::greedy_max_block, RbmPolicy::min_block, RbmPolicy::fifo_colour}) {
        const RbmResult r = rbm_run(policy, 2, sigma);
        std::vector<std::size_t> items;
        std::uint64_t switches = 0;
        for (const RbmEvent& e : r.trace) {
          items.push_back(e.item);
          CHECK(sigma[e.item] == e.colour);
          switches += e.switched ? 1 : 0;
        }
        std::sort(items.begin(), items.end());
        for (std::size_t i = 0; i < items.size(); ++i) CHECK(items[i] == i);
        CHECK(items.size() == sigma.size());
        CHECK(switches == r.switches);
      }
    }
  }

  TEST_CASE("greedy's profile is pointwise below every rival") {
    for (int k = 2; k <= 3; ++k) {
      const CostProfile g = rbm_profile(RbmPolicy::greedy_max_block, 3, k, 5);
      CHECK(dominates(g, rbm_profile(RbmPolicy::min_block, 3, k, 5)));
      CHECK(dominates(g, rbm_profile(RbmPolicy::fifo_colour, 3, k, 5)));
      CHECK(dominates(rbm_opt_profile(3, k, 5), g));
    }
  }

  TEST_CASE("state budget is a refusal") {
    std::vector<Colour> sigma;
    for (int i = 0; i < 40; ++i) sigma.push_back(i % 7);
    CHECK_THROWS_AS(offline_opt_rbm(6, sigma, 10), BudgetExceeded);
  }
}
