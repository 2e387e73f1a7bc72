#include <doctest.h>

#include "bijective/enumeration.hpp"
#include "bijective/io.hpp"
#include "bijective/kserver.hpp"
#include "oracles.hpp"

using namespace bijective;

namespace {

MetricSpace make(const std::string& flag) { return MetricSpace::build(parse_metric_flag(flag)); }

Algorithm alg(const MetricSpace& m, int k, const std::string& id) { return Algorithm(m, k, parse_algorithm(id)); }

std::vector<PointId> to_points(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Nearest server by scanning, lowest server position on ties.
Configuration reference_greedy(const MetricSpace& m, const Configuration& c, PointId r, Ticks& cost) {
  int best = 0;
  for (int i = 1; i < c.size(); ++i) {
    if (m.ticks(c[i], r) < m.ticks(c[best], r)) best = i;
  }
  cost = m.ticks(c[best], r);
  return c.moved(best, r);
}

}  // namespace

TEST_SUITE("kserver_core") {
  TEST_CASE("greedy steps") {
    const MetricSpace p = make("path:5");
    StepResult s = greedy_step(p, {0, 4}, 3);
    CHECK(s.next == Configuration{0, 3});
    CHECK(s.cost == 1);
    s = greedy_step(p, {0, 4}, 0);
    CHECK(s.next == Configuration{0, 4});
    CHECK(s.cost == 0);
    s = greedy_step(p, {0, 4}, 2, TieBreak::lowest_point);
    CHECK(s.next == Configuration{2, 4});
    CHECK(s.cost == 2);
    s = greedy_step(p, {0, 4}, 2, TieBreak::highest_point);
    CHECK(s.next == Configuration{0, 2});
  }

  TEST_CASE("greedy matches a scan on every configuration and request") {
    const MetricSpace m = make("cycle:7");
    for (const Configuration& c : distinct_configurations(7, 3)) {
      for (PointId r = 0; r < 7; ++r) {
        Ticks cost = 0;
        const Configuration next = reference_greedy(m, c, r, cost);
        const StepResult s = greedy_step(m, c, r);
        CHECK(s.cost == cost);
        CHECK(s.next == next);
      }
    }
  }

  TEST_CASE("greedy totals") {
    const MetricSpace c6 = make("cycle:6");
    const std::vector<PointId> sigma{1, 4, 2};
    CHECK(simulate(alg(c6, 2, "greedy"), {0, 3}, sigma).total() == 3);
    CHECK(simulate(alg(c6, 2, "greedy"), {0, 3}, {}).total() == 0);
  }

  TEST_CASE("k-center anchors") {
    const MetricSpace unit = MetricSpace::build(MetricDescription::path(5, Rational(1, 4)));
    CHECK(kcenter_anchors(unit, 2) == Configuration{1, 3});
    const MetricSpace p4 = make("path:4");
    CHECK(covering_radius(p4, kcenter_anchors(p4, 4)) == 0);

    const MetricSpace spider = make("spider:3x1,3x1,3x1");
    Ticks best = std::numeric_limits<Ticks>::max();
    for (const Configuration& c : distinct_configurations(spider.size(), 2)) best = std::min(best, covering_radius(spider, c));
    CHECK(covering_radius(spider, kcenter_anchors(spider, 2)) == best);
  }

  TEST_CASE("k-center serve and return") {
    const MetricSpace unit = MetricSpace::build(MetricDescription::path(5, Rational(1, 4)));
    CHECK(unit.length(kcenter_step(unit, {1, 3}, 1)) == 0);
    CHECK(unit.length(kcenter_step(unit, {1, 3}, 4)) == Rational(1, 2));
    const MetricSpace c8 = make("cycle:8");
    CHECK(kcenter_step(c8, {1, 5}, 3) == 4);

    AlgorithmSpec spec;
    spec.id = AlgorithmId::kcenter;
    spec.anchors = Configuration{1, 5};
    const Algorithm kc(c8, 2, spec);
    const Trace t = simulate(kc, {1, 5}, std::vector<PointId>{3, 0, 7, 5});
    for (const TraceStep& s : t.steps) CHECK(s.after == Configuration{1, 5});
    CHECK(t.total() == 4 + 2 + 4 + 0);
  }

  TEST_CASE("offline optimum") {
    const MetricSpace three = make("path:3");
    CHECK(three.length(offline_opt(three, {0, 2}, std::vector<PointId>{0, 2, 1, 0}).cost) == 1);
    CHECK(offline_opt(three, {0, 2}, std::vector<PointId>{0, 2, 0, 2}).cost == 0);
    const MetricSpace p4 = make("path:4");
    CHECK(offline_opt(p4, {0, 3}, std::vector<PointId>{1, 2}).cost == 2);
    CHECK(oracle::assignment_opt(p4, {0, 3}, {1, 2}) == 2);
  }

  TEST_CASE("offline optimum equals the assignment brute force") {
    for (const char* flag : {"path:5", "cycle:6", "spider:2x1,2x1"}) {
      const MetricSpace m = make(flag);
      const Configuration c0 = distinct_configurations(m.size(), 2)[1];
      for (int n = 0; n <= 4; ++n) {
        for (const auto& seq : oracle::all_sequences(m.size(), n)) {
          const auto sigma = to_points(seq);
          const OptResult r = offline_opt(m, c0, sigma);
          REQUIRE(r.cost == oracle::assignment_opt(m, c0.to_vector(), sigma));
          // the trace is a lazy schedule attaining the optimum
          Ticks sum = 0;
          Configuration c = c0;
          for (const TraceStep& s : r.trace.steps) {
            CHECK(s.after.contains(s.request));
            CHECK(matching_ticks(m, c, s.after) == s.cost);
            sum += s.cost;
            c = s.after;
          }
          CHECK(sum == r.cost);
        }
      }
    }
  }

  TEST_CASE("work function matches brute force") {
    const MetricSpace three = make("path:3");
    auto space = std::make_shared<const ConfigSpace>(3, 2);
    WorkFunction w(space, three, {0, 2});
    w.update(1);
    for (std::size_t i = 0; i < space->size(); ++i) {
      CHECK(w(space->at(i)) == oracle::work_function(three, {0, 2}, {1}, space->at(i).to_vector()));
    }

    const MetricSpace c5 = make("cycle:5");
    auto space5 = std::make_shared<const ConfigSpace>(5, 2);
    for (const auto& seq : oracle::all_sequences(5, 3)) {
      WorkFunction wf(space5, c5, {0, 2});
      for (int r : seq) wf.update(r);
      for (std::size_t i = 0; i < space5->size(); ++i) {
        REQUIRE(wf(space5->at(i)) == oracle::work_function(c5, {0, 2}, to_points(seq), space5->at(i).to_vector()));
      }
    }
  }

  TEST_CASE("work function algorithm is (2k-1)-competitive on the 4-cycle") {
    const MetricSpace c4 = make("cycle:4");
    const Algorithm wfa = alg(c4, 2, "wfa");
    for (int n = 1; n <= 4; ++n) {
      for (const auto& seq : oracle::all_sequences(4, n)) {
        const auto sigma = to_points(seq);
        CHECK(simulate(wfa, {0, 2}, sigma).total_ticks <= 3 * offline_opt(c4, {0, 2}, sigma).cost);
      }
    }
  }

  TEST_CASE("covered request leaves every online algorithm in place") {
    const MetricSpace c6 = make("cycle:6");
    for (const char* id : {"greedy", "kcenter", "wfa"}) {
      const Algorithm a = alg(c6, 2, id);
      const Configuration c0 = kcenter_anchors(c6, 2);
      const Trace t = simulate(a, c0, std::vector<PointId>{c0[0]});
      CHECK(t.total_ticks == 0);
      CHECK(t.steps[0].after == c0);
    }
  }

  TEST_CASE("gadget thresholds and behaviour") {
    const MetricSpace line = MetricSpace::build(MetricDescription::path(201, Rational(1, 200)));
    const GadgetThresholds g = gadget_thresholds(line, {6, 14}, Rational(1, 10));
    CHECK(g.unfavourable);
    CHECK(g.x3 == Rational(55, 1000));
    CHECK(g.x4 == Rational(7, 10));
    CHECK_FALSE(gadget_thresholds(line, {40, 100}, Rational(1, 10)).unfavourable);

    // from a favourable start the gadget is greedy
    const Algorithm gadget = alg(line, 2, "gadget:1/10");
    const Algorithm greedy = alg(line, 2, "greedy");
    for (const std::vector<PointId>& sigma : {std::vector<PointId>{3, 150, 70}, std::vector<PointId>{200, 0, 99, 101}}) {
      CHECK(simulate(gadget, {40, 100}, sigma).total_ticks == simulate(greedy, {40, 100}, sigma).total_ticks);
    }
  }

  TEST_CASE("greedy is locally optimal against any configuration") {
    const MetricSpace m = make("path:6");
    const Algorithm greedy = alg(m, 2, "greedy");
    for (const char* other : {"kcenter", "wfa", "opt"}) {
      const Algorithm b = alg(m, 2, other);
      for (const auto& seq : oracle::all_sequences(6, 3)) {
        const Trace t = simulate(b, {1, 4}, to_points(seq));
        Configuration before{1, 4};
        for (const TraceStep& s : t.steps) {
          CHECK(greedy.conditional_cost(before, s.request) <= s.cost);
          before = s.after;
        }
      }
    }
  }

  TEST_CASE("algorithm ids") {
    CHECK(parse_algorithm("greedy").name() == "greedy:lowest_point");
    CHECK(parse_algorithm("greedy:clockwise").tie == TieBreak::clockwise);
    CHECK(parse_algorithm("gadget:1/5").gadget_t == Rational(1, 5));
    CHECK(parse_algorithm("opt").id == AlgorithmId::opt);
    CHECK_THROWS_AS(parse_algorithm("random"), std::invalid_argument);
  }
}
