#include <doctest.h>

#include <random>
#include <set>

#include "bijective/analysis.hpp"
#include "bijective/enumeration.hpp"
#include "bijective/io.hpp"
#include "oracles.hpp"

using namespace bijective;

namespace {

MetricSpace make(const std::string& flag) { return MetricSpace::build(parse_metric_flag(flag)); }

CostProfile ints(std::vector<Ticks> v) { return CostProfile::from_costs(1, std::move(v)); }

std::vector<Rational> as_rationals(const std::vector<Ticks>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("sequences in lexicographic order") {
    const MetricSpace p2 = make("path:2");
    std::vector<std::vector<PointId>> seen;
    enumerate_sequences(p2, 2, [&](std::span<const PointId> s) { seen.emplace_back(s.begin(), s.end()); });
    CHECK(seen == std::vector<std::vector<PointId>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

    std::uint64_t count = 0;
    enumerate_sequences(make("path:3"), 3, [&](std::span<const PointId>) { ++count; });
    CHECK(count == 27);

    std::set<std::vector<PointId>> unique;
    enumerate_sequences(make("cycle:6"), 5, [&](std::span<const PointId> s) { unique.emplace(s.begin(), s.end()); });
    CHECK(unique.size() == 7776);
    CHECK(sequence_count(6, 5) == 7776);
  }

  TEST_CASE("budget is a refusal") {
    CHECK_THROWS_AS(enumerate_sequences(make("path:9"), 12, [](std::span<const PointId>) {}, 1000), BudgetExceeded);
    const Algorithm g(make("path:9"), 2, parse_algorithm("greedy"));
    EnumerationOptions o;
    o.budget = 100;
    CHECK_THROWS_AS(cost_profile(g, {0, 8}, 3, o), BudgetExceeded);
  }

  TEST_CASE("profiles") {
    const MetricSpace p2 = make("path:2");
    const Algorithm g(p2, 2, parse_algorithm("greedy"));
    for (int n = 0; n <= 6; ++n) {
      const CostProfile p = cost_profile(g, {0, 1}, n);
      CHECK(p.size() == (1u << n));
      CHECK(p.max() == 0);
    }

    const MetricSpace unit = MetricSpace::build(MetricDescription::path(5, Rational(1, 4)));
    const Algorithm kc(unit, 2, parse_algorithm("kcenter"));
    const CostProfile p = cost_profile(kc, {1, 3}, 1);
    CHECK(p.costs() == std::vector<Rational>{0, 0, Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    CHECK(anchored_profile(unit, {1, 3}, {1, 3}, 1) == p);
  }

  TEST_CASE("profile agrees with per-sequence costs and parallel runs") {
    const MetricSpace c6 = make("cycle:6");
    for (const char* id : {"greedy", "kcenter", "wfa", "opt"}) {
      const Algorithm a(c6, 2, parse_algorithm(id));
      std::vector<Ticks> costs = sequence_costs(a, {0, 3}, 4);
      const CostProfile p = cost_profile(a, {0, 3}, 4);
      CHECK(p.expand() == CostProfile::from_costs(c6.unit(), costs).expand());
      EnumerationOptions o;
      o.workers = 3;
      CHECK(cost_profile(a, {0, 3}, 4, o) == p);
      // the profile sum is the quantity average analysis compares
      Rational total = 0;
      for (Ticks t : costs) total += c6.length(t);
      CHECK(p.sum() == total);
    }
  }

  TEST_CASE("anchored profile equals simulated k-center") {
    const MetricSpace spider = make("spider:3x1,3x1,3x1");
    AlgorithmSpec spec;
    spec.id = AlgorithmId::kcenter;
    spec.anchors = Configuration{0, 2};
    const Algorithm kc(spider, 2, spec);
    for (int n = 0; n <= 3; ++n) CHECK(anchored_profile(spider, {0, 2}, {1, 5}, n) == cost_profile(kc, {1, 5}, n));
  }

  TEST_CASE("sampling") {
    const MetricSpace c6 = make("cycle:6");
    const Algorithm g(c6, 2, parse_algorithm("greedy"));
    CHECK(sample_profile(g, {0, 3}, 3, 0, 7, true) == cost_profile(g, {0, 3}, 3));
    CHECK(sample_profile(g, {0, 3}, 3, 500, 7) == sample_profile(g, {0, 3}, 3, 500, 7));
    CHECK(sample_profile(g, {0, 3}, 3, 500, 7).size() == 500);
  }
}

TEST_SUITE("analysis_engine") {
  TEST_CASE("strict ratio examples") {
    CHECK(strict_ratio(ints({1, 2, 3}), ints({1, 2, 3})) == Ratio::of(1));
    CHECK(strict_ratio(ints({2, 4}), ints({1, 2})) == Ratio::of(2));
    CHECK(strict_ratio(ints({1, 5}), ints({2, 3})) == Ratio::of(Rational(5, 3)));
    CHECK(oracle::permutation_strict_rho({1, 5}, {2, 3}) == Ratio::of(Rational(5, 3)));
    CHECK(strict_ratio(ints({0, 1}), ints({0, 0})).infinite);
    CHECK_THROWS_AS(bijective_ratio(ints({1}), ints({1, 2})), std::invalid_argument);
  }

  TEST_CASE("dominance examples") {
    CHECK(stochastic_dominance(ints({1, 2}), ints({2, 2})) == Dominance::a_dominates);
    CHECK(stochastic_dominance(ints({2, 2}), ints({1, 2})) == Dominance::b_dominates);
    CHECK(stochastic_dominance(ints({1, 3}), ints({2, 2})) == Dominance::incomparable);
    CHECK(stochastic_dominance(ints({3, 1}), ints({1, 3})) == Dominance::equal);
  }

  TEST_CASE("scalar ratios") {
    const ScalarRatios same = scalar_ratios(ints({1, 2}), ints({1, 2}));
    CHECK(*same.maxmax == 1);
    CHECK(*same.average == 1);
    const ScalarRatios dbl = scalar_ratios(ints({2, 4}), ints({1, 2}));
    CHECK(*dbl.maxmax == 2);
    CHECK(*dbl.average == 2);
    CHECK_FALSE(scalar_ratios(ints({1}), ints({0})).maxmax);
  }

  TEST_CASE("sorted matching is optimal over every bijection") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> len(1, 6);
    std::uniform_int_distribution<Ticks> val(0, 5);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = len(rng);
      std::vector<Ticks> a(static_cast<std::size_t>(n));
      std::vector<Ticks> b(static_cast<std::size_t>(n));
      for (auto& x : a) x = val(rng);
      for (auto& x : b) x = val(rng);
      const CostProfile pa = ints(a);
      const CostProfile pb = ints(b);
      REQUIRE(strict_ratio(pa, pb) == oracle::permutation_strict_rho(as_rationals(a), as_rationals(b)));
      for (const Rational& rho : {Rational(1), Rational(3, 2), Rational(4)}) {
        REQUIRE(asymptotic_constant(pa, pb, rho) == oracle::permutation_constant(as_rationals(a), as_rationals(b), rho));
      }
    }
  }

  TEST_CASE("profiles in different units are aligned exactly") {
    const CostProfile a = CostProfile::from_costs(Rational(1, 2), {1, 3});
    const CostProfile b = CostProfile::from_costs(Rational(1, 3), {1, 3});
    CHECK(strict_ratio(a, b) == Ratio::of(Rational(3, 2)));
    CHECK(asymptotic_constant(a, b, 1) == Rational(1, 2));
  }

  TEST_CASE("comparison report") {
    const ComparisonReport r = bijective_ratio(ints({0, 2, 4}), ints({1, 1, 2}), std::vector<Rational>{1, 2});
    CHECK(r.strict_rho == Ratio::of(2));
    CHECK(r.witness_index == 1);
    CHECK(r.asymptotic_curve[0].c == 2);
    CHECK(r.asymptotic_curve[1].c == 0);
    CHECK(r.dominance == Dominance::incomparable);
    CHECK(*r.maxmax == 2);
    CHECK(*r.average == Rational(3, 2));
    CHECK(r.size == 3);
  }

  TEST_CASE("lower-bound certificate") {
    CHECK_FALSE(lower_bound_certificate(ints({1, 2, 3}), ints({1, 2, 3}), 2, Rational(3, 2)));
    CHECK(lower_bound_certificate(ints({2, 2, 3}), ints({1, 1, 3}), 1, 2));
    // the certificate forbids every bijection: check by brute force
    const std::vector<Ticks> a{2, 2, 3};
    const std::vector<Ticks> b{1, 1, 3};
    CHECK(oracle::permutation_strict_rho(as_rationals(a), as_rationals(b)) >= Ratio::of(2));
    const auto cert = certified_rho(ints(a), ints(b));
    REQUIRE(cert);
    CHECK(cert->rho == 2);
    CHECK(cert->c == 1);
  }

  TEST_CASE("k-center against OPT on the unit line") {
    const MetricSpace unit = MetricSpace::build(MetricDescription::path(5, Rational(1, 4)));
    const Algorithm kc(unit, 2, parse_algorithm("kcenter"));
    const Algorithm opt(unit, 2, parse_algorithm("opt"));
    const CostProfile a = cost_profile(kc, {1, 3}, 4);
    const CostProfile b = cost_profile(opt, {1, 3}, 4);
    const Rational c = asymptotic_constant(a, b, 2);
    CHECK(*scalar_ratios(a, b).maxmax <= 2 + c / b.max());
  }

  TEST_CASE("decoupling conditions") {
    const MetricSpace p5 = make("path:5");
    const Algorithm greedy(p5, 2, parse_algorithm("greedy"));
    const Algorithm opt(p5, 2, parse_algorithm("opt"));
    const Algorithm kc(p5, 2, parse_algorithm("kcenter"));
    DecouplingOptions o;
    o.d = 1;
    o.c = 100;
    DecouplingReport r = decoupling_check(greedy, opt, {1, 3}, 3, o);
    CHECK(r.violations_i == 0);
    CHECK(r.sequences == 125);
    o.d = Rational(1, 2);
    r = decoupling_check(greedy, kc, {1, 3}, 3, o);
    CHECK(r.violations_i == 0);
  }

  TEST_CASE("star potential") {
    const MetricSpace spider = make("spider:3x1,3x1");
    CHECK(potential_star(spider, {1, 5}) == 3);
    // a move toward the centre lowers the potential by its length
    CHECK(potential_star(spider, {1, 4}) - potential_star(spider, {1, 5}) == -spider.distance(4, 5));
    CHECK(potential_line(make("path:5"), {0, 2, 4}, Rational(1, 2)) == -2);
  }
}
