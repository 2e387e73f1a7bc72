#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "bijective/enumeration.hpp"
#include "bijective/io.hpp"
#include "bijective/ordered_bijection.hpp"

using namespace bijective;

namespace {

MetricSpace make(const std::string& flag) { return MetricSpace::build(parse_metric_flag(flag)); }

// Points sorted by (distance to nearest server, id), computed from scratch.
std::vector<PointId> resorted(const MetricSpace& m, const Configuration& c) {
  std::vector<std::pair<Rational, PointId>> v;
  for (PointId p : m.request_points()) {
    Rational best = m.distance(p, c[0]);
    for (PointId s : c) best = std::min(best, m.distance(p, s));
    v.emplace_back(best, p);
  }
  std::sort(v.begin(), v.end());
  std::vector<PointId> out;
  for (const auto& e : v) out.push_back(e.second);
  return out;
}

}  // namespace

TEST_SUITE("ordered_bijection") {
  TEST_CASE("single-server ordering") {
    const PointOrdering o = point_ordering(make("path:5"), {2});
    CHECK(o.points == std::vector<PointId>{2, 1, 3, 0, 4});
    CHECK(o.dvals == std::vector<Ticks>{0, 1, 1, 2, 2});
    CHECK(o.rank[0] == 3);
  }

  TEST_CASE("uniform configuration on the unit line") {
    for (int k = 1; k <= 3; ++k) {
      for (int j = 1; j <= 3; ++j) {
        const int m = 2 * k * j + 1;
        const Rational delta(1, m - 1);
        const MetricSpace line = MetricSpace::build(MetricDescription::path(m, delta));
        std::vector<PointId> odd;
        for (int i = 1; i < 2 * k; i += 2) odd.push_back(i * j);
        const PointOrdering o = point_ordering(line, Configuration(std::span<const PointId>(odd)));
        for (int i = 0; i < m; ++i) {
          const int steps = i < k ? 0 : (i - k + 2 * k) / (2 * k);
          CHECK(o.dval(static_cast<std::size_t>(i)) == steps * delta);
        }
        if (j == 1) CHECK(o.dval(static_cast<std::size_t>(m - 1)) == Rational(1, 2 * k));
      }
    }
  }

  TEST_CASE("servers packed at one end") {
    const MetricSpace p = make("path:8");
    const PointOrdering o = point_ordering(p, {0, 1, 2});
    for (int i = 0; i < 8; ++i) CHECK(o.dvals[static_cast<std::size_t>(i)] == std::max(0, i - 2));
  }

  TEST_CASE("rank matching agrees with an independent re-sort") {
    const MetricSpace p = make("path:5");
    CHECK(ordered_bijection(p, {0, 4}, {0, 4}).pairs ==
          std::vector<std::pair<PointId, PointId>>{{0, 0}, {4, 4}, {1, 1}, {3, 3}, {2, 2}});
    for (const char* flag : {"path:7", "cycle:6", "spider:2x1,3x1"}) {
      const MetricSpace m = make(flag);
      const auto configs = distinct_configurations(m.size(), 2);
      for (const Configuration& c1 : configs) {
        for (const Configuration& c2 : configs) {
          const PointMap map = ordered_bijection(m, c1, c2);
          const auto r1 = resorted(m, c1);
          const auto r2 = resorted(m, c2);
          REQUIRE(map.pairs.size() == r1.size());
          for (std::size_t i = 0; i < r1.size(); ++i) {
            CHECK(map.pairs[i] == std::make_pair(r1[i], r2[i]));
            CHECK(map(r1[i]) == r2[i]);
          }
        }
      }
    }
  }

  TEST_CASE("uniform configuration is pointwise best on the line") {
    const MetricSpace line = MetricSpace::build(MetricDescription::path(9, Rational(1, 8)));
    const PointOrdering best = point_ordering(line, {1, 3, 5, 7});
    for (const Configuration& c : distinct_configurations(9, 4)) {
      const PointOrdering o = point_ordering(line, c);
      for (std::size_t i = 0; i < 9; ++i) CHECK(best.dvals[i] <= o.dvals[i]);
    }
  }

  TEST_CASE("identical algorithms map a sequence to itself") {
    const MetricSpace c6 = make("cycle:6");
    const Algorithm g(c6, 2, parse_algorithm("greedy"));
    enumerate_sequences(c6, 3, [&](std::span<const PointId> s) {
      const SequenceImage img = sequence_bijection(g, g, {0, 3}, s);
      CHECK(std::equal(img.image.begin(), img.image.end(), s.begin(), s.end()));
    });
  }

  TEST_CASE("sequence map is injective") {
    const MetricSpace c6 = make("cycle:6");
    const Algorithm g(c6, 2, parse_algorithm("greedy"));
    const Algorithm kc(c6, 2, parse_algorithm("kcenter"));
    for (int n = 1; n <= 3; ++n) {
      std::set<std::vector<PointId>> images;
      std::uint64_t count = 0;
      enumerate_sequences(c6, n, [&](std::span<const PointId> s) {
        images.insert(sequence_bijection(g, kc, {0, 3}, s).image);
        ++count;
      });
      CHECK(images.size() == count);
    }
  }

  TEST_CASE("literal reading sends every request onto a server of B") {
    const MetricSpace c6 = make("cycle:6");
    const Algorithm g(c6, 2, parse_algorithm("greedy"));
    const Algorithm kc(c6, 2, parse_algorithm("kcenter"));
    enumerate_sequences(c6, 2, [&](std::span<const PointId> s) {
      const SequenceImage img = sequence_bijection(g, kc, {0, 3}, s, ObReading::literal);
      for (std::size_t i = 0; i < s.size(); ++i) CHECK(img.b_before[i].contains(img.image[i]));
    });
  }

  TEST_CASE("sequence map follows the current orderings step by step") {
    const MetricSpace p4 = make("path:4");
    const Algorithm g(p4, 2, parse_algorithm("greedy"));
    const Algorithm opt(p4, 2, parse_algorithm("opt"));
    enumerate_sequences(p4, 2, [&](std::span<const PointId> s) {
      const SequenceImage img = sequence_bijection(g, opt, {0, 3}, s);
      for (std::size_t i = 0; i < s.size(); ++i) {
        const auto ra = resorted(p4, img.a_before[i]);
        const auto rb = resorted(p4, img.b_before[i]);
        const auto at = std::find(ra.begin(), ra.end(), s[i]) - ra.begin();
        CHECK(img.image[i] == rb[static_cast<std::size_t>(at)]);
      }
    });
  }
}
