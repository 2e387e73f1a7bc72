#include "bijective/ordered_bijection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bijective {

PointOrdering point_ordering(const MetricSpace& metric, const Configuration& c) {
  if (c.empty()) throw std::invalid_argument("ordering needs at least one server");
  metric.validate(c);
  PointOrdering o;
  o.unit = metric.unit();
  const auto requests = metric.request_points();
  std::vector<std::pair<Ticks, PointId>> keyed;
  keyed.reserve(requests.size());
  for (PointId p : requests) keyed.emplace_back(dmin_ticks(metric, c, p), p);
  std::sort(keyed.begin(), keyed.end());
  o.rank.assign(static_cast<std::size_t>(metric.size()), -1);
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    o.dvals.push_back(keyed[i].first);
    o.points.push_back(keyed[i].second);
    o.rank[static_cast<std::size_t>(keyed[i].second)] = static_cast<int>(i);
  }
  return o;
}

PointMap ordered_bijection(const PointOrdering& o1, const PointOrdering& o2, int points) {
  if (o1.points.size() != o2.points.size()) throw std::invalid_argument("orderings differ in length");
  PointMap map;
  map.image.assign(static_cast<std::size_t>(points), -1);
  for (std::size_t i = 0; i < o1.points.size(); ++i) {
    map.pairs.emplace_back(o1.points[i], o2.points[i]);
    map.image[static_cast<std::size_t>(o1.points[i])] = o2.points[i];
  }
  return map;
}

PointMap ordered_bijection(const MetricSpace& metric, const Configuration& c1, const Configuration& c2) {
  return ordered_bijection(point_ordering(metric, c1), point_ordering(metric, c2), metric.size());
}

SequenceImage sequence_bijection(const Algorithm& a, const Algorithm& b, const Configuration& c0,
                                 std::span<const PointId> sigma, ObReading reading) {
  const MetricSpace& metric = a.metric();
  SequenceImage out;
  AlgorithmState sa = a.start(c0);
  AlgorithmState sb = b.start(c0);
  for (PointId r : sigma) {
    const Configuration ca = a.configuration(sa);
    const Configuration cb = b.configuration(sb);
    out.a_before.push_back(ca);
    out.b_before.push_back(cb);
    const Ticks cost_a = a.step(sa, r);
    const Configuration& source = reading == ObReading::symmetric ? ca : a.configuration(sa);
    const PointOrdering oa = point_ordering(metric, source);
    const PointOrdering ob = point_ordering(metric, cb);
    const int rank = oa.rank[static_cast<std::size_t>(r)];
    if (rank < 0) throw std::invalid_argument("request " + std::to_string(r) + " cannot be requested");
    const PointId image = ob.points[static_cast<std::size_t>(rank)];
    out.image.push_back(image);
    out.a_costs.push_back(cost_a);
    out.b_costs.push_back(b.step(sb, image));
  }
  return out;
}

}  // namespace bijective
