#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bijective/kserver.hpp"

namespace bijective {

/// Requestable points sorted by distance to the nearest server (ascending
/// point id on ties).
struct PointOrdering {
  std::vector<PointId> points;
  std::vector<Ticks> dvals;
  std::vector<int> rank;  // indexed by point id, -1 for points that cannot be requested
  Rational unit{1};

  Rational dval(std::size_t i) const { return ticks_to_length(dvals[i], unit); }
};

PointOrdering point_ordering(const MetricSpace& metric, const Configuration& c);

/// Rank-preserving matching between two orderings.
struct PointMap {
  std::vector<std::pair<PointId, PointId>> pairs;  // (rank-i point of C1, rank-i point of C2)
  std::vector<PointId> image;                      // indexed by point id, -1 where undefined

  PointId operator()(PointId p) const { return image[static_cast<std::size_t>(p)]; }
};

PointMap ordered_bijection(const MetricSpace& metric, const Configuration& c1, const Configuration& c2);
PointMap ordered_bijection(const PointOrdering& o1, const PointOrdering& o2, int points);

enum class ObReading {
  symmetric,  // both configurations taken just before request i
  literal     // A's configuration taken after it serves request i
};

struct SequenceImage {
  std::vector<PointId> image;
  std::vector<Configuration> a_before;  // A's configuration before each request of sigma
  std::vector<Configuration> b_before;  // B's configuration before each request of the image
  std::vector<Ticks> a_costs;           // A's per-request costs on sigma
  std::vector<Ticks> b_costs;           // B's per-request costs on the image
};

/// Builds the image of sigma request by request: each request is mapped
/// through the ordered bijection of A's and B's current configurations, then
/// A serves the original request and B serves its image.
SequenceImage sequence_bijection(const Algorithm& a, const Algorithm& b, const Configuration& c0,
                                 std::span<const PointId> sigma, ObReading reading = ObReading::symmetric);

}  // namespace bijective
