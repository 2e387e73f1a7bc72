#pragma once

// Discrete metric spaces: uniformly spaced paths and cycles, spiders (rays of
// uniformly spaced points joined at a centre) and weighted stars (one leaf per
// ray, used for weighted paging).
//
// Point ids are dense 0..m-1. On a path or cycle they run consecutively along
// the metric. On spiders and stars the centre is 0 and each ray's points are
// numbered outward, ray after ray.

#include <span>
#include <string>
#include <vector>

#include "bijective/configuration.hpp"
#include "bijective/rational.hpp"

namespace bijective {

enum class MetricKind { path, cycle, spider, weighted_star };

std::string to_string(MetricKind kind);
MetricKind parse_metric_kind(const std::string& text);

struct RaySpec {
  int points = 0;        // points on the ray, excluding the centre
  Rational edge_length;  // length of every edge on the ray
};

struct MetricDescription {
  MetricKind kind = MetricKind::path;
  int m = 0;                   // path / cycle only
  Rational delta{1};           // path / cycle only
  std::vector<RaySpec> rays;   // spider / weighted_star

  static MetricDescription path(int m, Rational delta = 1);
  static MetricDescription cycle(int m, Rational delta = 1);
  static MetricDescription spider(std::vector<RaySpec> rays);
  /// One leaf per weight, at that distance from the centre.
  static MetricDescription weighted_star(const std::vector<Rational>& weights);
};

class MetricSpace {
 public:
  /// Validates and builds. Throws std::invalid_argument on m < 2, a
  /// nonpositive spacing or weight, or an empty ray.
  static MetricSpace build(const MetricDescription& description);

  MetricKind kind() const { return description_.kind; }
  const MetricDescription& description() const { return description_; }
  int size() const { return static_cast<int>(ray_.size()); }
  bool valid(PointId p) const { return p >= 0 && p < size(); }

  /// Length represented by one tick; every distance is a whole number of ticks.
  const Rational& unit() const { return unit_; }
  Rational length(Ticks t) const { return ticks_to_length(t, unit_); }

  /// Unchecked integer distance.
  Ticks ticks(PointId x, PointId y) const {
    if (!matrix_.empty()) return matrix_[static_cast<std::size_t>(x) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(y)];
    return compute_ticks(x, y);
  }

  /// Exact distance; throws std::out_of_range on an invalid id.
  Rational distance(PointId x, PointId y) const;

  /// Points that may be requested: every point, except the centre of a
  /// weighted star.
  std::span<const PointId> request_points() const { return requests_; }

  /// Centre id for spiders and stars, -1 otherwise.
  PointId centre() const { return centre_; }
  /// Ray index of a point (-1 for the centre and for path/cycle points).
  int ray_of(PointId p) const { return ray_[static_cast<std::size_t>(p)]; }
  /// Ticks from the centre (spider/star) or from point 0 (path/cycle).
  Ticks depth(PointId p) const { return depth_[static_cast<std::size_t>(p)]; }
  int ray_count() const { return static_cast<int>(description_.rays.size()); }

  Ticks diameter_ticks() const { return diameter_; }
  Rational diameter() const { return length(diameter_); }

  /// Short identifier, e.g. "cycle:6:1" or "spider:3x1,3x1".
  std::string id() const;

  /// Throws std::invalid_argument unless every server is a valid point.
  void validate(const Configuration& c) const;

 private:
  Ticks compute_ticks(PointId x, PointId y) const;

  MetricDescription description_;
  Rational unit_{1};
  std::vector<int> ray_;
  std::vector<Ticks> depth_;
  std::vector<PointId> requests_;
  std::vector<Ticks> matrix_;
  PointId centre_ = -1;
  Ticks diameter_ = 0;
};

/// Distance from p to the nearest server of c, in ticks.
Ticks dmin_ticks(const MetricSpace& metric, const Configuration& c, PointId p);

/// Distance from p to the nearest server of c. Throws on an empty
/// configuration or an invalid point.
Rational dmin(const MetricSpace& metric, const Configuration& c, PointId p);

/// Minimum-cost perfect matching between two equally sized configurations,
/// in ticks (exhaustive over permutations; k <= kMaxServers).
Ticks matching_ticks(const MetricSpace& metric, const Configuration& a, const Configuration& b);

}  // namespace bijective
