#pragma once

// Request sequences and instances that force lower bounds.

#include <functional>
#include <optional>
#include <vector>

#include "bijective/kserver.hpp"

namespace bijective {

/// Serves one request from a configuration and returns the next one.
using ServeFn = std::function<Configuration(const Configuration&, PointId)>;

/// Three equidistant points 0, 1, 2 with spacing d; servers start on 0 and 2.
MetricSpace three_point_metric(const Rational& d = 1);
Configuration three_point_start();

/// n - 2 requests on a covered endpoint, then the middle point, then the
/// endpoint the algorithm just vacated. Throws std::invalid_argument when
/// n < 2 or the algorithm leaves both endpoints covered after the middle.
std::vector<PointId> three_point_adversary(const ServeFn& serve, int n);
std::vector<PointId> three_point_adversary(const Algorithm& alg, int n);

struct LineAdversary {
  MetricSpace metric;  // path over [0, 1] with m points
  Configuration c0;
  std::vector<PointId> sequence;
  std::size_t prefix_length = 0;  // clustering requests before the alternation
  PointId x = 0;                  // alternation point, paired with the far end
  Rational delta_prime;
};

/// Clusters greedy's servers near 0, then alternates between x and 1.
/// δ = ε / k and δ' = δ / (k - 1); x is the first grid point at or past
/// 1/2 + (k - 1) δ' / 2. The default c0 spreads the servers evenly with one
/// on each end. Throws std::invalid_argument when the grid is too coarse for
/// δ', when n is shorter than the prefix, or when clustering stalls.
LineAdversary line_clustering_adversary(int k, const Rational& epsilon, int m, int n,
                                        TieBreak tie = TieBreak::lowest_point,
                                        std::optional<Configuration> c0 = std::nullopt);

struct StarInstance {
  MetricSpace metric;
  Configuration anchors_a;   // centre, then d, 5d, ... along the long ray
  Configuration anchors_kc;  // d, 5d, 9d, ... along the long ray
  int short_rays = 0;
  Rational long_ray;
};

/// Spider with (kd)^3 - 1 rays of length d and one ray of length 4kd - d
/// (listed first), spacing δ. Throws std::invalid_argument unless d is a
/// positive multiple of δ and (kd)^3 is an integer.
StarInstance star_lowerbound_instance(int k, const Rational& d, const Rational& delta = 1);

}  // namespace bijective
