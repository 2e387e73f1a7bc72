#include "bijective/metric_space.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bijective {

namespace {

constexpr int kMatrixLimit = 1024;

// gcd of positive rationals: gcd of numerators over lcm of denominators
Rational rational_gcd(const std::vector<Rational>& values) {
  BigInt den_lcm = 1;
  for (const auto& v : values) {
    den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(v));
  }
  BigInt num_gcd = 0;
  for (const auto& v : values) {
    BigInt scaled = boost::multiprecision::numerator(v) * (den_lcm / boost::multiprecision::denominator(v));
    num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
  }
  return Rational(num_gcd, den_lcm);
}

Ticks to_ticks(const Rational& length, const Rational& unit) {
  Rational q = length / unit;
  if (boost::multiprecision::denominator(q) != 1) {
    throw std::logic_error("length is not a multiple of the metric unit");
  }
  return boost::multiprecision::numerator(q).convert_to<Ticks>();
}

}  // namespace

std::string to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::path: return "path";
    case MetricKind::cycle: return "cycle";
    case MetricKind::spider: return "spider";
    case MetricKind::weighted_star: return "weighted_star";
  }
  return "unknown";
}

MetricKind parse_metric_kind(const std::string& text) {
  if (text == "path" || text == "line") return MetricKind::path;
  if (text == "cycle" || text == "circle") return MetricKind::cycle;
  if (text == "spider") return MetricKind::spider;
  if (text == "weighted_star" || text == "star") return MetricKind::weighted_star;
  throw std::invalid_argument("unknown metric kind '" + text + "'");
}

MetricDescription MetricDescription::path(int m, Rational delta) {
  MetricDescription d;
  d.kind = MetricKind::path;
  d.m = m;
  d.delta = std::move(delta);
  return d;
}

MetricDescription MetricDescription::cycle(int m, Rational delta) {
  MetricDescription d = path(m, std::move(delta));
  d.kind = MetricKind::cycle;
  return d;
}

MetricDescription MetricDescription::spider(std::vector<RaySpec> rays) {
  MetricDescription d;
  d.kind = MetricKind::spider;
  d.rays = std::move(rays);
  return d;
}

MetricDescription MetricDescription::weighted_star(const std::vector<Rational>& weights) {
  MetricDescription d;
  d.kind = MetricKind::weighted_star;
  for (const auto& w : weights) d.rays.push_back(RaySpec{1, w});
  return d;
}

MetricSpace MetricSpace::build(const MetricDescription& description) {
  MetricSpace metric;
  metric.description_ = description;

  switch (description.kind) {
    case MetricKind::path:
    case MetricKind::cycle: {
      if (description.m < 2) throw std::invalid_argument("metric needs m >= 2 points");
      if (description.delta <= 0) throw std::invalid_argument("edge length delta must be positive");
      metric.unit_ = description.delta;
      const int m = description.m;
      metric.ray_.assign(static_cast<std::size_t>(m), -1);
      metric.depth_.resize(static_cast<std::size_t>(m));
      std::iota(metric.depth_.begin(), metric.depth_.end(), Ticks{0});
      metric.diameter_ = description.kind == MetricKind::path ? m - 1 : m / 2;
      break;
    }
    case MetricKind::spider:
    case MetricKind::weighted_star: {
      if (description.rays.empty()) throw std::invalid_argument("spider needs at least one ray");
      std::vector<Rational> lengths;
      int total = 1;
      for (const auto& ray : description.rays) {
        if (ray.points < 1) throw std::invalid_argument("spider rays must be nonempty");
        if (ray.edge_length <= 0) throw std::invalid_argument("ray edge lengths must be positive");
        if (description.kind == MetricKind::weighted_star && ray.points != 1) {
          throw std::invalid_argument("weighted star rays hold exactly one leaf");
        }
        lengths.push_back(ray.edge_length);
        total += ray.points;
      }
      if (total < 2) throw std::invalid_argument("metric needs m >= 2 points");
      metric.unit_ = rational_gcd(lengths);
      metric.centre_ = 0;
      metric.ray_.assign(1, -1);
      metric.depth_.assign(1, 0);
      std::vector<Ticks> ray_length;
      for (std::size_t r = 0; r < description.rays.size(); ++r) {
        const Ticks edge = to_ticks(description.rays[r].edge_length, metric.unit_);
        for (int j = 1; j <= description.rays[r].points; ++j) {
          metric.ray_.push_back(static_cast<int>(r));
          metric.depth_.push_back(edge * j);
        }
        ray_length.push_back(edge * description.rays[r].points);
      }
      std::sort(ray_length.rbegin(), ray_length.rend());
      metric.diameter_ = ray_length.size() == 1 ? ray_length[0] : ray_length[0] + ray_length[1];
      break;
    }
  }

  const int m = metric.size();
  for (PointId p = 0; p < m; ++p) {
    if (description.kind == MetricKind::weighted_star && p == metric.centre_) continue;
    metric.requests_.push_back(p);
  }
  if (m <= kMatrixLimit) {
    metric.matrix_.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (PointId x = 0; x < m; ++x) {
      for (PointId y = 0; y < m; ++y) {
        metric.matrix_[static_cast<std::size_t>(x) * static_cast<std::size_t>(m) + static_cast<std::size_t>(y)] =
            metric.compute_ticks(x, y);
      }
    }
  }
  return metric;
}

Ticks MetricSpace::compute_ticks(PointId x, PointId y) const {
  switch (description_.kind) {
    case MetricKind::path:
      return x > y ? x - y : y - x;
    case MetricKind::cycle: {
      const Ticks diff = x > y ? x - y : y - x;
      return std::min<Ticks>(diff, description_.m - diff);
    }
    case MetricKind::spider:
    case MetricKind::weighted_star: {
      const auto xi = static_cast<std::size_t>(x);
      const auto yi = static_cast<std::size_t>(y);
      if (ray_[xi] == ray_[yi]) {
        return depth_[xi] > depth_[yi] ? depth_[xi] - depth_[yi] : depth_[yi] - depth_[xi];
      }
      return depth_[xi] + depth_[yi];
    }
  }
  return 0;
}

Rational MetricSpace::distance(PointId x, PointId y) const {
  if (!valid(x) || !valid(y)) {
    throw std::out_of_range("invalid point id " + std::to_string(valid(x) ? y : x));
  }
  return length(ticks(x, y));
}

std::string MetricSpace::id() const {
  switch (description_.kind) {
    case MetricKind::path:
    case MetricKind::cycle:
      return to_string(description_.kind) + ":" + std::to_string(description_.m) + ":" +
             to_string(description_.delta);
    case MetricKind::spider:
    case MetricKind::weighted_star: {
      std::string out = to_string(description_.kind) + ":";
      for (std::size_t r = 0; r < description_.rays.size(); ++r) {
        if (r) out += ",";
        if (description_.kind == MetricKind::spider) {
          out += std::to_string(description_.rays[r].points) + "x";
        }
        out += to_string(description_.rays[r].edge_length);
      }
      return out;
    }
  }
  return "unknown";
}

void MetricSpace::validate(const Configuration& c) const {
  for (PointId p : c) {
    if (!valid(p)) throw std::invalid_argument("configuration holds invalid point " + std::to_string(p));
  }
}

Ticks dmin_ticks(const MetricSpace& metric, const Configuration& c, PointId p) {
  Ticks best = std::numeric_limits<Ticks>::max();
  for (PointId s : c) best = std::min(best, metric.ticks(s, p));
  return best;
}

Rational dmin(const MetricSpace& metric, const Configuration& c, PointId p) {
  if (c.empty()) throw std::invalid_argument("dmin of an empty configuration");
  if (!metric.valid(p)) throw std::out_of_range("invalid point id " + std::to_string(p));
  metric.validate(c);
  return metric.length(dmin_ticks(metric, c, p));
}

Ticks matching_ticks(const MetricSpace& metric, const Configuration& a, const Configuration& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matching needs equally sized configurations");
  std::array<int, kMaxServers> perm{};
  const int k = a.size();
  for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
  Ticks best = std::numeric_limits<Ticks>::max();
  do {
    Ticks total = 0;
    for (int i = 0; i < k; ++i) total += metric.ticks(a[i], b[perm[static_cast<std::size_t>(i)]]);
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.begin() + k));
  return best;
}

}  // namespace bijective
