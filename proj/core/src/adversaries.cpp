#include "bijective/adversaries.hpp"

#include <stdexcept>

namespace bijective {

MetricSpace three_point_metric(const Rational& d) { return MetricSpace::build(MetricDescription::path(3, d)); }

Configuration three_point_start() { return Configuration(std::vector<PointId>{0, 2}); }

std::vector<PointId> three_point_adversary(const ServeFn& serve, int n) {
  if (n < 2) throw std::invalid_argument("the three-point adversary needs n >= 2");
  std::vector<PointId> sigma;
  Configuration c = three_point_start();
  for (int i = 0; i < n - 2; ++i) {
    const PointId r = c.contains(0) ? 0 : 2;
    sigma.push_back(r);
    c = serve(c, r);
  }
  const Configuration before = c;
  sigma.push_back(1);
  c = serve(c, 1);
  PointId vacated = -1;
  for (PointId end : {PointId{0}, PointId{2}}) {
    if (before.contains(end) && !c.contains(end)) vacated = end;
  }
  if (vacated < 0) throw std::invalid_argument("the algorithm served the middle without vacating an endpoint");
  sigma.push_back(vacated);
  return sigma;
}

std::vector<PointId> three_point_adversary(const Algorithm& alg, int n) {
  AlgorithmState state = alg.start(three_point_start());
  const ServeFn serve = [&](const Configuration&, PointId r) {
    alg.step(state, r);
    return alg.configuration(state);
  };
  return three_point_adversary(serve, n);
}

namespace {

Configuration spread(int m, int k) {
  std::vector<PointId> pts;
  for (int i = 0; i < k; ++i) {
    pts.push_back(k == 1 ? 0 : static_cast<PointId>((static_cast<long long>(i) * (m - 1) + (k - 1) / 2) / (k - 1)));
  }
  return Configuration(pts);
}

Ticks ceil_ticks(const Rational& v) {
  const BigInt q = numerator(v) / denominator(v);
  const BigInt r = numerator(v) % denominator(v);
  return static_cast<Ticks>(r > 0 ? q + 1 : q);
}

}  // namespace

LineAdversary line_clustering_adversary(int k, const Rational& epsilon, int m, int n, TieBreak tie,
                                        std::optional<Configuration> c0) {
  if (k < 2) throw std::invalid_argument("the clustering adversary needs k >= 2");
  if (epsilon <= 0 || epsilon >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (m < k + 1) throw std::invalid_argument("the path needs more points than servers");

  LineAdversary out{MetricSpace::build(MetricDescription::path(m, Rational(1, m - 1))), {}, {}, 0, 0, {}};
  const Rational grid(1, m - 1);
  out.delta_prime = epsilon / k / (k - 1);
  if (out.delta_prime < grid) {
    throw std::invalid_argument("a grid of spacing " + to_string(grid) + " cannot realize delta' = " +
                                to_string(out.delta_prime));
  }
  const Rational x_exact = Rational(1, 2) + Rational(k - 1, 2) * out.delta_prime;
  out.x = static_cast<PointId>(ceil_ticks(x_exact / grid));
  if (out.x >= m - 1) throw std::invalid_argument("the alternation point falls on the far end");

  out.c0 = c0 ? *c0 : spread(m, k);
  if (out.c0.size() != k) throw std::invalid_argument("the start configuration must hold k servers");
  out.metric.validate(out.c0);

  const Rational gap_limit = out.delta_prime / grid;  // δ' in ticks
  Configuration c = out.c0;
  auto request = [&](PointId r) {
    out.sequence.push_back(r);
    c = greedy_step(out.metric, c, r, tie).next;
  };

  request(0);
  for (int i = 1; i + 1 < k; ++i) {
    while (Rational(c[i] - c[i - 1]) >= gap_limit) {
      const PointId lo = c[i - 1];
      const PointId hi = c[i];
      const PointId mid = (lo + hi) / 2;
      PointId pick = -1;
      for (PointId cand : {mid, static_cast<PointId>(mid + 1)}) {
        if (cand <= lo || cand >= hi) continue;
        if (greedy_server(out.metric, c, cand, tie) == i) {
          pick = cand;
          break;
        }
      }
      if (pick < 0) throw std::invalid_argument("clustering stalls: the grid is too coarse for delta'");
      request(pick);
    }
  }
  out.prefix_length = out.sequence.size();
  if (n < static_cast<int>(out.prefix_length)) {
    throw std::invalid_argument("n = " + std::to_string(n) + " is shorter than the clustering prefix of " +
                                std::to_string(out.prefix_length));
  }
  for (int i = static_cast<int>(out.prefix_length); i < n; ++i) {
    request((i - static_cast<int>(out.prefix_length)) % 2 == 0 ? out.x : m - 1);
  }
  return out;
}

StarInstance star_lowerbound_instance(int k, const Rational& d, const Rational& delta) {
  if (k < 2) throw std::invalid_argument("the star instance needs k >= 2");
  if (delta <= 0 || d <= 0) throw std::invalid_argument("d and delta must be positive");
  const Rational per_ray = d / delta;
  if (denominator(per_ray) != 1) throw std::invalid_argument("d must be a multiple of delta");
  const Rational kd = k * d;
  const Rational rays = kd * kd * kd;
  if (denominator(rays) != 1 || rays < 2) throw std::invalid_argument("(kd)^3 must be an integer of at least 2");
  const Rational long_ray = 4 * k * d - d;

  const int short_points = static_cast<int>(numerator(per_ray));
  const int long_points = static_cast<int>(numerator(Rational(long_ray / delta)));
  std::vector<RaySpec> spec;
  spec.push_back({long_points, delta});
  const int short_rays = static_cast<int>(numerator(rays)) - 1;
  spec.insert(spec.end(), static_cast<std::size_t>(short_rays), RaySpec{short_points, delta});

  // the long ray is listed first, so its point at depth j·δ has id j
  auto on_long_ray = [&](const Rational& dist) { return static_cast<PointId>(numerator(Rational(dist / delta))); };
  std::vector<PointId> kc;
  std::vector<PointId> a{0};
  for (int j = 0; j < k; ++j) {
    kc.push_back(on_long_ray(d + 4 * d * j));
    if (j + 1 < k) a.push_back(on_long_ray(d + 4 * d * j));
  }
  return StarInstance{MetricSpace::build(MetricDescription::spider(std::move(spec))), Configuration(a),
                      Configuration(kc), short_rays, long_ray};
}

}  // namespace bijective
