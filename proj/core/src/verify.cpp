#include "bijective/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bijective/adversaries.hpp"
#include "bijective/analysis.hpp"
#include "bijective/oracle.hpp"
#include "bijective/ordered_bijection.hpp"
#include "bijective/reorder_buffer.hpp"
#include "bijective/weighted_paging.hpp"

namespace bijective {

namespace {

std::string instance(const MetricSpace& metric, int k, int n, const Configuration& c0) {
  return metric.id() + " k=" + std::to_string(k) + " n=" + std::to_string(n) + " c0=" + to_string(c0);
}

std::string oracle_measured(const OracleVerdict& v) {
  std::ostringstream out;
  if (v.reference_dominates) {
    out << "dominates all " << v.policies.str() << " algorithms";
    if (v.mode == OracleMode::explicit_enumeration) out << " (" << v.distinct_profiles << " distinct profiles)";
  } else {
    out << "beaten: an algorithm fits " << v.witness_count << " sequences within " << *v.witness_budget
        << " ticks, the reference " << v.reference_count;
  }
  out << " [" << to_string(v.mode) << "]";
  return out.str();
}

OracleOptions explicit_oracle() {
  OracleOptions o;
  o.mode = OracleMode::explicit_enumeration;
  o.budget = 2'000'000;
  return o;
}

std::string ratio_text(const Ratio& r) { return to_string(r); }

struct Profiles {
  CostProfile greedy;
  CostProfile opt;
  CostProfile kcenter;
};

Profiles profiles(const MetricSpace& metric, int k, const Configuration& c0, int n, const VerifyOptions& options,
                  TieBreak tie = TieBreak::lowest_point) {
  AlgorithmSpec g;
  g.tie = tie;
  AlgorithmSpec o;
  o.id = AlgorithmId::opt;
  AlgorithmSpec kc;
  kc.id = AlgorithmId::kcenter;
  EnumerationOptions eo;
  eo.workers = options.workers;
  return Profiles{cost_profile(Algorithm(metric, k, g), c0, n, eo), cost_profile(Algorithm(metric, k, o), c0, n, eo),
                  cost_profile(Algorithm(metric, k, kc), c0, n, eo)};
}

// --- optimality suites -----------------------------------------------------

std::vector<VerifyRow> circle_optimality(const VerifyOptions&) {
  std::vector<VerifyRow> rows;
  const MetricSpace metric = MetricSpace::build(MetricDescription::cycle(4));
  for (TieBreak tie : {TieBreak::lowest_point, TieBreak::highest_point, TieBreak::clockwise}) {
    for (const Configuration& c0 : distinct_configurations(4, 2)) {
      const KServerGame game(metric, c0, 3, tie);
      const OracleVerdict v = run_oracle(game);
      rows.push_back({"greedy-optimal-circle-2server", instance(metric, 2, 3, c0) + " tie=" + to_string(tie),
                      "greedy profile <= every lazy online algorithm", oracle_measured(v), v.reference_dominates});
    }
  }
  return rows;
}

std::vector<VerifyRow> paging_optimality(const VerifyOptions&) {
  std::vector<VerifyRow> rows;
  for (PageTie tie : {PageTie::lowest_id, PageTie::highest_id}) {
    const std::string tie_name = tie == PageTie::lowest_id ? "lowest_id" : "highest_id";
    const PagingInstance small{{1, 1, 4}, 2, std::nullopt};
    const PagingGame game(small, 3, tie);
    const OracleVerdict v = run_oracle(game, explicit_oracle());
    rows.push_back({"greedy-optimal-weighted-paging", "costs (1,1,4) k=2 n=3 cache={0,1} tie=" + tie_name,
                    "greedy_min_cost profile <= every lazy online paging algorithm", oracle_measured(v),
                    v.reference_dominates});

    const PagingInstance wide{{1, 2, 4, 8}, 2, std::nullopt};
    const PagingSimulator sim(wide);
    const CostProfile greedy = paging_profile(sim, PagingPolicy::greedy_min_cost, 5, tie);
    for (PagingPolicy rival : {PagingPolicy::max_cost, PagingPolicy::fifo, PagingPolicy::lru}) {
      const CostProfile other = paging_profile(sim, rival, 5, tie);
      const Dominance d = stochastic_dominance(greedy, other);
      rows.push_back({"greedy-optimal-weighted-paging", "costs (1,2,4,8) k=2 n=5 cache={0,1} tie=" + tie_name,
                      "greedy_min_cost profile <= " + to_string(rival) + " profile", to_string(d),
                      d == Dominance::a_dominates || d == Dominance::equal});
    }
  }
  return rows;
}

std::vector<VerifyRow> buffer_optimality(const VerifyOptions&) {
  std::vector<VerifyRow> rows;
  const RbmGame game(2, 2, 4);
  const OracleVerdict v = run_oracle(game, explicit_oracle());
  rows.push_back({"greedy-optimal-reordering-buffer", "colours=2 k=2 n=4",
                  "greedy_max_block profile <= every lazy online algorithm", oracle_measured(v),
                  v.reference_dominates});
  for (int k : {2, 3}) {
    const CostProfile greedy = rbm_profile(RbmPolicy::greedy_max_block, 3, k, 6);
    for (RbmPolicy rival : {RbmPolicy::min_block, RbmPolicy::fifo_colour}) {
      const Dominance d = stochastic_dominance(greedy, rbm_profile(rival, 3, k, 6));
      rows.push_back({"greedy-optimal-reordering-buffer", "colours=3 k=" + std::to_string(k) + " n=6",
                      "greedy_max_block profile <= " + to_string(rival) + " profile", to_string(d),
                      d == Dominance::a_dominates || d == Dominance::equal});
    }
  }
  return rows;
}

// --- ratio suites ----------------------------------------------------------

struct Worst {
  Ratio value = Ratio::of(0);
  std::string where;
  void offer(const Ratio& r, std::string at) {
    if (where.empty() || value < r) {
      value = r;
      where = std::move(at);
    }
  }
};

std::vector<VerifyRow> circle_bounds(const VerifyOptions& options) {
  std::vector<VerifyRow> rows;
  for (int m : {6, 8}) {
    const MetricSpace metric = MetricSpace::build(MetricDescription::cycle(m));
    for (int k : {2, 3}) {
      for (TieBreak tie : {TieBreak::lowest_point, TieBreak::highest_point}) {
        Worst vs_opt;
        Worst vs_kc;
        for (const Configuration& c0 : distinct_configurations(m, k)) {
          for (int n = 1; n <= 5; ++n) {
            const Profiles p = profiles(metric, k, c0, n, options, tie);
            const std::string at = "c0=" + to_string(c0) + " n=" + std::to_string(n);
            vs_opt.offer(strict_ratio(p.greedy, p.opt), at);
            vs_kc.offer(strict_ratio(p.greedy, p.kcenter), at);
          }
        }
        const std::string inst =
            metric.id() + " k=" + std::to_string(k) + " n=1..5 every distinct c0 tie=" + to_string(tie);
        rows.push_back({"greedy-vs-opt-circle", inst, "strict ratio <= " + std::to_string(k),
                        "max " + ratio_text(vs_opt.value) + " at " + vs_opt.where, vs_opt.value <= Rational(k)});
        rows.push_back({"greedy-vs-kcenter-circle", inst, "strict ratio <= " + to_string(Rational(k, 2)),
                        "max " + ratio_text(vs_kc.value) + " at " + vs_kc.where, vs_kc.value <= Rational(k, 2)});
      }
    }
  }
  return rows;
}

// Largest excess of the later horizons' constants over the first horizon's.
struct Drift {
  Rational excess;
  std::string where;
  bool seen = false;
  void offer(const std::vector<Rational>& c, const std::string& at) {
    Rational e = std::max(c[1], c[2]) - c[0];
    if (!seen || e > excess) {
      excess = e;
      where = at + " c=(" + to_string(c[0]) + ", " + to_string(c[1]) + ", " + to_string(c[2]) + ")";
      seen = true;
    }
  }
};

std::vector<VerifyRow> line_bounds(const VerifyOptions& options) {
  std::vector<VerifyRow> rows;
  for (int m : {5, 6, 7}) {
    const MetricSpace metric = MetricSpace::build(MetricDescription::path(m));
    for (int k : {2, 3}) {
      for (TieBreak tie : {TieBreak::lowest_point, TieBreak::highest_point}) {
        Worst strict;
        Drift vs_opt;
        Drift vs_kc;
        const Rational rho_opt(4 * k, 3);
        const Rational rho_kc(2 * k, 3);
        for (const Configuration& c0 : distinct_configurations(m, k)) {
          std::vector<Rational> c_opt;
          std::vector<Rational> c_kc;
          for (int n = 1; n <= 5; ++n) {
            const Profiles p = profiles(metric, k, c0, n, options, tie);
            strict.offer(strict_ratio(p.greedy, p.opt), "c0=" + to_string(c0) + " n=" + std::to_string(n));
            if (n >= 3) {
              c_opt.push_back(asymptotic_constant(p.greedy, p.opt, rho_opt));
              c_kc.push_back(asymptotic_constant(p.greedy, p.kcenter, rho_kc));
            }
          }
          vs_opt.offer(c_opt, "c0=" + to_string(c0));
          vs_kc.offer(c_kc, "c0=" + to_string(c0));
        }
        const std::string inst =
            metric.id() + " k=" + std::to_string(k) + " every distinct c0 tie=" + to_string(tie);
        rows.push_back({"greedy-vs-opt-line-strict", inst + " n=1..5", "strict ratio <= " + std::to_string(2 * k),
                        "max " + ratio_text(strict.value) + " at " + strict.where, strict.value <= Rational(2 * k)});
        rows.push_back({"greedy-vs-opt-line-asymptotic", inst + " n=3,4,5",
                        "c(" + to_string(rho_opt) + ") at n=4,5 <= c at n=3",
                        "worst excess " + to_string(vs_opt.excess) + " at " + vs_opt.where, vs_opt.excess <= 0});
        rows.push_back({"greedy-vs-kcenter-line-asymptotic", inst + " n=3,4,5",
                        "c(" + to_string(rho_kc) + ") at n=4,5 <= c at n=3",
                        "worst excess " + to_string(vs_kc.excess) + " at " + vs_kc.where, vs_kc.excess <= 0});
      }
    }
  }
  return rows;
}

std::vector<VerifyRow> kcenter_bound(const VerifyOptions& options) {
  std::vector<VerifyRow> rows;
  for (MetricKind kind : {MetricKind::path, MetricKind::cycle}) {
    for (int m = 4; m <= 8; ++m) {
      const MetricSpace metric = MetricSpace::build(kind == MetricKind::path ? MetricDescription::path(m)
                                                                               : MetricDescription::cycle(m));
      const Configuration anchors = kcenter_anchors(metric, 2);
      Rational worst;
      int worst_n = 0;
      for (int n = 1; n <= 5; ++n) {
        const Profiles p = profiles(metric, 2, anchors, n, options);
        const Rational c = asymptotic_constant(p.kcenter, p.opt, 2);
        if (n == 1 || c > worst) {
          worst = c;
          worst_n = n;
        }
      }
      const int span = kind == MetricKind::path ? m - 1 : m;
      const std::string uniform = span % 4 == 0 ? " (evenly spaced)" : " (no even spacing)";
      rows.push_back({"kcenter-vs-opt-asymptotic", metric.id() + " k=2 n=1..5 c0=" + to_string(anchors) + uniform,
                      "c(2) <= diameter " + to_string(metric.diameter()),
                      "max c(2) " + to_string(worst) + " at n=" + std::to_string(worst_n),
                      worst <= metric.diameter()});
    }
  }
  return rows;
}

std::vector<VerifyRow> star_bound(const VerifyOptions& options) {
  std::vector<VerifyRow> rows;
  const MetricSpace metric =
      MetricSpace::build(MetricDescription::spider({{3, Rational(1)}, {3, Rational(1)}, {3, Rational(1)}}));
  const int k = 2;
  const Configuration c0 = kcenter_anchors(metric, k);
  const Rational bound = potential_star(metric, c0);
  for (TieBreak tie : {TieBreak::lowest_point, TieBreak::highest_point}) {
    for (int n = 1; n <= 4; ++n) {
      const Profiles p = profiles(metric, k, c0, n, options, tie);
      const Rational c = asymptotic_constant(p.greedy, p.opt, 4 * k);
      rows.push_back({"greedy-vs-opt-spider", instance(metric, k, n, c0) + " tie=" + to_string(tie),
                      "c(" + std::to_string(4 * k) + ") <= star potential of c0 = " + to_string(bound),
                      "c = " + to_string(c), c <= bound});
    }
  }
  return rows;
}

// --- lower bounds ----------------------------------------------------------

std::vector<VerifyRow> lower_bound(const VerifyOptions& options) {
  std::vector<VerifyRow> rows;
  const MetricSpace metric = three_point_metric();
  const Configuration c0 = three_point_start();
  const Ticks c_ticks = 1;  // c = d
  const Rational rho(2);
  AlgorithmSpec o;
  o.id = AlgorithmId::opt;
  const Algorithm opt(metric, 2, o);
  EnumerationOptions eo;
  eo.workers = options.workers;

  {
    const int n = 4;
    const KServerGame game(metric, c0, n);
    const CostProfile opt_profile = cost_profile(opt, c0, n, eo);
    const std::uint64_t opt_within = opt_profile.count_at_most(c_ticks);
    // costs are whole ticks, so "below 2c" is "at most 2c - 1"
    const std::uint64_t best_below = max_count_at_most(game, 2 * c_ticks - 1);
    rows.push_back({"lower-bound-2", instance(metric, 2, n, c0) + " every lazy online algorithm",
                    "|{A < 2d}| < |{OPT <= d}|",
                    "max |{A < 2d}| = " + std::to_string(best_below) + ", |{OPT <= d}| = " + std::to_string(opt_within),
                    best_below < opt_within});
  }
  {
    const int n = 3;
    const KServerGame game(metric, c0, n);
    const CostProfile opt_profile = cost_profile(opt, c0, n, eo);
    const auto all = policy_profiles(game, 2'000'000);
    BigInt checked = 0;
    BigInt failing = 0;
    for (const auto& [costs, mult] : all) {
      const CostProfile a = CostProfile::from_costs(metric.unit(), costs);
      checked += mult;
      if (!lower_bound_certificate(a, opt_profile, Rational(1), rho)) failing += mult;
    }
    rows.push_back({"lower-bound-2", instance(metric, 2, n, c0) + " explicit enumeration",
                    "certificate (c = d, rho = 2) for every algorithm",
                    checked.str() + " algorithms, " + failing.str() + " without certificate", failing == 0});
  }
  return rows;
}

std::vector<VerifyRow> greedy_nonoptimal(const VerifyOptions& options) {
  std::vector<VerifyRow> rows;
  const int m = 201;
  const MetricSpace metric = MetricSpace::build(MetricDescription::path(m, Rational(1, m - 1)));
  const Rational t(1, 10);
  const Configuration c0(std::vector<PointId>{6, 14});
  const GadgetThresholds th = gadget_thresholds(metric, c0, t);
  rows.push_back({"unfavourable-start", metric.id() + " c0=" + to_string(c0) + " t=" + to_string(t),
                  "x1 <= t/3 and 2t/3 <= x2 <= t",
                  "x1 = " + to_string(th.x1) + ", x2 = " + to_string(th.x2), th.unfavourable});

  AlgorithmSpec g;
  AlgorithmSpec gadget;
  gadget.id = AlgorithmId::gadget;
  gadget.gadget_t = t;
  EnumerationOptions eo;
  eo.workers = options.workers;
  const int n = 3;
  const CostProfile pg = cost_profile(Algorithm(metric, 2, g), c0, n, eo);
  const CostProfile pa = cost_profile(Algorithm(metric, 2, gadget), c0, n, eo);
  const Rational diff = pa.mean() - pg.mean();
  const Rational x1 = th.x1;
  const Rational x2 = th.x2;
  const Rational sign_term = -Rational(1, 2) * 2 * (x2 - x1) * x2 * (23 - 80 * x2);
  rows.push_back({"greedy-not-optimal-line", instance(metric, 2, n, c0) + " t=" + to_string(t),
                  "mean(gadget) < mean(greedy)",
                  "mean(gadget) - mean(greedy) = " + to_string(diff) + " (~" + std::to_string(to_double(diff)) +
                      "); predicted sign term " + to_string(sign_term),
                  diff < 0});
  return rows;
}

std::vector<VerifyRow> line_adversary(const VerifyOptions&) {
  std::vector<VerifyRow> rows;
  const int k = 2;
  const int m = 101;
  const int n = 60;
  const Rational eps(1, 5);
  const Rational floor_cost = Rational(1, 2) - eps / k;

  auto check = [&](std::optional<Configuration> c0, bool skip_first) {
    const LineAdversary adv = line_clustering_adversary(k, eps, m, n, TieBreak::lowest_point, c0);
    const Algorithm greedy(adv.metric, k, AlgorithmSpec{});
    AlgorithmSpec kc_spec;
    kc_spec.id = AlgorithmId::kcenter;
    const Algorithm kc(adv.metric, k, kc_spec);
    const Trace tg = simulate(greedy, adv.c0, adv.sequence);
    const Trace tk = simulate(kc, adv.c0, adv.sequence);
    Rational min_step;
    bool seen = false;
    for (std::size_t i = adv.prefix_length + (skip_first ? 1 : 0); i < tg.steps.size(); ++i) {
      const Rational c = adv.metric.length(tg.steps[i].cost);
      if (!seen || c < min_step) min_step = c;
      seen = true;
    }
    const std::string inst = adv.metric.id() + " k=2 eps=1/5 n=60 c0=" + to_string(adv.c0) +
                             " x=" + std::to_string(adv.x) + " prefix=" + std::to_string(adv.prefix_length);
    rows.push_back({"greedy-line-lower-bound", inst,
                    std::string(skip_first ? "alternating steps after the first" : "every alternating step") +
                        " costs greedy > " + to_string(floor_cost),
                    "cheapest such step " + to_string(min_step), seen && min_step > floor_cost});
    rows.push_back({"kcenter-on-adversary", inst, "k-center total <= n/k + 1 = " + to_string(Rational(n, k) + 1),
                    "total " + to_string(tk.total()), tk.total() <= Rational(n, k) + 1});
  };
  check(Configuration(std::vector<PointId>{0, m - 1}), false);
  AlgorithmSpec kc_spec;
  kc_spec.id = AlgorithmId::kcenter;
  const LineAdversary probe = line_clustering_adversary(k, eps, m, n);
  check(Algorithm(probe.metric, k, kc_spec).anchors(), true);
  return rows;
}

std::vector<VerifyRow> star_kcenter(const VerifyOptions&) {
  std::vector<VerifyRow> rows;
  const int k = 2;
  const int n = 4;
  std::vector<Rational> rhos;
  std::string trail;
  bool all = true;
  for (int d : {3, 6, 9}) {
    const StarInstance st = star_lowerbound_instance(k, d, 1);
    const CostProfile a = anchored_profile(st.metric, st.anchors_a, st.anchors_a, n);
    const CostProfile kc = anchored_profile(st.metric, st.anchors_kc, st.anchors_a, n);
    const auto cert = certified_rho(kc, a);
    const std::string inst = "spider with " + std::to_string(st.short_rays) + " rays of " + std::to_string(d) +
                             " and one of " + to_string(st.long_ray) + ", k=2 n=4 A anchors " +
                             to_string(st.anchors_a) + " k-center anchors " + to_string(st.anchors_kc);
    if (cert) {
      rows.push_back({"kcenter-unbounded-star", inst, "certificate exists",
                      "rho = " + to_string(cert->rho) + " at c = " + to_string(cert->c), true});
      if (!rhos.empty() && !(cert->rho > rhos.back())) all = false;
      rhos.push_back(cert->rho);
      trail += (trail.empty() ? "" : ", ") + to_string(cert->rho);
    } else {
      rows.push_back({"kcenter-unbounded-star", inst, "certificate exists", "none", false});
      all = false;
    }
  }
  rows.push_back({"kcenter-unbounded-star", "d = 3, 6, 9", "certified rho strictly increasing in d", trail, all});
  return rows;
}

// --- ordered bijection -----------------------------------------------------

struct FactorCheck {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  Ratio worst = Ratio::of(0);
  void offer(Ticks a, Ticks b, const Rational& factor) {
    if (a == 0) return;
    const Ratio r = b == 0 ? Ratio::inf() : Ratio::of(Rational(a, b));
    if (worst < r) worst = r;
    if (b == 0 || Rational(a) > factor * b) ++violations;
  }
  std::string text() const {
    return std::to_string(pairs) + " pairs, worst ratio " + to_string(worst) + ", " + std::to_string(violations) +
           " violations";
  }
};

std::vector<VerifyRow> ordered_bijection_suite(const VerifyOptions&) {
  std::vector<VerifyRow> rows;
  for (int k = 1; k <= 3; ++k) {
    FactorCheck bi;
    FactorCheck btw;
    std::uint64_t best_checked = 0;
    std::uint64_t best_fail = 0;
    std::string best_metrics;
    for (int m = k + 1; m <= 9; ++m) {
      const MetricSpace metric = MetricSpace::build(MetricDescription::path(m));
      const auto configs = distinct_configurations(m, k);
      std::vector<PointOrdering> ord;
      for (const Configuration& c : configs) ord.push_back(point_ordering(metric, c));
      for (std::size_t x = 0; x < configs.size(); ++x) {
        for (std::size_t y = 0; y < configs.size(); ++y) {
          ++bi.pairs;
          ++btw.pairs;
          for (std::size_t i = 0; i < ord[x].points.size(); ++i) {
            bi.offer(ord[x].dvals[i], ord[y].dvals[i], Rational(2 * k));
            const PointId p = ord[x].points[i];
            if (p > configs[x][0] && p < configs[x][k - 1]) {
              btw.offer(ord[x].dvals[i], ord[y].dvals[i], Rational(k));
            }
          }
        }
      }
      if ((m - 1) % (2 * k) == 0) {
        const Configuration uniform = kcenter_anchors(metric, k);
        const PointOrdering u = point_ordering(metric, uniform);
        best_metrics += (best_metrics.empty() ? "" : ",") + std::to_string(m);
        for (const PointOrdering& o : ord) {
          ++best_checked;
          for (std::size_t i = 0; i < o.dvals.size(); ++i) {
            if (u.dvals[i] > o.dvals[i]) {
              ++best_fail;
              break;
            }
          }
        }
      }
    }
    const std::string inst = "path m=" + std::to_string(k + 1) + "..9 k=" + std::to_string(k) + " distinct points";
    rows.push_back({"ob-any-pair-factor-2k", inst, "D_C1[i] <= " + std::to_string(2 * k) + " D_C2[i]", bi.text(),
                    bi.violations == 0});
    rows.push_back({"ob-between-servers-factor-k", inst,
                    "D_C1[i] <= " + std::to_string(k) + " D_C2[i] when P_C1[i] lies between servers", btw.text(),
                    btw.violations == 0});
    if (!best_metrics.empty()) {
      rows.push_back({"ob-uniform-best", "path m=" + best_metrics + " k=" + std::to_string(k),
                      "uniform spacing pointwise minimal",
                      std::to_string(best_checked) + " configurations, " + std::to_string(best_fail) + " below it",
                      best_fail == 0});
    }
  }

  const MetricSpace spider =
      MetricSpace::build(MetricDescription::spider({{3, Rational(1)}, {3, Rational(1)}, {3, Rational(1)}}));
  for (int k = 1; k <= 3; ++k) {
    FactorCheck f;
    const auto configs = distinct_configurations(spider.size(), k);
    std::vector<PointOrdering> ord;
    for (const Configuration& c : configs) ord.push_back(point_ordering(spider, c));
    for (std::size_t x = 0; x < configs.size(); ++x) {
      if (!configs[x].contains(spider.centre())) continue;
      for (std::size_t y = 0; y < configs.size(); ++y) {
        ++f.pairs;
        for (std::size_t i = 0; i < ord[x].dvals.size(); ++i) f.offer(ord[x].dvals[i], ord[y].dvals[i], Rational(2 * k));
      }
    }
    rows.push_back({"ob-spider-centre-factor-2k", spider.id() + " k=" + std::to_string(k) + " distinct points",
                    "D_C[i] <= " + std::to_string(2 * k) + " D_C'[i] when C holds the centre", f.text(),
                    f.violations == 0});
  }
  return rows;
}

using SuiteFn = std::vector<VerifyRow> (*)(const VerifyOptions&);

const std::vector<std::pair<SuiteInfo, SuiteFn>>& registry() {
  static const std::vector<std::pair<SuiteInfo, SuiteFn>> r = {
      {{"circle-optimality", "greedy 2-server on the 4-cycle against every lazy online algorithm"}, circle_optimality},
      {{"paging-optimality", "greedy weighted paging against every lazy online algorithm and rival policies"},
       paging_optimality},
      {{"buffer-optimality", "greedy reordering buffer against every lazy online algorithm and rival policies"},
       buffer_optimality},
      {{"circle-bounds", "greedy against OPT and k-center on cycles"}, circle_bounds},
      {{"line-bounds", "greedy against OPT and k-center on paths, strict and asymptotic"}, line_bounds},
      {{"kcenter-bound", "k-center against OPT on paths and cycles"}, kcenter_bound},
      {{"star-bound", "greedy against OPT on a spider"}, star_bound},
      {{"lower-bound", "no lazy online algorithm beats ratio 2 on three points"}, lower_bound},
      {{"greedy-nonoptimal", "a two-server line algorithm with lower mean cost than greedy"}, greedy_nonoptimal},
      {{"line-adversary", "clustering adversary against greedy on the line"}, line_adversary},
      {{"star-kcenter", "k-center against a centre-anchored algorithm on a large spider"}, star_kcenter},
      {{"ordered-bijection", "distance-to-nearest-server orderings on paths and a spider"}, ordered_bijection_suite},
  };
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& verify_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const auto& [info, fn] : registry()) v.push_back(info);
    return v;
  }();
  return infos;
}

std::vector<VerifyRow> run_suite(const std::string& name, const VerifyOptions& options) {
  for (const auto& [info, fn] : registry()) {
    if (info.name == name) return fn(options);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace bijective
