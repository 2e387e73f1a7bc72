#include "bijective/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace bijective {

namespace {

struct Aligned {
  CostProfile a;
  CostProfile b;
  Rational unit;
};

Aligned align(const CostProfile& a, const CostProfile& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("profiles differ in length (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
  if (a.unit() == b.unit()) return Aligned{a, b, a.unit()};
  const Rational u = common_unit(a.unit(), b.unit());
  return Aligned{a.rescaled(u), b.rescaled(u), u};
}

// Calls fn(a_ticks, b_ticks, first_rank) for each maximal block of ranks on
// which both sorted profiles are constant.
template <class Fn>
void for_each_segment(const CostProfile& a, const CostProfile& b, Fn&& fn) {
  const auto& ra = a.runs();
  const auto& rb = b.runs();
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t left_a = ra.empty() ? 0 : ra[0].count;
  std::uint64_t left_b = rb.empty() ? 0 : rb[0].count;
  std::uint64_t rank = 0;
  while (i < ra.size() && j < rb.size()) {
    const std::uint64_t len = std::min(left_a, left_b);
    fn(ra[i].cost, rb[j].cost, rank);
    rank += len;
    left_a -= len;
    left_b -= len;
    if (left_a == 0 && ++i < ra.size()) left_a = ra[i].count;
    if (left_b == 0 && ++j < rb.size()) left_b = rb[j].count;
  }
}

Ratio pair_ratio(Ticks a, Ticks b) {
  if (b == 0) return a == 0 ? Ratio::of(1) : Ratio::inf();
  return Ratio::of(Rational(a, b));
}

}  // namespace

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::a_dominates: return "A_dominates";
    case Dominance::b_dominates: return "B_dominates";
    case Dominance::equal: return "equal";
    case Dominance::incomparable: return "incomparable";
  }
  return "unknown";
}

std::string to_string(PotentialKind p) {
  switch (p) {
    case PotentialKind::none: return "none";
    case PotentialKind::line: return "line";
    case PotentialKind::star: return "star";
  }
  return "unknown";
}

Ratio strict_ratio(const CostProfile& a, const CostProfile& b, std::uint64_t* witness) {
  const Aligned al = align(a, b);
  Ratio best = Ratio::of(0);
  std::uint64_t where = 0;
  bool first = true;
  for_each_segment(al.a, al.b, [&](Ticks x, Ticks y, std::uint64_t rank) {
    const Ratio r = pair_ratio(x, y);
    if (first || best < r) {
      best = r;
      where = rank;
      first = false;
    }
  });
  if (first) best = Ratio::of(1);
  if (witness) *witness = where;
  return best;
}

Rational asymptotic_constant(const CostProfile& a, const CostProfile& b, const Rational& rho) {
  const Aligned al = align(a, b);
  std::optional<Rational> best;
  for_each_segment(al.a, al.b, [&](Ticks x, Ticks y, std::uint64_t) {
    Rational v = Rational(x) - rho * Rational(y);
    if (!best || v > *best) best = std::move(v);
  });
  return best ? *best * al.unit : Rational(0);
}

bool dominates(const CostProfile& a, const CostProfile& b) {
  const Aligned al = align(a, b);
  bool ok = true;
  for_each_segment(al.a, al.b, [&](Ticks x, Ticks y, std::uint64_t) { ok = ok && x <= y; });
  return ok;
}

Dominance stochastic_dominance(const CostProfile& a, const CostProfile& b) {
  const Aligned al = align(a, b);
  bool a_le = true;
  bool b_le = true;
  for_each_segment(al.a, al.b, [&](Ticks x, Ticks y, std::uint64_t) {
    a_le = a_le && x <= y;
    b_le = b_le && y <= x;
  });
  if (a_le && b_le) return Dominance::equal;
  if (a_le) return Dominance::a_dominates;
  if (b_le) return Dominance::b_dominates;
  return Dominance::incomparable;
}

ScalarRatios scalar_ratios(const CostProfile& a, const CostProfile& b) {
  if (a.size() != b.size()) throw std::invalid_argument("profiles differ in length");
  ScalarRatios out;
  if (b.empty()) return out;
  if (b.max() > 0) out.maxmax = a.max() / b.max();
  if (b.sum() > 0) out.average = a.sum() / b.sum();
  return out;
}

ComparisonReport bijective_ratio(const CostProfile& a, const CostProfile& b, std::span<const Rational> rhos) {
  ComparisonReport report;
  report.strict_rho = strict_ratio(a, b, &report.witness_index);
  for (const Rational& rho : rhos) report.asymptotic_curve.push_back({rho, asymptotic_constant(a, b, rho)});
  report.dominance = stochastic_dominance(a, b);
  const ScalarRatios s = scalar_ratios(a, b);
  report.maxmax = s.maxmax;
  report.average = s.average;
  report.size = a.size();
  return report;
}

bool lower_bound_certificate(const CostProfile& a, const CostProfile& b, const Rational& c, const Rational& rho) {
  if (a.size() != b.size()) throw std::invalid_argument("profiles differ in length");
  const Rational threshold = rho * c;
  std::uint64_t below = 0;
  for (const auto& run : a.runs()) {
    if (ticks_to_length(run.cost, a.unit()) < threshold) below += run.count;
  }
  std::uint64_t at_most = 0;
  for (const auto& run : b.runs()) {
    if (ticks_to_length(run.cost, b.unit()) <= c) at_most += run.count;
  }
  return below < at_most;
}

std::optional<Certificate> certified_rho(const CostProfile& a, const CostProfile& b) {
  if (a.size() != b.size()) throw std::invalid_argument("profiles differ in length");
  std::optional<Certificate> best;
  std::uint64_t n_b = 0;
  for (const auto& run : b.runs()) {
    n_b += run.count;
    if (run.cost <= 0) continue;
    const Rational c = ticks_to_length(run.cost, b.unit());
    const Rational rho = a.at(n_b - 1) / c;
    if (rho > 0 && (!best || rho > best->rho)) best = Certificate{rho, c};
  }
  return best;
}

Rational potential_line(const MetricSpace& metric, const Configuration& c, const Rational& alpha) {
  Ticks gaps = 0;
  for (int i = 1; i < c.size(); ++i) gaps += metric.ticks(c[i - 1], c[i]);
  return -alpha * metric.length(gaps);
}

Rational potential_star(const MetricSpace& metric, const Configuration& c) {
  if (metric.centre() < 0) throw std::invalid_argument("star potential needs a centre");
  Ticks total = 0;
  for (PointId s : c) total += metric.ticks(metric.centre(), s);
  return metric.length(total);
}

DecouplingReport decoupling_check(const Algorithm& a, const Algorithm& b, const Configuration& c0, int n,
                                  const DecouplingOptions& options) {
  if (!a.online()) throw std::invalid_argument("the decoupled algorithm must be online");
  const MetricSpace& metric = a.metric();
  DecouplingReport report;
  report.c = options.c;
  if (options.potential == PotentialKind::line) {
    report.alpha = (options.c2 - options.c1) / (options.c2 + options.c1);
    report.c = 2 * options.c1 * options.c2 / (options.c1 + options.c2);
  }
  report.bound = options.potential == PotentialKind::none ? report.c : report.c * options.d;

  auto phi = [&](const Configuration& c) -> Rational {
    switch (options.potential) {
      case PotentialKind::line: return potential_line(metric, c, report.alpha);
      case PotentialKind::star: return potential_star(metric, c);
      case PotentialKind::none: return Rational(0);
    }
    return Rational(0);
  };
  auto record = [&](std::span<const PointId> sigma, int step, int condition, Rational lhs, Rational rhs) {
    if (report.witnesses.size() >= options.max_witnesses) return;
    report.witnesses.push_back(
        DecouplingViolation{{sigma.begin(), sigma.end()}, step, condition, std::move(lhs), std::move(rhs)});
  };

  enumerate_sequences(
      metric, n,
      [&](std::span<const PointId> sigma) {
        ++report.sequences;
        // B on sigma itself, for condition (i)
        std::vector<Configuration> b_conf;
        std::vector<Ticks> b_cost;
        if (b.online()) {
          AlgorithmState s = b.start(c0);
          for (PointId r : sigma) {
            b_conf.push_back(b.configuration(s));
            b_cost.push_back(b.step(s, r));
          }
        } else {
          const OptResult opt = offline_opt(metric, c0, sigma);
          Configuration prev = c0;
          for (const TraceStep& st : opt.trace.steps) {
            b_conf.push_back(prev);
            b_cost.push_back(st.cost);
            prev = st.after;
          }
        }

        const SequenceImage img = sequence_bijection(a, b, c0, sigma, options.reading);
        AlgorithmState sa = a.start(c0);
        for (std::size_t i = 0; i < sigma.size(); ++i) {
          ++report.checks;
          const int step = static_cast<int>(i) + 1;
          const Rational cond_i = metric.length(a.conditional_cost(b_conf[i], sigma[i]));
          const Rational rhs_i = options.d * metric.length(b_cost[i]);
          if (cond_i > rhs_i) {
            ++report.violations_i;
            record(sigma, step, 1, cond_i, rhs_i);
          }

          const Configuration before = a.configuration(sa);
          const Rational own = metric.length(a.step(sa, sigma[i]));
          const Configuration after = a.configuration(sa);
          const Rational cond_img = metric.length(a.conditional_cost(img.b_before[i], img.image[i]));
          Rational lhs;
          Rational rhs;
          if (options.potential == PotentialKind::none) {
            lhs = own - cond_img;
            rhs = (options.c - options.d) * metric.length(img.b_costs[i]);
          } else {
            lhs = own + phi(after) - phi(before);
            rhs = report.c * cond_img;
          }
          if (lhs > rhs) {
            ++report.violations_ii;
            record(sigma, step, 2, lhs, rhs);
          }
        }
      },
      options.budget);
  return report;
}

}  // namespace bijective
