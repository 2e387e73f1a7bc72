#include "bijective/kserver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bijective {

namespace {

constexpr Ticks kInf = std::numeric_limits<Ticks>::max() / 4;

std::vector<Ticks> sorted_dvals(const MetricSpace& metric, const Configuration& c) {
  std::vector<Ticks> out;
  out.reserve(metric.request_points().size());
  for (PointId p : metric.request_points()) out.push_back(dmin_ticks(metric, c, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Configuration> closed_form_anchors(const MetricSpace& metric, int k) {
  const int m = metric.size();
  std::vector<PointId> pts;
  if (metric.kind() == MetricKind::path && (m - 1) % (2 * k) == 0) {
    for (int j = 0; j < k; ++j) pts.push_back((m - 1) * (2 * j + 1) / (2 * k));
  } else if (metric.kind() == MetricKind::cycle && m % (2 * k) == 0) {
    for (int j = 0; j < k; ++j) pts.push_back(m * (2 * j + 1) / (2 * k));
  } else {
    return std::nullopt;
  }
  return Configuration(pts);
}

}  // namespace

std::string to_string(TieBreak tie) {
  switch (tie) {
    case TieBreak::lowest_point: return "lowest_point";
    case TieBreak::highest_point: return "highest_point";
    case TieBreak::clockwise: return "clockwise";
  }
  return "unknown";
}

TieBreak parse_tie_break(const std::string& text) {
  if (text == "lowest_point" || text == "lowest") return TieBreak::lowest_point;
  if (text == "highest_point" || text == "highest") return TieBreak::highest_point;
  if (text == "clockwise") return TieBreak::clockwise;
  throw std::invalid_argument("unknown tie rule '" + text + "'");
}

int greedy_server(const MetricSpace& metric, const Configuration& c, PointId r, TieBreak tie) {
  const int covered = c.index_of(r);
  if (covered >= 0) return covered;
  Ticks best = kInf;
  for (PointId s : c) best = std::min(best, metric.ticks(s, r));

  if (tie == TieBreak::clockwise) {
    PointId target = -1;
    if (metric.kind() == MetricKind::cycle) {
      const Ticks m = metric.size();
      target = static_cast<PointId>(((r - best) % m + m) % m);
    } else if (metric.kind() == MetricKind::path) {
      target = static_cast<PointId>(r - best);
    }
    if (target >= 0) {
      const int i = c.index_of(target);
      if (i >= 0) return i;
    }
  }

  int chosen = -1;
  for (int i = 0; i < c.size(); ++i) {
    if (metric.ticks(c[i], r) != best) continue;
    if (chosen < 0 || (tie == TieBreak::highest_point && c[i] > c[chosen])) chosen = i;
  }
  return chosen;
}

StepResult greedy_step(const MetricSpace& metric, const Configuration& c, PointId r, TieBreak tie) {
  if (c.empty()) throw std::invalid_argument("greedy step on an empty configuration");
  const int s = greedy_server(metric, c, r, tie);
  const Ticks cost = metric.ticks(c[s], r);
  return StepResult{cost == 0 ? c : c.moved(s, r), cost, s};
}

Ticks covering_radius(const MetricSpace& metric, const Configuration& c) {
  Ticks radius = 0;
  for (PointId p : metric.request_points()) radius = std::max(radius, dmin_ticks(metric, c, p));
  return radius;
}

Configuration kcenter_anchors(const MetricSpace& metric, int k, std::uint64_t budget) {
  const int m = metric.size();
  if (k < 1) throw std::invalid_argument("k-center needs at least one server");
  if (k > m) throw std::invalid_argument("k-center needs k <= m");
  if (k > kMaxServers) throw std::invalid_argument("too many servers");
  if (auto uniform = closed_form_anchors(metric, k)) return *uniform;

  UInt128 sets = 1;
  for (int i = 0; i < k; ++i) sets = sets * static_cast<unsigned>(m - i) / static_cast<unsigned>(i + 1);
  if (sets > budget) throw std::invalid_argument("k-center search exceeds the budget");

  std::vector<PointId> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  Configuration best;
  std::vector<Ticks> best_dvals;
  bool have = false;
  while (true) {
    Configuration c(cur);
    std::vector<Ticks> dv = sorted_dvals(metric, c);
    // radius is the last entry, so comparing (radius, dvals) first
    if (!have || dv.back() < best_dvals.back() || (dv.back() == best_dvals.back() && dv < best_dvals)) {
      best = c;
      best_dvals = std::move(dv);
      have = true;
    }
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return best;
}

Ticks kcenter_step(const MetricSpace& metric, const Configuration& anchors, PointId r) {
  return 2 * dmin_ticks(metric, anchors, r);
}

OptResult offline_opt(const MetricSpace& metric, const Configuration& c0, std::span<const PointId> sigma) {
  metric.validate(c0);
  OptResult result;
  result.trace.unit = metric.unit();
  if (sigma.empty()) return result;

  const auto space = std::make_shared<const ConfigSpace>(metric.size(), c0.size());
  const std::size_t size = space->size();
  const std::size_t n = sigma.size();

  struct Parent {
    std::uint32_t prev = 0;
    PointId from = -1;
  };
  std::vector<Ticks> cur(size, kInf);
  std::vector<Ticks> next(size);
  std::vector<std::vector<Parent>> parents(n, std::vector<Parent>(size));
  cur[space->index(c0)] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const PointId r = sigma[i];
    if (!metric.valid(r)) throw std::out_of_range("invalid request " + std::to_string(r));
    std::fill(next.begin(), next.end(), kInf);
    auto& par = parents[i];
    for (std::size_t x = 0; x < size; ++x) {
      if (cur[x] >= kInf) continue;
      const Configuration& c = space->at(x);
      if (c.contains(r)) {
        if (cur[x] < next[x]) {
          next[x] = cur[x];
          par[x] = Parent{static_cast<std::uint32_t>(x), r};
        }
        continue;
      }
      for (int j = 0; j < c.size(); ++j) {
        if (j > 0 && c[j] == c[j - 1]) continue;
        const std::size_t y = space->index(c.moved(j, r));
        const Ticks v = cur[x] + metric.ticks(c[j], r);
        if (v < next[y] || (v == next[y] && space->at(x) < space->at(par[y].prev))) {
          next[y] = v;
          par[y] = Parent{static_cast<std::uint32_t>(x), c[j]};
        }
      }
    }
    std::swap(cur, next);
  }

  std::size_t end = 0;
  for (std::size_t x = 1; x < size; ++x) {
    if (cur[x] < cur[end] || (cur[x] == cur[end] && space->at(x) < space->at(end))) end = x;
  }
  result.cost = cur[end];

  std::vector<TraceStep> steps(n);
  std::size_t x = end;
  for (std::size_t i = n; i-- > 0;) {
    const Parent p = parents[i][x];
    const Configuration& after = space->at(x);
    const Configuration& before = space->at(p.prev);
    const bool moved = !(after == before);
    steps[i] = TraceStep{sigma[i], moved ? p.from : sigma[i], moved ? metric.ticks(p.from, sigma[i]) : 0, after};
    x = p.prev;
  }
  result.trace.steps = std::move(steps);
  result.trace.total_ticks = result.cost;
  return result;
}

WorkFunction::WorkFunction(std::shared_ptr<const ConfigSpace> space, const MetricSpace& metric,
                           const Configuration& c0)
    : space_(std::move(space)), metric_(&metric), values_(space_->size()) {
  for (std::size_t x = 0; x < values_.size(); ++x) values_[x] = matching_ticks(metric, c0, space_->at(x));
}

void WorkFunction::update(PointId r) { update_table(*space_, *metric_, values_, r); }

void WorkFunction::update_table(const ConfigSpace& space, const MetricSpace& metric, std::vector<Ticks>& w,
                                PointId r) {
  std::vector<Ticks> next(w.size(), kInf);
  for (std::size_t x = 0; x < w.size(); ++x) {
    const Configuration& c = space.at(x);
    for (int j = 0; j < c.size(); ++j) {
      if (j > 0 && c[j] == c[j - 1]) continue;
      const Ticks v = w[space.index(c.moved(j, r))] + metric.ticks(r, c[j]);
      next[x] = std::min(next[x], v);
    }
  }
  w = std::move(next);
}

StepResult wfa_step(const MetricSpace& metric, const ConfigSpace& space, const std::vector<Ticks>& w,
                    const Configuration& c, PointId r) {
  const int covered = c.index_of(r);
  if (covered >= 0) return StepResult{c, 0, covered};
  StepResult best;
  Ticks best_value = kInf;
  for (int j = 0; j < c.size(); ++j) {
    const Configuration y = c.moved(j, r);
    const Ticks d = metric.ticks(c[j], r);
    const Ticks v = w[space.index(y)] + d;
    if (v < best_value || (v == best_value && y < best.next)) {
      best = StepResult{y, d, j};
      best_value = v;
    }
  }
  return best;
}

GadgetThresholds gadget_thresholds(const MetricSpace& metric, const Configuration& c, const Rational& t) {
  if (c.size() != 2 || metric.kind() != MetricKind::path) {
    throw std::invalid_argument("the gadget needs two servers on a path");
  }
  GadgetThresholds g;
  g.x1 = metric.length(c[0]);
  g.x2 = metric.length(c[1]);
  g.x3 = Rational(5, 8) * g.x2 + Rational(3, 8) * g.x1;
  g.x4 = 10 * g.x2;
  g.unfavourable = g.x1 <= t / 3 && 2 * t / 3 <= g.x2 && g.x2 <= t;
  return g;
}

std::string to_string(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::greedy: return "greedy";
    case AlgorithmId::kcenter: return "kcenter";
    case AlgorithmId::wfa: return "wfa";
    case AlgorithmId::gadget: return "gadget";
    case AlgorithmId::opt: return "opt";
  }
  return "unknown";
}

std::string AlgorithmSpec::name() const {
  switch (id) {
    case AlgorithmId::greedy: return "greedy:" + to_string(tie);
    case AlgorithmId::gadget: return "gadget:" + to_string(gadget_t);
    case AlgorithmId::kcenter:
      return anchors ? "kcenter:" + to_string(*anchors) : "kcenter";
    default: return to_string(id);
  }
}

AlgorithmSpec parse_algorithm(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  AlgorithmSpec spec;
  if (head == "greedy") {
    spec.id = AlgorithmId::greedy;
    if (!arg.empty()) spec.tie = parse_tie_break(arg);
  } else if (head == "kcenter" || head == "k-center") {
    spec.id = AlgorithmId::kcenter;
    if (!arg.empty()) spec.anchors = parse_configuration(arg);
  } else if (head == "wfa") {
    spec.id = AlgorithmId::wfa;
  } else if (head == "gadget") {
    spec.id = AlgorithmId::gadget;
    if (!arg.empty()) spec.gadget_t = parse_rational(arg);
  } else if (head == "opt" || head == "offline_opt") {
    spec.id = AlgorithmId::opt;
  } else {
    throw std::invalid_argument("unknown algorithm '" + text + "'");
  }
  return spec;
}

Algorithm::Algorithm(const MetricSpace& metric, int k, AlgorithmSpec spec)
    : metric_(&metric), k_(k), spec_(std::move(spec)) {
  if (k < 1 || k > kMaxServers) throw std::invalid_argument("unsupported server count");
  switch (spec_.id) {
    case AlgorithmId::kcenter:
      anchors_ = spec_.anchors ? *spec_.anchors : kcenter_anchors(metric, k);
      if (anchors_.size() != k) throw std::invalid_argument("k-center anchors must hold k servers");
      metric.validate(anchors_);
      break;
    case AlgorithmId::wfa:
    case AlgorithmId::opt:
      space_ = std::make_shared<const ConfigSpace>(metric.size(), k);
      break;
    case AlgorithmId::gadget: {
      if (k != 2 || metric.kind() != MetricKind::path) {
        throw std::invalid_argument("the gadget algorithm needs k = 2 on a path");
      }
      if (spec_.gadget_t <= 0) throw std::invalid_argument("gadget threshold must be positive");
      const Rational scaled = spec_.gadget_t / metric.unit();
      t_num_ = boost::multiprecision::numerator(scaled).convert_to<Ticks>();
      t_den_ = boost::multiprecision::denominator(scaled).convert_to<Ticks>();
      break;
    }
    case AlgorithmId::greedy:
      break;
  }
}

AlgorithmState Algorithm::start(const Configuration& c0) const {
  if (c0.size() != k_) {
    throw std::invalid_argument("initial configuration holds " + std::to_string(c0.size()) + " servers, expected " +
                                std::to_string(k_));
  }
  metric_->validate(c0);
  AlgorithmState s;
  s.config = c0;
  switch (spec_.id) {
    case AlgorithmId::kcenter:
      s.base = matching_ticks(*metric_, c0, anchors_);
      s.config = anchors_;
      break;
    case AlgorithmId::wfa: {
      WorkFunction w(space_, *metric_, c0);
      s.table = w.values();
      break;
    }
    case AlgorithmId::opt:
      s.table.assign(space_->size(), kInf);
      s.table[space_->index(c0)] = 0;
      s.base = 0;
      break;
    case AlgorithmId::gadget:
      s.shadow = c0;
      break;
    case AlgorithmId::greedy:
      break;
  }
  return s;
}

bool Algorithm::unfavourable(const Configuration& c) const {
  // x1 <= t/3, 2t/3 <= x2 <= t with t = t_num_/t_den_ ticks
  const Ticks x1 = c[0];
  const Ticks x2 = c[1];
  return 3 * t_den_ * x1 <= t_num_ && 2 * t_num_ <= 3 * t_den_ * x2 && t_den_ * x2 <= t_num_;
}

Ticks Algorithm::step_gadget(AlgorithmState& s, PointId r, PointId* moved_from) const {
  const MetricSpace& m = *metric_;
  if (s.phase == 0) {
    if (!unfavourable(s.config)) {
      const StepResult g = greedy_step(m, s.config, r, spec_.tie);
      if (moved_from) *moved_from = s.config[g.server];
      s.config = g.next;
      s.shadow = g.next;
      return g.cost;
    }
    s.phase = 1;
    s.x1 = s.config[0];
    s.x2 = s.config[1];
    s.shadow = s.config;
  }

  const StepResult g = greedy_step(m, s.shadow, r, spec_.tie);
  const bool in_step = s.config == s.shadow;
  Ticks cost = 0;
  PointId from = -1;
  Configuration next;
  const Ticks x1 = s.x1;
  const Ticks x2 = s.x2;

  if (s.phase == 1) {
    s.success = x1 + x2 <= 2 * Ticks{r} && 8 * Ticks{r} <= 5 * x2 + 3 * x1;
    if (s.success) {
      cost = m.ticks(static_cast<PointId>(x1), r);
      from = static_cast<PointId>(x1);
      next = Configuration{r, static_cast<PointId>(x2)};
    }
    s.phase = 2;
  } else if (s.phase == 2) {
    if (s.success && Ticks{r} >= 10 * x2) {
      cost = m.ticks(static_cast<PointId>(x2), r);
      from = static_cast<PointId>(x2);
      next = s.config.moved(s.config.index_of(static_cast<PointId>(x2)), r);
    } else {
      s.success = false;
    }
    s.phase = 3;
  } else {
    s.success = false;
    s.phase = 0;
  }

  if (next.empty()) {
    cost = matching_ticks(m, s.config, g.next);
    from = in_step ? s.shadow[g.server] : -1;
    next = g.next;
  }
  if (moved_from) *moved_from = from;
  s.config = next;
  s.shadow = g.next;
  return cost;
}

Ticks Algorithm::step(AlgorithmState& s, PointId r, PointId* moved_from) const {
  switch (spec_.id) {
    case AlgorithmId::greedy: {
      const StepResult g = greedy_step(*metric_, s.config, r, spec_.tie);
      if (moved_from) *moved_from = s.config[g.server];
      s.config = g.next;
      return g.cost;
    }
    case AlgorithmId::kcenter: {
      const Ticks cost = kcenter_step(*metric_, anchors_, r) + s.base;
      s.base = 0;
      if (moved_from) *moved_from = anchors_[greedy_server(*metric_, anchors_, r, spec_.tie)];
      return cost;
    }
    case AlgorithmId::wfa: {
      WorkFunction::update_table(*space_, *metric_, s.table, r);
      const StepResult st = wfa_step(*metric_, *space_, s.table, s.config, r);
      if (moved_from) *moved_from = s.config[st.server];
      s.config = st.next;
      return st.cost;
    }
    case AlgorithmId::gadget:
      return step_gadget(s, r, moved_from);
    case AlgorithmId::opt: {
      std::vector<Ticks> next(s.table.size(), kInf);
      Ticks best = kInf;
      for (std::size_t x = 0; x < s.table.size(); ++x) {
        const Ticks v0 = s.table[x];
        if (v0 >= kInf) continue;
        const Configuration& c = space_->at(x);
        if (c.contains(r)) {
          next[x] = std::min(next[x], v0);
          best = std::min(best, v0);
          continue;
        }
        for (int j = 0; j < c.size(); ++j) {
          if (j > 0 && c[j] == c[j - 1]) continue;
          const std::size_t y = space_->index(c.moved(j, r));
          const Ticks v = v0 + metric_->ticks(c[j], r);
          next[y] = std::min(next[y], v);
          best = std::min(best, v);
        }
      }
      s.table = std::move(next);
      const Ticks cost = best - s.base;
      s.base = best;
      if (moved_from) *moved_from = -1;
      return cost;
    }
  }
  return 0;
}

Configuration Algorithm::configuration(const AlgorithmState& s) const {
  if (spec_.id != AlgorithmId::opt) return s.config;
  std::size_t arg = 0;
  for (std::size_t x = 1; x < s.table.size(); ++x) {
    if (s.table[x] < s.table[arg] || (s.table[x] == s.table[arg] && space_->at(x) < space_->at(arg))) arg = x;
  }
  return space_->at(arg);
}

Ticks Algorithm::conditional_cost(const Configuration& c, PointId r) const {
  switch (spec_.id) {
    case AlgorithmId::greedy: return dmin_ticks(*metric_, c, r);
    case AlgorithmId::kcenter: return kcenter_step(*metric_, anchors_, r);
    default: throw std::invalid_argument("conditional cost is defined for greedy and k-center only");
  }
}

Trace simulate(const Algorithm& alg, const Configuration& c0, std::span<const PointId> sigma) {
  for (PointId r : sigma) {
    if (!alg.metric().valid(r)) throw std::out_of_range("invalid request " + std::to_string(r));
  }
  if (alg.spec().id == AlgorithmId::opt) return offline_opt(alg.metric(), c0, sigma).trace;
  Trace trace;
  trace.unit = alg.metric().unit();
  AlgorithmState s = alg.start(c0);
  for (PointId r : sigma) {
    PointId from = -1;
    const Ticks cost = alg.step(s, r, &from);
    trace.steps.push_back(TraceStep{r, from, cost, alg.configuration(s)});
    trace.total_ticks += cost;
  }
  return trace;
}

}  // namespace bijective
