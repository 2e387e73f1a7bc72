#include "bijective/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace bijective {

namespace {

using Key = OnlineGame::StateKey;

CountCurve shift(CountCurve c, Ticks by) {
  for (auto& [t, v] : c) t += by;
  return c;
}

std::vector<Ticks> breakpoints(const std::vector<const CountCurve*>& curves) {
  std::vector<Ticks> ts;
  for (const CountCurve* c : curves) {
    for (const auto& [t, v] : *c) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

// Pointwise combination of step functions; drops breakpoints that do not
// change the value.
template <class Combine>
CountCurve combine(const std::vector<const CountCurve*>& curves, Combine&& op) {
  const std::vector<Ticks> ts = breakpoints(curves);
  std::vector<std::size_t> pos(curves.size(), 0);
  CountCurve out;
  for (Ticks t : ts) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const CountCurve& c = *curves[i];
      while (pos[i] < c.size() && c[pos[i]].first <= t) ++pos[i];
      const std::uint64_t v = pos[i] == 0 ? 0 : c[pos[i] - 1].second;
      acc = op(acc, v);
    }
    if (out.empty() ? acc != 0 : acc != out.back().second) out.emplace_back(t, acc);
  }
  return out;
}

class CurveSolver {
 public:
  CurveSolver(const OnlineGame& game, bool reference_only) : game_(game), reference_only_(reference_only) {}

  const CountCurve& solve(Key state) {
    if (auto it = memo_.find(state); it != memo_.end()) return it->second;
    const OnlineGame::Node node = game_.expand(state);
    CountCurve result;
    switch (node.kind) {
      case OnlineGame::NodeKind::leaf:
        result = {{0, 1}};
        break;
      case OnlineGame::NodeKind::arrival: {
        std::vector<CountCurve> parts;
        parts.reserve(node.edges.size());
        for (const auto& e : node.edges) parts.push_back(shift(solve(e.child), e.cost));
        std::vector<const CountCurve*> ptrs;
        for (const auto& p : parts) ptrs.push_back(&p);
        result = combine(ptrs, [](std::uint64_t a, std::uint64_t b) { return a + b; });
        break;
      }
      case OnlineGame::NodeKind::decision: {
        if (reference_only_) {
          const auto& e = node.edges[static_cast<std::size_t>(node.reference)];
          result = shift(solve(e.child), e.cost);
          break;
        }
        std::vector<CountCurve> parts;
        for (const auto& e : node.edges) parts.push_back(shift(solve(e.child), e.cost));
        std::vector<const CountCurve*> ptrs;
        for (const auto& p : parts) ptrs.push_back(&p);
        result = combine(ptrs, [](std::uint64_t a, std::uint64_t b) { return std::max(a, b); });
        break;
      }
    }
    return memo_.emplace(state, std::move(result)).first->second;
  }

 private:
  const OnlineGame& game_;
  bool reference_only_;
  std::unordered_map<Key, CountCurve> memo_;
};

CostProfile curve_to_profile(const CountCurve& curve, const Rational& unit) {
  std::vector<CostProfile::Run> runs;
  std::uint64_t prev = 0;
  for (const auto& [t, v] : curve) {
    runs.push_back({t, v - prev});
    prev = v;
  }
  return CostProfile(unit, std::move(runs));
}

// Profile of the algorithm that, at every decision, keeps as many sequences
// as possible within the residual budget.
void witness_walk(const OnlineGame& game, CurveSolver& best, Key state, Ticks residual, Ticks spent,
                  std::map<Ticks, std::uint64_t>& histogram) {
  const OnlineGame::Node node = game.expand(state);
  switch (node.kind) {
    case OnlineGame::NodeKind::leaf:
      ++histogram[spent];
      return;
    case OnlineGame::NodeKind::arrival:
      for (const auto& e : node.edges) witness_walk(game, best, e.child, residual - e.cost, spent + e.cost, histogram);
      return;
    case OnlineGame::NodeKind::decision: {
      std::size_t pick = static_cast<std::size_t>(node.reference);
      std::uint64_t pick_value = evaluate(best.solve(node.edges[pick].child), residual - node.edges[pick].cost);
      for (std::size_t i = 0; i < node.edges.size(); ++i) {
        const auto& e = node.edges[i];
        const std::uint64_t v = evaluate(best.solve(e.child), residual - e.cost);
        if (v > pick_value) {
          pick = i;
          pick_value = v;
        }
      }
      const auto& e = node.edges[pick];
      witness_walk(game, best, e.child, residual - e.cost, spent + e.cost, histogram);
      return;
    }
  }
}

using ProfileSet = std::map<std::vector<Ticks>, BigInt>;

class ProfileSolver {
 public:
  explicit ProfileSolver(const OnlineGame& game) : game_(game) {}

  const ProfileSet& solve(Key state) {
    if (auto it = memo_.find(state); it != memo_.end()) return it->second;
    const OnlineGame::Node node = game_.expand(state);
    ProfileSet result;
    switch (node.kind) {
      case OnlineGame::NodeKind::leaf:
        result[{0}] = 1;
        break;
      case OnlineGame::NodeKind::decision:
        for (const auto& e : node.edges) {
          for (const auto& [profile, mult] : solve(e.child)) {
            std::vector<Ticks> p = profile;
            for (Ticks& t : p) t += e.cost;
            result[std::move(p)] += mult;
          }
        }
        break;
      case OnlineGame::NodeKind::arrival: {
        result[{}] = 1;
        for (const auto& e : node.edges) {
          const ProfileSet& child = solve(e.child);
          ProfileSet next;
          for (const auto& [acc, m1] : result) {
            for (const auto& [profile, m2] : child) {
              std::vector<Ticks> merged;
              merged.reserve(acc.size() + profile.size());
              std::vector<Ticks> shifted = profile;
              for (Ticks& t : shifted) t += e.cost;
              std::merge(acc.begin(), acc.end(), shifted.begin(), shifted.end(), std::back_inserter(merged));
              next[std::move(merged)] += m1 * m2;
            }
          }
          result = std::move(next);
        }
        break;
      }
    }
    return memo_.emplace(state, std::move(result)).first->second;
  }

 private:
  const OnlineGame& game_;
  std::unordered_map<Key, ProfileSet> memo_;
};

}  // namespace

std::uint64_t evaluate(const CountCurve& curve, Ticks b) {
  auto it = std::upper_bound(curve.begin(), curve.end(), b,
                             [](Ticks v, const std::pair<Ticks, std::uint64_t>& e) { return v < e.first; });
  return it == curve.begin() ? 0 : std::prev(it)->second;
}

BigInt count_policies(const OnlineGame& game) {
  std::unordered_map<Key, BigInt> memo;
  std::function<BigInt(Key)> rec = [&](Key state) -> BigInt {
    if (auto it = memo.find(state); it != memo.end()) return it->second;
    const OnlineGame::Node node = game.expand(state);
    BigInt r;
    switch (node.kind) {
      case OnlineGame::NodeKind::leaf:
        r = 1;
        break;
      case OnlineGame::NodeKind::arrival:
        r = 1;
        for (const auto& e : node.edges) r *= rec(e.child);
        break;
      case OnlineGame::NodeKind::decision:
        r = 0;
        for (const auto& e : node.edges) r += rec(e.child);
        break;
    }
    memo.emplace(state, r);
    return r;
  };
  return rec(game.root());
}

CountCurve max_count_curve(const OnlineGame& game) {
  CurveSolver s(game, false);
  return s.solve(game.root());
}

CountCurve reference_curve(const OnlineGame& game) {
  CurveSolver s(game, true);
  return s.solve(game.root());
}

std::uint64_t max_count_at_most(const OnlineGame& game, Ticks budget) {
  return evaluate(max_count_curve(game), budget);
}

CostProfile reference_profile(const OnlineGame& game) {
  return curve_to_profile(reference_curve(game), game.unit());
}

ProfileSet policy_profiles(const OnlineGame& game, const BigInt& budget) {
  const BigInt count = count_policies(game);
  if (count > budget) {
    const auto saturate = [](const BigInt& v) {
      return v > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                           : v.convert_to<std::uint64_t>();
    };
    throw BudgetExceeded(count.str() + " online algorithms exceed the explicit budget of " + budget.str(),
                         saturate(count), saturate(budget));
  }
  ProfileSolver s(game);
  return s.solve(game.root());
}

std::string to_string(OracleMode mode) {
  switch (mode) {
    case OracleMode::automatic: return "auto";
    case OracleMode::symbolic: return "symbolic";
    case OracleMode::explicit_enumeration: return "explicit";
  }
  return "unknown";
}

OracleMode parse_oracle_mode(const std::string& text) {
  if (text == "auto" || text == "automatic") return OracleMode::automatic;
  if (text == "symbolic") return OracleMode::symbolic;
  if (text == "explicit") return OracleMode::explicit_enumeration;
  throw std::invalid_argument("unknown oracle mode '" + text + "'");
}

OracleVerdict run_oracle(const OnlineGame& game, const OracleOptions& options) {
  OracleVerdict v;
  v.policies = count_policies(game);
  const CountCurve ref = reference_curve(game);
  v.reference_profile = curve_to_profile(ref, game.unit());

  const bool go_explicit = options.mode == OracleMode::explicit_enumeration ||
                           (options.mode == OracleMode::automatic && v.policies <= options.budget);
  if (go_explicit) {
    v.mode = OracleMode::explicit_enumeration;
    const ProfileSet all = policy_profiles(game, options.budget);
    v.distinct_profiles = all.size();
    const std::vector<Ticks> mine = v.reference_profile.expand();
    v.reference_dominates = true;
    for (const auto& [profile, mult] : all) {
      for (std::size_t i = 0; i < profile.size(); ++i) {
        if (profile[i] < mine[i]) {
          const Ticks b = profile[i];
          const auto fits = static_cast<std::uint64_t>(
              std::upper_bound(profile.begin(), profile.end(), b) - profile.begin());
          if (!v.witness_budget || b < *v.witness_budget) {
            v.witness_budget = b;
            v.witness_count = fits;
            v.reference_count = v.reference_profile.count_at_most(b);
            v.witness_profile = CostProfile::from_costs(game.unit(), profile);
          }
          v.reference_dominates = false;
          break;
        }
      }
    }
    return v;
  }

  v.mode = OracleMode::symbolic;
  CurveSolver best(game, false);
  const CountCurve top = best.solve(game.root());
  v.reference_dominates = true;
  for (const auto& [t, count] : top) {
    const std::uint64_t mine = evaluate(ref, t);
    if (count > mine) {
      v.reference_dominates = false;
      v.witness_budget = t;
      v.witness_count = count;
      v.reference_count = mine;
      std::map<Ticks, std::uint64_t> histogram;
      witness_walk(game, best, game.root(), t, 0, histogram);
      v.witness_profile = CostProfile::from_histogram(game.unit(), histogram);
      break;
    }
  }
  return v;
}

KServerGame::KServerGame(const MetricSpace& metric, const Configuration& c0, int n, TieBreak tie)
    : metric_(&metric), space_(metric.size(), c0.size()), c0_(c0), n_(n), tie_(tie) {
  metric.validate(c0);
  if (n < 0 || n > 255) throw std::invalid_argument("horizon must lie in [0, 255]");
  if (metric.size() >= (1 << 23)) throw std::invalid_argument("metric too large for the game encoding");
}

OnlineGame::StateKey KServerGame::key(int remaining, std::size_t config, PointId pending) const {
  return (static_cast<StateKey>(remaining) << 56) | (static_cast<StateKey>(pending + 1) << 32) |
         static_cast<StateKey>(config);
}

OnlineGame::StateKey KServerGame::root() const { return key(n_, space_.index(c0_), -1); }

OnlineGame::Node KServerGame::expand(StateKey state) const {
  const int remaining = static_cast<int>(state >> 56);
  const PointId pending = static_cast<PointId>((state >> 32) & 0xFFFFFF) - 1;
  const std::size_t idx = static_cast<std::size_t>(state & 0xFFFFFFFFu);
  const Configuration& c = space_.at(idx);

  Node node;
  if (pending < 0) {
    if (remaining == 0) return node;
    node.kind = NodeKind::arrival;
    for (PointId p : metric_->request_points()) node.edges.push_back({key(remaining, idx, p), 0});
    return node;
  }

  node.kind = NodeKind::decision;
  if (c.contains(pending)) {
    node.edges.push_back({key(remaining - 1, idx, -1), 0});
    return node;
  }
  const Configuration greedy_next = greedy_step(*metric_, c, pending, tie_).next;
  for (int j = 0; j < c.size(); ++j) {
    if (j > 0 && c[j] == c[j - 1]) continue;
    const Configuration next = c.moved(j, pending);
    if (next == greedy_next) node.reference = static_cast<int>(node.edges.size());
    node.edges.push_back({key(remaining - 1, space_.index(next), -1), metric_->ticks(c[j], pending)});
  }
  return node;
}

}  // namespace bijective
