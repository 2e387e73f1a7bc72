#include "bijective/weighted_paging.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bijective {

void PagingInstance::validate() const {
  if (k < 1 || k >= pages()) throw std::invalid_argument("cache size must lie in [1, pages)");
  for (const Rational& c : costs) {
    if (c <= 0) throw std::invalid_argument("eviction costs must be positive");
  }
  if (initial_cache) {
    std::vector<PageId> c = *initial_cache;
    std::sort(c.begin(), c.end());
    if (static_cast<int>(c.size()) != k || std::adjacent_find(c.begin(), c.end()) != c.end() ||
        c.front() < 0 || c.back() >= pages()) {
      throw std::invalid_argument("initial cache must hold k distinct valid pages");
    }
  }
}

std::vector<PageId> PagingInstance::cache() const {
  if (initial_cache) {
    std::vector<PageId> c = *initial_cache;
    std::sort(c.begin(), c.end());
    return c;
  }
  std::vector<PageId> order(costs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](PageId a, PageId b) { return costs[a] < costs[b]; });
  order.resize(static_cast<std::size_t>(k));
  std::sort(order.begin(), order.end());
  return order;
}

PagingStar paging_to_star(const PagingInstance& inst) {
  inst.validate();
  std::vector<Rational> half;
  for (const Rational& c : inst.costs) half.push_back(c / 2);
  MetricSpace metric = MetricSpace::build(MetricDescription::weighted_star(half));
  std::vector<PointId> leaves;
  for (PageId p : inst.cache()) leaves.push_back(page_leaf(p));
  return PagingStar{std::move(metric), Configuration(leaves)};
}

std::string to_string(PagingPolicy policy) {
  switch (policy) {
    case PagingPolicy::greedy_min_cost: return "greedy_min_cost";
    case PagingPolicy::max_cost: return "max_cost";
    case PagingPolicy::fifo: return "fifo";
    case PagingPolicy::lru: return "lru";
  }
  return "unknown";
}

PagingPolicy parse_paging_policy(const std::string& text) {
  if (text == "greedy_min_cost" || text == "greedy") return PagingPolicy::greedy_min_cost;
  if (text == "max_cost") return PagingPolicy::max_cost;
  if (text == "fifo") return PagingPolicy::fifo;
  if (text == "lru") return PagingPolicy::lru;
  throw std::invalid_argument("unknown paging policy '" + text + "'");
}

PagingSimulator::PagingSimulator(const PagingInstance& inst) : inst_(inst), star_(paging_to_star(inst)) {}

PagingState PagingSimulator::start() const {
  PagingState s;
  s.cache = inst_.cache();
  s.loaded.assign(inst_.costs.size(), 0);
  s.used.assign(inst_.costs.size(), 0);
  return s;
}

Ticks PagingSimulator::fault_cost(PageId evicted, PageId loaded) const {
  return star_.metric.ticks(page_leaf(evicted), page_leaf(loaded));
}

PageId PagingSimulator::victim(PagingPolicy policy, const PagingState& state, PageTie tie) const {
  // smaller key is evicted first
  auto key = [&](PageId p) -> Rational {
    switch (policy) {
      case PagingPolicy::greedy_min_cost: return inst_.costs[p];
      case PagingPolicy::max_cost: return -inst_.costs[p];
      case PagingPolicy::fifo: return Rational(state.loaded[p]);
      case PagingPolicy::lru: return Rational(state.used[p]);
    }
    return Rational(0);
  };
  PageId best = -1;
  Rational best_key;
  for (PageId p : state.cache) {
    const Rational kp = key(p);
    const bool better = best < 0 || kp < best_key || (kp == best_key && tie == PageTie::highest_id);
    if (better) {
      best = p;
      best_key = kp;
    }
  }
  return best;
}

Ticks PagingSimulator::step(PagingPolicy policy, PagingState& state, PageId request, PageTie tie) const {
  if (request < 0 || request >= inst_.pages()) throw std::out_of_range("unknown page " + std::to_string(request));
  ++state.clock;
  const auto req = static_cast<std::size_t>(request);
  auto it = std::lower_bound(state.cache.begin(), state.cache.end(), request);
  if (it != state.cache.end() && *it == request) {
    state.used[req] = state.clock;
    return 0;
  }
  const PageId out = victim(policy, state, tie);
  state.cache.erase(std::find(state.cache.begin(), state.cache.end(), out));
  state.cache.insert(std::lower_bound(state.cache.begin(), state.cache.end(), request), request);
  state.loaded[req] = state.clock;
  state.used[req] = state.clock;
  return fault_cost(out, request);
}

Rational paging_cost(const PagingSimulator& sim, PagingPolicy policy, std::span<const PageId> sigma, PageTie tie) {
  PagingState s = sim.start();
  Ticks total = 0;
  for (PageId p : sigma) total += sim.step(policy, s, p, tie);
  return sim.metric().length(total);
}

Rational offline_opt_paging(const PagingInstance& inst, std::span<const PageId> sigma) {
  const PagingStar star = paging_to_star(inst);
  std::vector<PointId> leaves;
  for (PageId p : sigma) {
    if (p < 0 || p >= inst.pages()) throw std::out_of_range("unknown page " + std::to_string(p));
    leaves.push_back(page_leaf(p));
  }
  return star.metric.length(offline_opt(star.metric, star.c0, leaves).cost);
}

namespace {

std::vector<PointId> page_alphabet(int pages) {
  std::vector<PointId> a(static_cast<std::size_t>(pages));
  std::iota(a.begin(), a.end(), 0);
  return a;
}

}  // namespace

CostProfile paging_profile(const PagingSimulator& sim, PagingPolicy policy, int n, PageTie tie,
                           std::uint64_t budget) {
  const std::vector<PointId> alphabet = page_alphabet(sim.instance().pages());
  const std::uint64_t count = sequence_count(alphabet.size(), n);
  if (count > budget) throw BudgetExceeded("paging sequence space exceeds the budget", count, budget);
  std::unordered_map<Ticks, std::uint64_t> histogram;
  accumulate_costs(
      alphabet, n, sim.start(), [&](PagingState& s, PointId r) { return sim.step(policy, s, r, tie); }, histogram);
  std::vector<CostProfile::Run> runs;
  for (const auto& [c, m] : histogram) runs.push_back({c, m});
  return CostProfile(sim.unit(), std::move(runs));
}

CostProfile paging_opt_profile(const PagingInstance& inst, int n, std::uint64_t budget) {
  const PagingStar star = paging_to_star(inst);
  std::vector<Ticks> costs;
  enumerate_sequences(
      page_alphabet(inst.pages()), n,
      [&](std::span<const PointId> seq) {
        std::vector<PointId> leaves(seq.begin(), seq.end());
        for (PointId& p : leaves) p = page_leaf(p);
        costs.push_back(offline_opt(star.metric, star.c0, leaves).cost);
      },
      budget);
  return CostProfile::from_costs(star.metric.unit(), std::move(costs));
}

// state key: remaining << 40 | (pending + 1) << 32 | cache bitmask
PagingGame::PagingGame(const PagingInstance& inst, int n, PageTie tie) : sim_(inst), n_(n), tie_(tie) {
  if (inst.pages() > 32) throw std::invalid_argument("the paging game supports at most 32 pages");
  if (n < 0 || n > 255) throw std::invalid_argument("horizon must lie in [0, 255]");
}

OnlineGame::StateKey PagingGame::root() const {
  StateKey mask = 0;
  for (PageId p : sim_.instance().cache()) mask |= StateKey{1} << p;
  return (static_cast<StateKey>(n_) << 40) | mask;
}

OnlineGame::Node PagingGame::expand(StateKey state) const {
  const int remaining = static_cast<int>(state >> 40);
  const int pending = static_cast<int>((state >> 32) & 0xFF) - 1;
  const StateKey mask = state & 0xFFFFFFFFu;
  const auto make = [](int rem, int pend, StateKey m) {
    return (static_cast<StateKey>(rem) << 40) | (static_cast<StateKey>(pend + 1) << 32) | m;
  };

  Node node;
  if (pending < 0) {
    if (remaining == 0) return node;
    node.kind = NodeKind::arrival;
    for (PageId p = 0; p < sim_.instance().pages(); ++p) node.edges.push_back({make(remaining, p, mask), 0});
    return node;
  }
  node.kind = NodeKind::decision;
  if (mask & (StateKey{1} << pending)) {
    node.edges.push_back({make(remaining - 1, -1, mask), 0});
    return node;
  }
  PagingState s;
  for (PageId p = 0; p < sim_.instance().pages(); ++p) {
    if (mask & (StateKey{1} << p)) s.cache.push_back(p);
  }
  const PageId greedy = sim_.victim(PagingPolicy::greedy_min_cost, s, tie_);
  for (PageId out : s.cache) {
    if (out == greedy) node.reference = static_cast<int>(node.edges.size());
    const StateKey next = (mask & ~(StateKey{1} << out)) | (StateKey{1} << pending);
    node.edges.push_back({make(remaining - 1, -1, next), sim_.fault_cost(out, pending)});
  }
  return node;
}

}  // namespace bijective
