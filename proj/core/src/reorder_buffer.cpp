#include "bijective/reorder_buffer.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bijective {

std::string to_string(RbmPolicy policy) {
  switch (policy) {
    case RbmPolicy::greedy_max_block: return "greedy_max_block";
    case RbmPolicy::min_block: return "min_block";
    case RbmPolicy::fifo_colour: return "fifo_colour";
  }
  return "unknown";
}

RbmPolicy parse_rbm_policy(const std::string& text) {
  if (text == "greedy_max_block" || text == "greedy") return RbmPolicy::greedy_max_block;
  if (text == "min_block") return RbmPolicy::min_block;
  if (text == "fifo_colour" || text == "fifo") return RbmPolicy::fifo_colour;
  throw std::invalid_argument("unknown buffer policy '" + text + "'");
}

std::vector<Colour> parse_colours(const std::string& text) {
  std::vector<Colour> out;
  for (char ch : text) {
    if (ch < 'a' || ch > 'z') throw std::invalid_argument("colours are the letters a..z, got '" + text + "'");
    out.push_back(ch - 'a');
  }
  return out;
}

std::string format_colours(std::span<const Colour> colours) {
  std::string out;
  for (Colour c : colours) {
    if (c < 0 || c >= 26) throw std::invalid_argument("colour id out of range");
    out.push_back(static_cast<char>('a' + c));
  }
  return out;
}

namespace {

int colour_count(std::span<const Colour> sigma) {
  int c = 0;
  for (Colour x : sigma) {
    if (x < 0) throw std::invalid_argument("colour ids must be nonnegative");
    c = std::max(c, x + 1);
  }
  return c;
}

// Colour with the largest (greedy) or smallest positive (min_block) count, lowest id on ties.
Colour block_choice(const std::vector<int>& counts, bool largest) {
  Colour best = -1;
  for (Colour c = 0; c < static_cast<Colour>(counts.size()); ++c) {
    const int n = counts[static_cast<std::size_t>(c)];
    if (n == 0) continue;
    if (best < 0 || (largest ? n > counts[static_cast<std::size_t>(best)] : n < counts[static_cast<std::size_t>(best)])) {
      best = c;
    }
  }
  return best;
}

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("buffer size must be at least 1");
}

}  // namespace

RbmResult rbm_run(RbmPolicy policy, int k, std::span<const Colour> sigma) {
  check_k(k);
  const int colours = colour_count(sigma);
  std::vector<int> counts(static_cast<std::size_t>(colours), 0);
  std::deque<std::pair<std::size_t, Colour>> buffer;
  std::size_t next = 0;
  Colour active = -1;
  bool just_switched = false;
  RbmResult result;

  while (true) {
    while (static_cast<int>(buffer.size()) < k && next < sigma.size()) {
      buffer.emplace_back(next, sigma[next]);
      ++counts[static_cast<std::size_t>(sigma[next])];
      ++next;
    }
    if (buffer.empty()) break;
    auto it = active < 0 ? buffer.end()
                         : std::find_if(buffer.begin(), buffer.end(), [&](const auto& e) { return e.second == active; });
    if (it != buffer.end()) {
      result.trace.push_back({it->first, active, just_switched});
      just_switched = false;
      --counts[static_cast<std::size_t>(active)];
      buffer.erase(it);
      continue;
    }
    switch (policy) {
      case RbmPolicy::greedy_max_block: active = block_choice(counts, true); break;
      case RbmPolicy::min_block: active = block_choice(counts, false); break;
      case RbmPolicy::fifo_colour: active = buffer.front().second; break;
    }
    ++result.switches;
    just_switched = true;
  }
  return result;
}

std::uint64_t offline_opt_rbm(int k, std::span<const Colour> sigma, std::uint64_t budget) {
  check_k(k);
  const int colours = colour_count(sigma);
  std::map<std::vector<int>, std::uint64_t> memo;

  // state layout: counts per colour, then active colour, then input position
  auto advance = [&](std::vector<int>& s) {
    auto& active = s[static_cast<std::size_t>(colours)];
    auto& next = s[static_cast<std::size_t>(colours) + 1];
    while (true) {
      int size = std::accumulate(s.begin(), s.begin() + colours, 0);
      while (size < k && static_cast<std::size_t>(next) < sigma.size()) {
        ++s[static_cast<std::size_t>(sigma[static_cast<std::size_t>(next)])];
        ++next;
        ++size;
      }
      if (size == 0) return false;
      if (active >= 0 && s[static_cast<std::size_t>(active)] > 0) {
        --s[static_cast<std::size_t>(active)];
        continue;
      }
      return true;
    }
  };

  auto solve = [&](auto& self, std::vector<int> s) -> std::uint64_t {
    if (!advance(s)) return 0;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    if (memo.size() >= budget) throw BudgetExceeded("buffer search exceeds the state budget", memo.size() + 1, budget);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (Colour c = 0; c < colours; ++c) {
      if (s[static_cast<std::size_t>(c)] == 0) continue;
      std::vector<int> t = s;
      t[static_cast<std::size_t>(colours)] = c;
      best = std::min(best, 1 + self(self, std::move(t)));
    }
    memo.emplace(std::move(s), best);
    return best;
  };

  std::vector<int> start(static_cast<std::size_t>(colours) + 2, 0);
  start[static_cast<std::size_t>(colours)] = -1;
  return solve(solve, std::move(start));
}

namespace {

std::vector<PointId> colour_alphabet(int colours) {
  if (colours < 1) throw std::invalid_argument("at least one colour is required");
  std::vector<PointId> a(static_cast<std::size_t>(colours));
  std::iota(a.begin(), a.end(), 0);
  return a;
}

}  // namespace

CostProfile rbm_profile(RbmPolicy policy, int colours, int k, int n, std::uint64_t budget) {
  std::vector<Ticks> costs;
  enumerate_sequences(
      colour_alphabet(colours), n,
      [&](std::span<const PointId> seq) { costs.push_back(static_cast<Ticks>(rbm_run(policy, k, seq).switches)); },
      budget);
  return CostProfile::from_costs(Rational(1), std::move(costs));
}

CostProfile rbm_opt_profile(int colours, int k, int n, std::uint64_t budget) {
  std::vector<Ticks> costs;
  enumerate_sequences(
      colour_alphabet(colours), n,
      [&](std::span<const PointId> seq) { costs.push_back(static_cast<Ticks>(offline_opt_rbm(k, seq))); }, budget);
  return CostProfile::from_costs(Rational(1), std::move(costs));
}

// state key: remaining << 48 | (active + 1) << 40 | counts, 4 bits per colour
RbmGame::RbmGame(int colours, int k, int n) : colours_(colours), k_(k), n_(n) {
  if (colours < 1 || colours > 10) throw std::invalid_argument("the buffer game supports 1..10 colours");
  if (k < 1 || k > 15) throw std::invalid_argument("the buffer game supports buffer sizes 1..15");
  if (n < 0 || n > 255) throw std::invalid_argument("horizon must lie in [0, 255]");
}

OnlineGame::StateKey RbmGame::root() const { return static_cast<StateKey>(n_) << 48; }

OnlineGame::Node RbmGame::expand(StateKey state) const {
  const int remaining = static_cast<int>(state >> 48);
  const int active = static_cast<int>((state >> 40) & 0xFF) - 1;
  std::vector<int> counts(static_cast<std::size_t>(colours_));
  int size = 0;
  for (int c = 0; c < colours_; ++c) {
    counts[static_cast<std::size_t>(c)] = static_cast<int>((state >> (4 * c)) & 0xF);
    size += counts[static_cast<std::size_t>(c)];
  }
  auto make = [&](int rem, int act, const std::vector<int>& cnt) {
    StateKey key = (static_cast<StateKey>(rem) << 48) | (static_cast<StateKey>(act + 1) << 40);
    for (int c = 0; c < colours_; ++c) key |= static_cast<StateKey>(cnt[static_cast<std::size_t>(c)]) << (4 * c);
    return key;
  };

  Node node;
  if (size < k_ && remaining > 0) {
    node.kind = NodeKind::arrival;
    for (int c = 0; c < colours_; ++c) {
      std::vector<int> next = counts;
      ++next[static_cast<std::size_t>(c)];
      node.edges.push_back({make(remaining - 1, active, next), 0});
    }
    return node;
  }
  if (size == 0) return node;
  node.kind = NodeKind::decision;
  if (active >= 0 && counts[static_cast<std::size_t>(active)] > 0) {
    std::vector<int> next = counts;
    --next[static_cast<std::size_t>(active)];
    node.edges.push_back({make(remaining, active, next), 0});
    return node;
  }
  const Colour greedy = block_choice(counts, true);
  for (int c = 0; c < colours_; ++c) {
    if (counts[static_cast<std::size_t>(c)] == 0) continue;
    if (c == greedy) node.reference = static_cast<int>(node.edges.size());
    node.edges.push_back({make(remaining, c, counts), 1});
  }
  return node;
}

}  // namespace bijective
