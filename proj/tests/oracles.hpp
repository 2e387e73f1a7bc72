#pragma once

// Slow reference implementations used to cross-check the library.

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "bijective/metric_space.hpp"
#include "bijective/rational.hpp"

namespace oracle {

using bijective::PointId;
using bijective::Ratio;
using bijective::Rational;
using bijective::Ticks;

inline Ratio pair(const Rational& a, const Rational& b) {
  if (b == 0) return a == 0 ? Ratio::of(1) : Ratio::inf();
  return Ratio::of(a / b);
}

/// Smallest max_i A_i / B_pi(i) over every permutation pi.
inline Ratio permutation_strict_rho(const std::vector<Rational>& a, std::vector<Rational> b) {
  std::vector<std::size_t> idx(b.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Ratio best = Ratio::inf();
  bool any = false;
  do {
    Ratio worst = Ratio::of(a.empty() ? 1 : 0);
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, pair(a[i], b[idx[i]]));
    if (!any || worst < best) best = worst;
    any = true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

/// Smallest max_i (A_i - rho B_pi(i)) over every permutation pi.
inline Rational permutation_constant(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                     const Rational& rho) {
  std::vector<std::size_t> idx(b.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::optional<Rational> best;
  do {
    std::optional<Rational> worst;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rational v = a[i] - rho * b[idx[i]];
      if (!worst || v > *worst) worst = v;
    }
    const Rational w = worst.value_or(Rational(0));
    if (!best || w < *best) best = w;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best.value_or(Rational(0));
}

/// Offline k-server optimum by trying every assignment of requests to servers.
inline Ticks assignment_opt(const bijective::MetricSpace& metric, std::vector<PointId> servers,
                            const std::vector<PointId>& sigma) {
  Ticks best = std::numeric_limits<Ticks>::max();
  std::function<void(std::size_t, Ticks)> go = [&](std::size_t i, Ticks cost) {
    if (cost >= best) return;
    if (i == sigma.size()) {
      best = cost;
      return;
    }
    for (std::size_t s = 0; s < servers.size(); ++s) {
      const PointId was = servers[s];
      servers[s] = sigma[i];
      go(i + 1, cost + metric.ticks(was, sigma[i]));
      servers[s] = was;
    }
  };
  go(0, 0);
  return best;
}

/// Minimum-cost perfect matching between two server lists, by permutations.
inline Ticks matching(const bijective::MetricSpace& metric, const std::vector<PointId>& a, std::vector<PointId> b) {
  std::sort(b.begin(), b.end());
  Ticks best = std::numeric_limits<Ticks>::max();
  do {
    Ticks c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += metric.ticks(a[i], b[i]);
    best = std::min(best, c);
  } while (std::next_permutation(b.begin(), b.end()));
  return best;
}

/// Work function value: serve sigma from c0, then move to x.
inline Ticks work_function(const bijective::MetricSpace& metric, const std::vector<PointId>& c0,
                           const std::vector<PointId>& sigma, const std::vector<PointId>& x) {
  Ticks best = std::numeric_limits<Ticks>::max();
  std::vector<PointId> servers = c0;
  std::function<void(std::size_t, Ticks)> go = [&](std::size_t i, Ticks cost) {
    if (i == sigma.size()) {
      best = std::min(best, cost + matching(metric, servers, x));
      return;
    }
    for (std::size_t s = 0; s < servers.size(); ++s) {
      const PointId was = servers[s];
      servers[s] = sigma[i];
      go(i + 1, cost + metric.ticks(was, sigma[i]));
      servers[s] = was;
    }
  };
  go(0, 0);
  return best;
}

/// Weighted paging optimum over every eviction choice on every fault.
inline Rational paging_opt(const std::vector<Rational>& costs, std::vector<int> cache, const std::vector<int>& sigma) {
  std::optional<Rational> best;
  std::function<void(std::size_t, Rational)> go = [&](std::size_t i, Rational cost) {
    if (best && cost >= *best) return;
    if (i == sigma.size()) {
      best = cost;
      return;
    }
    const int p = sigma[i];
    if (std::find(cache.begin(), cache.end(), p) != cache.end()) {
      go(i + 1, cost);
      return;
    }
    for (std::size_t s = 0; s < cache.size(); ++s) {
      const int q = cache[s];
      cache[s] = p;
      go(i + 1, cost + costs[static_cast<std::size_t>(q)] / 2 + costs[static_cast<std::size_t>(p)] / 2);
      cache[s] = q;
    }
  };
  go(0, Rational(0));
  return *best;
}

/// Fewest switches of a lazy reordering buffer: fill to k, serve the active
/// colour while buffered, otherwise switch to any buffered colour.
inline int rbm_opt(int k, const std::vector<int>& sigma) {
  int best = std::numeric_limits<int>::max();
  std::function<void(std::multiset<int>, std::size_t, int, int)> go = [&](std::multiset<int> buffer, std::size_t next,
                                                                           int active, int switches) {
    if (switches >= best) return;
    while (static_cast<int>(buffer.size()) < k && next < sigma.size()) buffer.insert(sigma[next++]);
    if (buffer.empty()) {
      best = switches;
      return;
    }
    if (buffer.count(active)) {
      buffer.erase(buffer.find(active));
      go(buffer, next, active, switches);
      return;
    }
    for (int c : std::set<int>(buffer.begin(), buffer.end())) {
      std::multiset<int> rest = buffer;
      rest.erase(rest.find(c));
      go(rest, next, c, switches + 1);
    }
  };
  go({}, 0, -1, 0);
  return best;
}

/// Every sequence of length n over {0..alphabet-1}.
inline std::vector<std::vector<int>> all_sequences(int alphabet, int n) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& s : out) {
      for (int c = 0; c < alphabet; ++c) {
        auto t = s;
        t.push_back(c);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Sorted cost vectors of every history-dependent lazy online k-server
/// algorithm (one choice per request history), deduplicated.
inline std::set<std::vector<Ticks>> lazy_profiles(const bijective::MetricSpace& metric, std::vector<PointId> c0,
                                                  int n) {
  std::function<std::set<std::vector<Ticks>>(const std::vector<PointId>&, int)> node =
      [&](const std::vector<PointId>& servers, int left) -> std::set<std::vector<Ticks>> {
    if (left == 0) return {std::vector<Ticks>{0}};
    std::set<std::vector<Ticks>> acc{std::vector<Ticks>{}};
    for (PointId r : metric.request_points()) {
      std::set<std::vector<Ticks>> options;
      const bool covered = std::find(servers.begin(), servers.end(), r) != servers.end();
      for (std::size_t s = 0; s < servers.size(); ++s) {
        if (covered && s > 0) break;
        std::vector<PointId> next = servers;
        Ticks cost = 0;
        if (!covered) {
          cost = metric.ticks(next[s], r);
          next[s] = r;
          std::sort(next.begin(), next.end());
        }
        for (std::vector<Ticks> v : node(next, left - 1)) {
          for (Ticks& t : v) t += cost;
          options.insert(std::move(v));
        }
      }
      std::set<std::vector<Ticks>> merged;
      for (const auto& a : acc) {
        for (const auto& b : options) {
          std::vector<Ticks> v = a;
          v.insert(v.end(), b.begin(), b.end());
          std::sort(v.begin(), v.end());
          merged.insert(std::move(v));
        }
      }
      acc = std::move(merged);
    }
    return acc;
  };
  std::sort(c0.begin(), c0.end());
  return node(c0, n);
}

}  // namespace oracle
