#pragma once

// Weighted paging reduced to k-server on a weighted star: page p is a leaf at
// distance c_p / 2 from the centre, and a fault that evicts q to load p costs
// c_q / 2 + c_p / 2.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bijective/enumeration.hpp"
#include "bijective/oracle.hpp"

namespace bijective {

using PageId = int;

struct PagingInstance {
  std::vector<Rational> costs;  // eviction cost per page id
  int k = 0;
  std::optional<std::vector<PageId>> initial_cache;  // the k cheapest pages when absent

  int pages() const { return static_cast<int>(costs.size()); }
  /// Throws std::invalid_argument on k outside [1, pages) or a nonpositive cost.
  void validate() const;
  /// The given initial cache, or the k cheapest pages (lowest ids on ties).
  std::vector<PageId> cache() const;
};

struct PagingStar {
  MetricSpace metric;
  Configuration c0;
};

/// Leaf id of page p on the reduced star.
inline PointId page_leaf(PageId p) { return p + 1; }

PagingStar paging_to_star(const PagingInstance& inst);

enum class PagingPolicy { greedy_min_cost, max_cost, fifo, lru };
enum class PageTie { lowest_id, highest_id };

std::string to_string(PagingPolicy policy);
PagingPolicy parse_paging_policy(const std::string& text);

struct PagingState {
  std::vector<PageId> cache;           // ascending page ids
  std::vector<std::uint64_t> loaded;   // per page: time it entered the cache
  std::vector<std::uint64_t> used;     // per page: time of its last request
  std::uint64_t clock = 0;
};

/// Pages as request points, costs in star ticks.
class PagingSimulator {
 public:
  explicit PagingSimulator(const PagingInstance& inst);

  const PagingInstance& instance() const { return inst_; }
  const MetricSpace& metric() const { return star_.metric; }
  const Configuration& c0() const { return star_.c0; }
  Rational unit() const { return star_.metric.unit(); }

  PagingState start() const;
  /// Page the policy evicts on a fault at `request`.
  PageId victim(PagingPolicy policy, const PagingState& state, PageTie tie = PageTie::lowest_id) const;
  /// Serves a page request; returns its cost in ticks.
  Ticks step(PagingPolicy policy, PagingState& state, PageId request, PageTie tie = PageTie::lowest_id) const;
  /// Cost in ticks of evicting q to load p.
  Ticks fault_cost(PageId evicted, PageId loaded) const;

 private:
  PagingInstance inst_;
  PagingStar star_;
};

/// Total cost of the policy over sigma, in instance units.
Rational paging_cost(const PagingSimulator& sim, PagingPolicy policy, std::span<const PageId> sigma,
                     PageTie tie = PageTie::lowest_id);

/// Offline optimum via the k-server optimum on the reduced star.
Rational offline_opt_paging(const PagingInstance& inst, std::span<const PageId> sigma);

/// Sorted costs of the policy over every page sequence of length n.
CostProfile paging_profile(const PagingSimulator& sim, PagingPolicy policy, int n, PageTie tie = PageTie::lowest_id,
                           std::uint64_t budget = kDefaultSequenceBudget);

/// Sorted offline optima over every page sequence of length n.
CostProfile paging_opt_profile(const PagingInstance& inst, int n, std::uint64_t budget = kDefaultSequenceBudget);

/// Lazy online paging as a game: arrivals are page requests, a fault lets
/// the algorithm evict any cached page. The reference policy is
/// greedy_min_cost under `tie`.
class PagingGame : public OnlineGame {
 public:
  PagingGame(const PagingInstance& inst, int n, PageTie tie = PageTie::lowest_id);

  StateKey root() const override;
  Node expand(StateKey state) const override;
  Rational unit() const override { return sim_.unit(); }

 private:
  PagingSimulator sim_;
  int n_;
  PageTie tie_;
};

}  // namespace bijective
