#pragma once

// Exhaustive enumeration of I_n (every request sequence of length n over the
// requestable points) and the cost profiles built from it.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bijective/kserver.hpp"
#include "bijective/profile.hpp"

namespace bijective {

inline constexpr std::uint64_t kDefaultSequenceBudget = 10'000'000;

/// Thrown when an exhaustive run would exceed its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// alphabet^n, saturating at UINT64_MAX.
std::uint64_t sequence_count(std::size_t alphabet, int n);

/// Calls visit once per sequence, in lexicographic order of the alphabet
/// positions. Throws BudgetExceeded when alphabet^n > budget.
void enumerate_sequences(std::span<const PointId> alphabet, int n,
                         const std::function<void(std::span<const PointId>)>& visit,
                         std::uint64_t budget = kDefaultSequenceBudget);

inline void enumerate_sequences(const MetricSpace& metric, int n,
                                const std::function<void(std::span<const PointId>)>& visit,
                                std::uint64_t budget = kDefaultSequenceBudget) {
  enumerate_sequences(metric.request_points(), n, visit, budget);
}

/// Depth-first walk of I_n sharing prefixes: `step(State&, PointId) -> Ticks`
/// advances a copy of the parent state. Totals land in `histogram`.
template <class State, class Step>
void accumulate_costs(std::span<const PointId> alphabet, int n, const State& start, Step&& step,
                      std::unordered_map<Ticks, std::uint64_t>& histogram) {
  if (n <= 0) {
    ++histogram[0];
    return;
  }
  std::vector<State> states(static_cast<std::size_t>(n) + 1, start);
  auto walk = [&](auto& self, std::size_t depth, Ticks total) -> void {
    for (PointId r : alphabet) {
      states[depth + 1] = states[depth];
      const Ticks c = step(states[depth + 1], r);
      if (depth + 1 == static_cast<std::size_t>(n)) {
        ++histogram[total + c];
      } else {
        self(self, depth + 1, total + c);
      }
    }
  };
  walk(walk, 0, 0);
}

struct EnumerationOptions {
  std::uint64_t budget = kDefaultSequenceBudget;
  unsigned workers = 1;  // splits I_n by first request
};

/// Sorted total costs of alg over all of I_n from c0.
CostProfile cost_profile(const Algorithm& alg, const Configuration& c0, int n, const EnumerationOptions& options = {});

/// Per-sequence total costs in enumeration order (for bijection checks).
std::vector<Ticks> sequence_costs(const Algorithm& alg, const Configuration& c0, int n,
                                  std::uint64_t budget = kDefaultSequenceBudget);

/// Total costs over `samples` sequences drawn uniformly with a seeded
/// mt19937_64. With `exhaustive` set it enumerates I_n instead.
CostProfile sample_profile(const Algorithm& alg, const Configuration& c0, int n, std::uint64_t samples,
                           std::uint64_t seed, bool exhaustive = false);

/// Profile of a serve-and-return algorithm with fixed anchors (each request
/// costs twice its distance to the nearest anchor; the first also pays the
/// move from c0 to the anchors). Built by convolving the per-request cost
/// histogram n times, so the size of I_n does not matter.
CostProfile anchored_profile(const MetricSpace& metric, const Configuration& anchors, const Configuration& c0, int n);

}  // namespace bijective
