#pragma once

// Reordering buffer management: coloured items stream into a buffer of k
// slots, the station serves items of its active colour, and every change of
// active colour costs one switch. Service is lazy: the buffer fills first,
// and the colour changes only when no buffered item matches it. The first
// choice of colour counts as a switch.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bijective/enumeration.hpp"
#include "bijective/oracle.hpp"

namespace bijective {

using Colour = int;

enum class RbmPolicy { greedy_max_block, min_block, fifo_colour };

std::string to_string(RbmPolicy policy);
RbmPolicy parse_rbm_policy(const std::string& text);

/// "aabb" -> {0, 0, 1, 1}; letters a..z only.
std::vector<Colour> parse_colours(const std::string& text);
std::string format_colours(std::span<const Colour> colours);

struct RbmEvent {
  std::size_t item = 0;  // position in the input of the served item
  Colour colour = 0;
  bool switched = false;  // a switch to `colour` happened right before serving
};

struct RbmResult {
  std::uint64_t switches = 0;
  std::vector<RbmEvent> trace;
};

/// Switch choice on ties among equally good colours: lowest colour id.
RbmResult rbm_run(RbmPolicy policy, int k, std::span<const Colour> sigma);

inline constexpr std::uint64_t kRbmStateBudget = 5'000'000;

/// Fewest switches over all lazy schedules, by memoised search over
/// (buffer contents, active colour, input position). Throws BudgetExceeded
/// when more than `budget` states are visited.
std::uint64_t offline_opt_rbm(int k, std::span<const Colour> sigma, std::uint64_t budget = kRbmStateBudget);

/// Sorted switch counts of the policy over all colour sequences of length n.
CostProfile rbm_profile(RbmPolicy policy, int colours, int k, int n, std::uint64_t budget = kDefaultSequenceBudget);
CostProfile rbm_opt_profile(int colours, int k, int n, std::uint64_t budget = kDefaultSequenceBudget);

/// Lazy online buffer management as a game: arrivals are item colours, a
/// forced switch lets the algorithm pick any buffered colour. The reference
/// policy is greedy_max_block.
class RbmGame : public OnlineGame {
 public:
  RbmGame(int colours, int k, int n);

  StateKey root() const override;
  Node expand(StateKey state) const override;
  Rational unit() const override { return Rational(1); }

 private:
  int colours_;
  int k_;
  int n_;
};

}  // namespace bijective
