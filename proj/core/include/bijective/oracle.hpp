#pragma once

// Exhaustive comparison against every deterministic online algorithm.
//
// An online problem of horizon n is a game tree: arrival nodes branch on the
// next input (each branch weighs one sequence), decision nodes branch on the
// algorithm's choice, leaves end a sequence. An online algorithm is one
// choice per decision node of the tree. Nodes are identified by a state key;
// two histories reaching the same key have identical futures.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bijective/enumeration.hpp"
#include "bijective/kserver.hpp"
#include "bijective/profile.hpp"

namespace bijective {

class OnlineGame {
 public:
  using StateKey = std::uint64_t;

  enum class NodeKind { leaf, arrival, decision };

  struct Edge {
    StateKey child = 0;
    Ticks cost = 0;
  };

  struct Node {
    NodeKind kind = NodeKind::leaf;
    std::vector<Edge> edges;
    int reference = 0;  // the reference policy's edge at a decision node
  };

  virtual ~OnlineGame() = default;
  virtual StateKey root() const = 0;
  virtual Node expand(StateKey state) const = 0;
  virtual Rational unit() const = 0;
};

/// Step function b -> count as (threshold, count) breakpoints, ascending in
/// both; the value below the first threshold is 0.
using CountCurve = std::vector<std::pair<Ticks, std::uint64_t>>;

std::uint64_t evaluate(const CountCurve& curve, Ticks b);

/// Number of distinct online algorithms (choice functions on the tree).
BigInt count_policies(const OnlineGame& game);

/// b -> max over all online algorithms of |{sequences with cost <= b}|.
CountCurve max_count_curve(const OnlineGame& game);

/// b -> |{sequences with cost <= b}| for the reference policy.
CountCurve reference_curve(const OnlineGame& game);

std::uint64_t max_count_at_most(const OnlineGame& game, Ticks budget);

/// Sorted profile of the reference policy.
CostProfile reference_profile(const OnlineGame& game);

/// Every distinct profile reachable by some online algorithm, with the number
/// of algorithms producing it. Throws when more than `budget` algorithms exist.
std::map<std::vector<Ticks>, BigInt> policy_profiles(const OnlineGame& game, const BigInt& budget);

enum class OracleMode { automatic, symbolic, explicit_enumeration };

std::string to_string(OracleMode mode);
OracleMode parse_oracle_mode(const std::string& text);

struct OracleOptions {
  OracleMode mode = OracleMode::automatic;
  BigInt budget{2'000'000};  // algorithm count allowed for explicit enumeration
};

struct OracleVerdict {
  bool reference_dominates = false;
  OracleMode mode = OracleMode::symbolic;
  BigInt policies;
  CostProfile reference_profile;
  // first cost bound at which some algorithm fits more sequences than the reference
  std::optional<Ticks> witness_budget;
  std::uint64_t witness_count = 0;
  std::uint64_t reference_count = 0;
  std::optional<CostProfile> witness_profile;
  std::size_t distinct_profiles = 0;  // explicit mode only
};

/// Does the reference policy's sorted profile lie pointwise below every other
/// online algorithm's? Automatic mode enumerates algorithms explicitly when
/// their number fits the budget and otherwise uses the max-count recursion,
/// which covers all algorithms at once. Explicit-only mode throws
/// BudgetExceeded when over budget.
OracleVerdict run_oracle(const OnlineGame& game, const OracleOptions& options = {});

/// Lazy k-server game: arrivals are request points, a covered request leaves
/// the configuration alone, otherwise one server moves onto the request.
/// The reference policy is greedy under `tie`.
class KServerGame : public OnlineGame {
 public:
  KServerGame(const MetricSpace& metric, const Configuration& c0, int n, TieBreak tie = TieBreak::lowest_point);

  StateKey root() const override;
  Node expand(StateKey state) const override;
  Rational unit() const override { return metric_->unit(); }

 private:
  StateKey key(int remaining, std::size_t config, PointId pending) const;

  const MetricSpace* metric_;
  ConfigSpace space_;
  Configuration c0_;
  int n_;
  TieBreak tie_;
};

}  // namespace bijective
