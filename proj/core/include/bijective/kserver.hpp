#pragma once

// k-server algorithms as step functions over an explicit state, plus the
// offline optimum and a simulator producing per-request traces.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bijective/config_space.hpp"
#include "bijective/configuration.hpp"
#include "bijective/metric_space.hpp"
#include "bijective/rational.hpp"

namespace bijective {

enum class TieBreak { lowest_point, highest_point, clockwise };

std::string to_string(TieBreak tie);
TieBreak parse_tie_break(const std::string& text);

struct StepResult {
  Configuration next;
  Ticks cost = 0;
  int server = -1;  // index (in the pre-step configuration) of the server that served
};

/// Index of the server greedy uses for r.
int greedy_server(const MetricSpace& metric, const Configuration& c, PointId r, TieBreak tie);

/// Nearest server moves to r.
StepResult greedy_step(const MetricSpace& metric, const Configuration& c, PointId r,
                       TieBreak tie = TieBreak::lowest_point);

/// Configuration minimising the covering radius. Uses the evenly spread
/// closed form on paths and cycles whose size allows it, otherwise an
/// exhaustive search over distinct point sets (smallest radius, then smallest
/// sorted distance vector, then smallest configuration). Throws when k > m or
/// the search exceeds `budget` candidate sets.
Configuration kcenter_anchors(const MetricSpace& metric, int k, std::uint64_t budget = 5'000'000);

/// Covering radius of c, in ticks.
Ticks covering_radius(const MetricSpace& metric, const Configuration& c);

/// Serve with the nearest anchor and return: twice the distance.
Ticks kcenter_step(const MetricSpace& metric, const Configuration& anchors, PointId r);

struct TraceStep {
  PointId request = 0;
  PointId from = -1;  // origin of the server that ended on the request, -1 if none or several moved
  Ticks cost = 0;
  Configuration after;
};

struct Trace {
  Rational unit{1};
  std::vector<TraceStep> steps;
  Ticks total_ticks = 0;

  Rational total() const { return ticks_to_length(total_ticks, unit); }
};

struct OptResult {
  Ticks cost = 0;
  Trace trace;
};

/// Minimum movement cost over lazy schedules from c0, with one optimal trace
/// (ties resolved toward the smallest configuration).
OptResult offline_opt(const MetricSpace& metric, const Configuration& c0, std::span<const PointId> sigma);

/// Work function table over every configuration, starting from w_0(X) = D(c0, X).
class WorkFunction {
 public:
  WorkFunction(std::shared_ptr<const ConfigSpace> space, const MetricSpace& metric, const Configuration& c0);

  void update(PointId r);
  Ticks operator()(const Configuration& x) const { return values_[space_->index(x)]; }
  const std::vector<Ticks>& values() const { return values_; }

  /// In-place w <- w' for request r.
  static void update_table(const ConfigSpace& space, const MetricSpace& metric, std::vector<Ticks>& w, PointId r);

 private:
  std::shared_ptr<const ConfigSpace> space_;
  const MetricSpace* metric_;
  std::vector<Ticks> values_;
};

/// One work-function step from c: a covered request stays put, otherwise the
/// server s minimising w(c - s + r) + d(s, r) moves (smallest resulting
/// configuration on ties). `w` must already include r.
StepResult wfa_step(const MetricSpace& metric, const ConfigSpace& space, const std::vector<Ticks>& w,
                    const Configuration& c, PointId r);

struct GadgetThresholds {
  Rational x1, x2, x3, x4;
  bool unfavourable = false;
};

/// Positions of a two-server configuration on a path and the derived window
/// thresholds x3 = 5/8 x2 + 3/8 x1 and x4 = 10 x2.
GadgetThresholds gadget_thresholds(const MetricSpace& metric, const Configuration& c, const Rational& t);

enum class AlgorithmId { greedy, kcenter, wfa, gadget, opt };

std::string to_string(AlgorithmId id);

struct AlgorithmSpec {
  AlgorithmId id = AlgorithmId::greedy;
  TieBreak tie = TieBreak::lowest_point;
  Rational gadget_t{Rational(1, 10)};
  std::optional<Configuration> anchors;  // kcenter; computed when absent

  std::string name() const;
};

/// "greedy", "greedy:highest_point", "kcenter", "wfa", "gadget", "gadget:1/10", "opt".
AlgorithmSpec parse_algorithm(const std::string& text);

struct AlgorithmState {
  Configuration config;
  Configuration shadow;
  std::vector<Ticks> table;
  Ticks base = 0;
  int phase = 0;
  bool success = false;
  PointId x1 = 0;
  PointId x2 = 0;
};

/// A k-server algorithm bound to a metric. The metric must outlive it.
class Algorithm {
 public:
  Algorithm(const MetricSpace& metric, int k, AlgorithmSpec spec);

  const AlgorithmSpec& spec() const { return spec_; }
  const MetricSpace& metric() const { return *metric_; }
  int servers() const { return k_; }
  bool online() const { return spec_.id != AlgorithmId::opt; }
  const Configuration& anchors() const { return anchors_; }

  AlgorithmState start(const Configuration& c0) const;

  /// Serves r and returns its cost. For the offline optimum this is the
  /// increase of the prefix optimum, so the costs still sum to the total.
  Ticks step(AlgorithmState& state, PointId r, PointId* moved_from = nullptr) const;

  /// Current configuration; for the offline optimum, the smallest
  /// configuration attaining the prefix optimum.
  Configuration configuration(const AlgorithmState& state) const;

  /// Cost of serving r as this (online) algorithm would from configuration c.
  Ticks conditional_cost(const Configuration& c, PointId r) const;

 private:
  Ticks step_gadget(AlgorithmState& s, PointId r, PointId* moved_from) const;
  bool unfavourable(const Configuration& c) const;

  const MetricSpace* metric_;
  int k_;
  AlgorithmSpec spec_;
  Configuration anchors_;
  std::shared_ptr<const ConfigSpace> space_;
  // gadget threshold t / unit = t_num_ / t_den_
  Ticks t_num_ = 0;
  Ticks t_den_ = 1;
};

/// Runs alg from c0 over sigma. The offline optimum returns its optimal trace.
Trace simulate(const Algorithm& alg, const Configuration& c0, std::span<const PointId> sigma);

}  // namespace bijective
