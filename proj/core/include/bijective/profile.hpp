#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bijective/rational.hpp"

namespace bijective {

/// Sorted multiset of total costs, one per request sequence, stored as
/// run-length encoded ticks so that astronomically large profiles stay small.
class CostProfile {
 public:
  struct Run {
    Ticks cost = 0;
    std::uint64_t count = 0;
    friend bool operator==(const Run&, const Run&) = default;
  };

  CostProfile() = default;
  /// Sorts and merges runs; drops empty ones.
  CostProfile(Rational unit, std::vector<Run> runs);

  static CostProfile from_costs(Rational unit, std::vector<Ticks> costs);
  static CostProfile from_histogram(Rational unit, const std::map<Ticks, std::uint64_t>& histogram);

  const Rational& unit() const { return unit_; }
  const std::vector<Run>& runs() const { return runs_; }
  std::uint64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Cost at 0-based rank in ascending order.
  Ticks ticks_at(std::uint64_t rank) const;
  Rational at(std::uint64_t rank) const { return ticks_to_length(ticks_at(rank), unit_); }
  Rational min() const;
  Rational max() const;
  BigInt sum_ticks() const;
  Rational sum() const { return Rational(sum_ticks()) * unit_; }
  Rational mean() const;

  /// Number of entries with cost <= t (resp. < t), in ticks.
  std::uint64_t count_at_most(Ticks t) const;
  std::uint64_t count_below(Ticks t) const;

  /// Every cost in ascending order. Throws above `limit` entries.
  std::vector<Ticks> expand(std::uint64_t limit = 50'000'000) const;
  std::vector<Rational> costs(std::uint64_t limit = 10'000'000) const;

  /// Same values expressed in a finer unit (unit() must be a multiple of it).
  CostProfile rescaled(const Rational& unit) const;
  /// Every cost plus `shift` ticks.
  CostProfile shifted(Ticks shift) const;

  friend bool operator==(const CostProfile& a, const CostProfile& b) {
    return a.unit_ == b.unit_ && a.runs_ == b.runs_;
  }

 private:
  Rational unit_{1};
  std::vector<Run> runs_;
  std::uint64_t size_ = 0;
};

/// Largest unit of which both are integer multiples.
Rational common_unit(const Rational& a, const Rational& b);

/// Where a profile came from, for reports and file headers.
struct ProfileInfo {
  std::string algorithm;
  std::string metric;
  std::string c0;
  int n = 0;
  std::string tie;
  bool approximate = false;
  std::uint64_t seed = 0;
};

}  // namespace bijective
