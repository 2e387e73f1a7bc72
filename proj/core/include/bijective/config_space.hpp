#pragma once

#include <cstdint>
#include <vector>

#include "bijective/configuration.hpp"

namespace bijective {

/// Every multiset of k points out of m, addressed by a dense combinatorial
/// rank (colex order of the shifted set a_i + i).
class ConfigSpace {
 public:
  /// Throws std::invalid_argument when k is out of range or the space holds
  /// more than `limit` configurations.
  ConfigSpace(int m, int k, std::size_t limit = 4'000'000);

  int points() const { return m_; }
  int servers() const { return k_; }
  std::size_t size() const { return configs_.size(); }

  const Configuration& at(std::size_t index) const { return configs_[index]; }
  std::size_t index(const Configuration& c) const {
    std::size_t r = 0;
    for (int i = 0; i < k_; ++i) {
      r += binom_[static_cast<std::size_t>(c[i] + i)][static_cast<std::size_t>(i + 1)];
    }
    return r;
  }

  /// Number of configurations of k servers over m points, or 0 on overflow.
  static std::uint64_t count(int m, int k);

 private:
  int m_;
  int k_;
  std::vector<std::vector<std::size_t>> binom_;
  std::vector<Configuration> configs_;
};

/// Every configuration of k servers on pairwise distinct points among m, in
/// ascending order.
std::vector<Configuration> distinct_configurations(int m, int k);

}  // namespace bijective
