#include "bijective/config_space.hpp"
#include "bijective/rational.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace bijective {

std::uint64_t ConfigSpace::count(int m, int k) {
  // C(m + k - 1, k), built incrementally so intermediate values stay exact
  UInt128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(m + i - 1) / static_cast<unsigned>(i);
    if (c > std::numeric_limits<std::uint64_t>::max()) return 0;
  }
  return static_cast<std::uint64_t>(c);
}

ConfigSpace::ConfigSpace(int m, int k, std::size_t limit) : m_(m), k_(k) {
  if (k < 1 || k > kMaxServers) {
    throw std::invalid_argument("server count must lie in [1, " + std::to_string(kMaxServers) + "]");
  }
  if (m < 1) throw std::invalid_argument("configuration space needs at least one point");
  const std::uint64_t total = count(m, k);
  if (total == 0 || total > limit) {
    throw std::invalid_argument("configuration space of " + std::to_string(k) + " servers over " +
                                std::to_string(m) + " points exceeds the budget of " + std::to_string(limit));
  }

  const auto rows = static_cast<std::size_t>(m + k);
  binom_.assign(rows, std::vector<std::size_t>(static_cast<std::size_t>(k + 1), 0));
  for (std::size_t n = 0; n < rows; ++n) {
    binom_[n][0] = 1;
    for (std::size_t r = 1; r <= static_cast<std::size_t>(k) && r <= n; ++r) {
      binom_[n][r] = binom_[n - 1][r - 1] + (r <= n - 1 ? binom_[n - 1][r] : 0);
    }
  }

  configs_.resize(static_cast<std::size_t>(total));
  std::vector<PointId> cur(static_cast<std::size_t>(k), 0);
  while (true) {
    Configuration c(cur);
    configs_[index(c)] = c;
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - 1) --i;
    if (i < 0) break;
    const PointId v = cur[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < k; ++j) cur[static_cast<std::size_t>(j)] = v;
  }
}

std::vector<Configuration> distinct_configurations(int m, int k) {
  if (k < 1 || k > kMaxServers || k > m) throw std::invalid_argument("need 1 <= k <= min(m, 8)");
  std::vector<Configuration> out;
  std::vector<PointId> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.emplace_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return out;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace bijective
