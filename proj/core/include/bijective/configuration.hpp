#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bijective {

using PointId = std::int32_t;

inline constexpr int kMaxServers = 8;

/// Multiset of server positions, kept in canonical (ascending) order so two
/// configurations holding the same multiset compare equal.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::initializer_list<PointId> servers);
  explicit Configuration(std::span<const PointId> servers);

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  PointId operator[](int i) const { return servers_[static_cast<std::size_t>(i)]; }

  const PointId* begin() const { return servers_.data(); }
  const PointId* end() const { return servers_.data() + size_; }
  std::span<const PointId> servers() const { return {begin(), end()}; }

  bool contains(PointId p) const { return std::find(begin(), end(), p) != end(); }

  /// Index of the first server on p, or -1.
  int index_of(PointId p) const;

  /// Copy with server `index` relocated to p (re-sorted).
  Configuration moved(int index, PointId p) const;

  std::vector<PointId> to_vector() const { return {begin(), end()}; }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
  friend std::strong_ordering operator<=>(const Configuration& a, const Configuration& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::array<PointId, kMaxServers> servers_{};
  std::uint8_t size_ = 0;
};

/// "{0,3}"
std::string to_string(const Configuration& c);

/// Parses "0,3" or "{0,3}".
Configuration parse_configuration(const std::string& text);

}  // namespace bijective
