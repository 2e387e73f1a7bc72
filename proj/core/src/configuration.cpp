#include "bijective/configuration.hpp"

#include <sstream>
#include <stdexcept>

namespace bijective {

Configuration::Configuration(std::initializer_list<PointId> servers)
    : Configuration(std::span<const PointId>(servers.begin(), servers.size())) {}

Configuration::Configuration(std::span<const PointId> servers) {
  if (servers.size() > static_cast<std::size_t>(kMaxServers)) {
    throw std::invalid_argument("at most " + std::to_string(kMaxServers) + " servers are supported");
  }
  size_ = static_cast<std::uint8_t>(servers.size());
  std::copy(servers.begin(), servers.end(), servers_.begin());
  std::sort(servers_.begin(), servers_.begin() + size_);
}

int Configuration::index_of(PointId p) const {
  for (int i = 0; i < size_; ++i) {
    if (servers_[static_cast<std::size_t>(i)] == p) return i;
  }
  return -1;
}

Configuration Configuration::moved(int index, PointId p) const {
  Configuration out = *this;
  auto& s = out.servers_;
  std::size_t i = static_cast<std::size_t>(index);
  s[i] = p;
  // single out-of-place element: bubble it into position
  while (i > 0 && s[i - 1] > s[i]) {
    std::swap(s[i - 1], s[i]);
    --i;
  }
  while (i + 1 < size_ && s[i] > s[i + 1]) {
    std::swap(s[i], s[i + 1]);
    ++i;
  }
  return out;
}

std::string to_string(const Configuration& c) {
  std::string out = "{";
  for (int i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "}";
}

Configuration parse_configuration(const std::string& text) {
  std::vector<PointId> points;
  std::string cleaned;
  for (char ch : text) {
    if (ch == '{' || ch == '}' || ch == '[' || ch == ']') continue;
    cleaned += ch == ',' ? ' ' : ch;
  }
  std::istringstream in(cleaned);
  long long v;
  while (in >> v) points.push_back(static_cast<PointId>(v));
  if (!in.eof()) throw std::invalid_argument("malformed configuration: '" + text + "'");
  return Configuration(points);
}

}  // namespace bijective
