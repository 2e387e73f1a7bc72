#include "bijective/profile.hpp"

#include <algorithm>
#include <stdexcept>

namespace bijective {

CostProfile::CostProfile(Rational unit, std::vector<Run> runs) : unit_(std::move(unit)) {
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.cost < b.cost; });
  for (const Run& r : runs) {
    if (r.count == 0) continue;
    if (!runs_.empty() && runs_.back().cost == r.cost) {
      runs_.back().count += r.count;
    } else {
      runs_.push_back(r);
    }
    size_ += r.count;
  }
}

CostProfile CostProfile::from_costs(Rational unit, std::vector<Ticks> costs) {
  std::vector<Run> runs;
  runs.reserve(costs.size());
  for (Ticks c : costs) runs.push_back(Run{c, 1});
  return CostProfile(std::move(unit), std::move(runs));
}

CostProfile CostProfile::from_histogram(Rational unit, const std::map<Ticks, std::uint64_t>& histogram) {
  std::vector<Run> runs;
  runs.reserve(histogram.size());
  for (const auto& [cost, count] : histogram) runs.push_back(Run{cost, count});
  return CostProfile(std::move(unit), std::move(runs));
}

Ticks CostProfile::ticks_at(std::uint64_t rank) const {
  if (rank >= size_) throw std::out_of_range("profile rank out of range");
  for (const Run& r : runs_) {
    if (rank < r.count) return r.cost;
    rank -= r.count;
  }
  return runs_.back().cost;
}

Rational CostProfile::min() const {
  if (empty()) throw std::logic_error("empty profile");
  return ticks_to_length(runs_.front().cost, unit_);
}

Rational CostProfile::max() const {
  if (empty()) throw std::logic_error("empty profile");
  return ticks_to_length(runs_.back().cost, unit_);
}

BigInt CostProfile::sum_ticks() const {
  BigInt total = 0;
  for (const Run& r : runs_) total += BigInt(r.cost) * BigInt(r.count);
  return total;
}

Rational CostProfile::mean() const {
  if (empty()) throw std::logic_error("empty profile");
  return sum() / Rational(BigInt(size_));
}

std::uint64_t CostProfile::count_at_most(Ticks t) const {
  std::uint64_t n = 0;
  for (const Run& r : runs_) {
    if (r.cost > t) break;
    n += r.count;
  }
  return n;
}

std::uint64_t CostProfile::count_below(Ticks t) const {
  std::uint64_t n = 0;
  for (const Run& r : runs_) {
    if (r.cost >= t) break;
    n += r.count;
  }
  return n;
}

std::vector<Ticks> CostProfile::expand(std::uint64_t limit) const {
  if (size_ > limit) throw std::length_error("profile too large to expand");
  std::vector<Ticks> out;
  out.reserve(size_);
  for (const Run& r : runs_) out.insert(out.end(), r.count, r.cost);
  return out;
}

std::vector<Rational> CostProfile::costs(std::uint64_t limit) const {
  if (size_ > limit) throw std::length_error("profile too large to expand");
  std::vector<Rational> out;
  out.reserve(size_);
  for (const Run& r : runs_) out.insert(out.end(), r.count, ticks_to_length(r.cost, unit_));
  return out;
}

CostProfile CostProfile::rescaled(const Rational& unit) const {
  const Rational factor = unit_ / unit;
  if (boost::multiprecision::denominator(factor) != 1) {
    throw std::invalid_argument("profile unit is not a multiple of the target unit");
  }
  const Ticks f = boost::multiprecision::numerator(factor).convert_to<Ticks>();
  std::vector<Run> runs = runs_;
  for (Run& r : runs) r.cost *= f;
  return CostProfile(unit, std::move(runs));
}

CostProfile CostProfile::shifted(Ticks shift) const {
  std::vector<Run> runs = runs_;
  for (Run& r : runs) r.cost += shift;
  return CostProfile(unit_, std::move(runs));
}

Rational common_unit(const Rational& a, const Rational& b) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const BigInt den = boost::multiprecision::lcm(denominator(a), denominator(b));
  const BigInt num = boost::multiprecision::gcd(numerator(a) * (den / denominator(a)),
                                                numerator(b) * (den / denominator(b)));
  return Rational(num, den);
}

}  // namespace bijective
