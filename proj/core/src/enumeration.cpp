#include "bijective/enumeration.hpp"

#include <limits>
#include <random>
#include <thread>

namespace bijective {

std::uint64_t sequence_count(std::size_t alphabet, int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (alphabet != 0 && total > std::numeric_limits<std::uint64_t>::max() / alphabet) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= alphabet;
  }
  return total;
}

namespace {

void check_budget(std::size_t alphabet, int n, std::uint64_t budget) {
  const std::uint64_t count = sequence_count(alphabet, n);
  if (count > budget) {
    throw BudgetExceeded("I_n holds " + std::to_string(count) + " sequences, budget is " + std::to_string(budget),
                         count, budget);
  }
}

CostProfile to_profile(const Rational& unit, const std::unordered_map<Ticks, std::uint64_t>& histogram) {
  std::vector<CostProfile::Run> runs;
  runs.reserve(histogram.size());
  for (const auto& [cost, count] : histogram) runs.push_back({cost, count});
  return CostProfile(unit, std::move(runs));
}

}  // namespace

void enumerate_sequences(std::span<const PointId> alphabet, int n,
                         const std::function<void(std::span<const PointId>)>& visit, std::uint64_t budget) {
  if (n < 0) throw std::invalid_argument("sequence length must be nonnegative");
  check_budget(alphabet.size(), n, budget);
  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  std::vector<PointId> seq(static_cast<std::size_t>(n));
  if (n > 0 && alphabet.empty()) return;
  for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = alphabet[0];
  while (true) {
    visit(seq);
    int i = n - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] + 1 == alphabet.size()) {
      pos[static_cast<std::size_t>(i)] = 0;
      seq[static_cast<std::size_t>(i)] = alphabet[0];
      --i;
    }
    if (i < 0) return;
    const auto u = static_cast<std::size_t>(i);
    seq[u] = alphabet[++pos[u]];
  }
}

CostProfile cost_profile(const Algorithm& alg, const Configuration& c0, int n, const EnumerationOptions& options) {
  const auto alphabet = alg.metric().request_points();
  check_budget(alphabet.size(), n, options.budget);
  const AlgorithmState start = alg.start(c0);
  auto step = [&alg](AlgorithmState& s, PointId r) { return alg.step(s, r); };

  std::unordered_map<Ticks, std::uint64_t> histogram;
  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1 || n == 0) {
    accumulate_costs(alphabet, n, start, step, histogram);
    return to_profile(alg.metric().unit(), histogram);
  }

  // one task per first request, handed out round-robin; merged by a single writer
  std::vector<std::unordered_map<Ticks, std::uint64_t>> partial(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < alphabet.size(); i += workers) {
        AlgorithmState s = start;
        const Ticks first = alg.step(s, alphabet[i]);
        std::unordered_map<Ticks, std::uint64_t> local;
        accumulate_costs(alphabet, n - 1, s, step, local);
        for (const auto& [cost, count] : local) partial[w][cost + first] += count;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& part : partial) {
    for (const auto& [cost, count] : part) histogram[cost] += count;
  }
  return to_profile(alg.metric().unit(), histogram);
}

std::vector<Ticks> sequence_costs(const Algorithm& alg, const Configuration& c0, int n, std::uint64_t budget) {
  std::vector<Ticks> out;
  const AlgorithmState start = alg.start(c0);
  enumerate_sequences(
      alg.metric().request_points(), n,
      [&](std::span<const PointId> seq) {
        AlgorithmState s = start;
        Ticks total = 0;
        for (PointId r : seq) total += alg.step(s, r);
        out.push_back(total);
      },
      budget);
  return out;
}

CostProfile sample_profile(const Algorithm& alg, const Configuration& c0, int n, std::uint64_t samples,
                           std::uint64_t seed, bool exhaustive) {
  if (exhaustive) return cost_profile(alg, c0, n);
  if (samples == 0) throw std::invalid_argument("at least one sample is required");
  const auto alphabet = alg.metric().request_points();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  const AlgorithmState start = alg.start(c0);
  std::unordered_map<Ticks, std::uint64_t> histogram;
  for (std::uint64_t i = 0; i < samples; ++i) {
    AlgorithmState s = start;
    Ticks total = 0;
    for (int j = 0; j < n; ++j) total += alg.step(s, alphabet[pick(rng)]);
    ++histogram[total];
  }
  return to_profile(alg.metric().unit(), histogram);
}

CostProfile anchored_profile(const MetricSpace& metric, const Configuration& anchors, const Configuration& c0,
                             int n) {
  if (n < 0) throw std::invalid_argument("sequence length must be nonnegative");
  std::map<Ticks, UInt128> single;
  for (PointId p : metric.request_points()) single[kcenter_step(metric, anchors, p)] += 1;

  std::map<Ticks, UInt128> total{{0, 1}};
  for (int i = 0; i < n; ++i) {
    std::map<Ticks, UInt128> next;
    for (const auto& [a, ca] : total) {
      for (const auto& [b, cb] : single) next[a + b] += ca * cb;
    }
    total = std::move(next);
  }

  const Ticks shift = n > 0 ? matching_ticks(metric, c0, anchors) : 0;
  std::vector<CostProfile::Run> runs;
  for (const auto& [cost, count] : total) {
    if (count > std::numeric_limits<std::uint64_t>::max()) {
      throw BudgetExceeded("profile multiplicity overflows 64 bits", std::numeric_limits<std::uint64_t>::max(),
                           std::numeric_limits<std::uint64_t>::max());
    }
    runs.push_back({cost + shift, static_cast<std::uint64_t>(count)});
  }
  return CostProfile(metric.unit(), std::move(runs));
}

}  // namespace bijective
