#pragma once

// Comparison measures between two cost profiles over the same I_n.
//
// Profiles are matched rank by rank; the sorted matching minimises both the
// worst ratio and every additive constant c(rho) over all bijections.
// Zero convention: a matched pair (0, 0) has ratio 1 and (a > 0, 0) has
// ratio +infinity.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bijective/enumeration.hpp"
#include "bijective/ordered_bijection.hpp"
#include "bijective/profile.hpp"

namespace bijective {

enum class Dominance { a_dominates, b_dominates, equal, incomparable };

std::string to_string(Dominance d);

struct CurvePoint {
  Rational rho;
  Rational c;
};

struct ComparisonReport {
  Ratio strict_rho;
  std::uint64_t witness_index = 0;  // first rank attaining strict_rho
  std::vector<CurvePoint> asymptotic_curve;
  Dominance dominance = Dominance::equal;
  std::optional<Rational> maxmax;   // unset when max(B) = 0
  std::optional<Rational> average;  // unset when sum(B) = 0
  std::uint64_t size = 0;
};

/// Throws std::invalid_argument when the profiles differ in length.
ComparisonReport bijective_ratio(const CostProfile& a, const CostProfile& b, std::span<const Rational> rhos = {});

Ratio strict_ratio(const CostProfile& a, const CostProfile& b, std::uint64_t* witness = nullptr);

/// c(rho) = max_i (A_i - rho * B_i).
Rational asymptotic_constant(const CostProfile& a, const CostProfile& b, const Rational& rho);

Dominance stochastic_dominance(const CostProfile& a, const CostProfile& b);

/// A_i <= B_i at every rank.
bool dominates(const CostProfile& a, const CostProfile& b);

struct ScalarRatios {
  std::optional<Rational> maxmax;
  std::optional<Rational> average;
};

ScalarRatios scalar_ratios(const CostProfile& a, const CostProfile& b);

/// |{A < rho c}| < |{B <= c}|: any bijection then has some sequence with
/// A(s) >= rho B(pi(s)).
bool lower_bound_certificate(const CostProfile& a, const CostProfile& b, const Rational& c, const Rational& rho);

struct Certificate {
  Rational rho;
  Rational c;
};

/// Largest rho the counting certificate proves, with the cost c achieving it
/// (smallest such c). Unset when no positive cost of B certifies anything
/// above zero.
std::optional<Certificate> certified_rho(const CostProfile& a, const CostProfile& b);

enum class PotentialKind { none, line, star };

std::string to_string(PotentialKind p);

/// -alpha times the sum of gaps between adjacent servers.
Rational potential_line(const MetricSpace& metric, const Configuration& c, const Rational& alpha);
/// Sum of server distances to the centre.
Rational potential_star(const MetricSpace& metric, const Configuration& c);

struct DecouplingOptions {
  Rational d{1};
  Rational c{1};  // for `line` it is derived from c1 and c2
  PotentialKind potential = PotentialKind::none;
  Rational c1{1};
  Rational c2{1};
  ObReading reading = ObReading::symmetric;
  std::uint64_t budget = kDefaultSequenceBudget;
  std::size_t max_witnesses = 16;
};

struct DecouplingViolation {
  std::vector<PointId> sigma;
  int step = 0;
  int condition = 1;
  Rational lhs;
  Rational rhs;
};

struct DecouplingReport {
  std::uint64_t sequences = 0;
  std::uint64_t checks = 0;
  std::uint64_t violations_i = 0;
  std::uint64_t violations_ii = 0;
  Rational alpha{0};
  Rational c{0};
  Rational bound;  // multiplier the conditions yield: c (no potential) or c * d
  std::vector<DecouplingViolation> witnesses;

  bool holds() const { return violations_i == 0 && violations_ii == 0; }
};

/// Checks the per-request decoupling conditions over all of I_n.
/// (i) A(s[i] | B(s[1,i-1])) <= d B(s[i]);
/// (ii) without a potential: A(s[i]) - A(p[i] | B(p[1,i-1])) <= (c - d) B(p[i]);
///      with a potential:    A(s[i]) + dPhi_i <= c A(p[i] | B(p[1,i-1])),
/// where p is the ordered-bijection image of s and Phi is evaluated on A.
DecouplingReport decoupling_check(const Algorithm& a, const Algorithm& b, const Configuration& c0, int n,
                                  const DecouplingOptions& options);

}  // namespace bijective
