#include "threeway/shadowed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "threeway/error.hpp"

namespace threeway {

ThresholdPair::ThresholdPair(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(beta >= 0.0 && beta < 0.5 && 0.5 < alpha && alpha <= 1.0)) {
    throw Error(ErrorKind::InvalidThresholds, "thresholds must satisfy 0 <= beta < 0.5 < alpha <= 1");
  }
}

ShadowValue shadow_assign(double m, const ThresholdPair& t) noexcept {
  if (m >= t.alpha()) return ShadowValue::One;
  if (m <= t.beta()) return ShadowValue::Zero;
  return ShadowValue::Unit;
}

Region approx_three_way(double m, const ThresholdPair& t) noexcept {
  switch (shadow_assign(m, t)) {
    case ShadowValue::One: return Region::Elevate;
    case ShadowValue::Zero: return Region::Reduce;
    case ShadowValue::Unit: break;
  }
  return Region::Shadow;
}

RegionErrors region_errors(const ScalarFuzzySet& set, const ThresholdPair& t) {
  RegionErrors e;
  for (const auto& [id, m] : set) {
    switch (shadow_assign(m, t)) {
      case ShadowValue::One:
        e.elevated += 1.0 - m;
        break;
      case ShadowValue::Zero:
        e.reduced += m;
        break;
      case ShadowValue::Unit:
        // (1 - m) + m rounds to exactly 1 for every m in [0, 1].
        e.shadow += (1.0 - m) + m;
        e.shadow_half += m > 0.5 ? m - 0.5 : 0.5 - m;
        break;
    }
  }
  return e;
}

RegionCounts region_counts(const ScalarFuzzySet& set, const ThresholdPair& t) {
  RegionCounts c;
  for (const auto& [id, m] : set) {
    switch (shadow_assign(m, t)) {
      case ShadowValue::One: ++c.elevated; break;
      case ShadowValue::Zero: ++c.reduced; break;
      case ShadowValue::Unit: ++c.shadow; break;
    }
  }
  return c;
}

double objective_v(const ScalarFuzzySet& set, const ThresholdPair& t) {
  const RegionErrors e = region_errors(set, t);
  return std::abs(e.elevated + e.reduced - e.shadow);
}

double objective_v_balanced(const ScalarFuzzySet& set, double alpha) {
  return objective_v(set, ThresholdPair(alpha, 1.0 - alpha));
}

double per_object_error(double m, const ThresholdPair& t) noexcept {
  if (m >= t.alpha()) return 1.0 - m;
  if (m <= t.beta()) return m;
  if (m <= 0.5) return 0.5 - m;
  return m - 0.5;
}

double total_error(const ScalarFuzzySet& set, const ThresholdPair& t) {
  double sum = 0.0;
  for (const auto& [id, m] : set) sum += per_object_error(m, t);
  return sum;
}

BalancedOptimum optimize_thresholds_balanced(const ScalarFuzzySet& set, double epsilon) {
  if (set.empty()) {
    throw Error(ErrorKind::EmptyUniverse, "cannot optimize thresholds over an empty universe");
  }
  const auto admissible = [](double a) { return a > 0.5 && a <= 1.0; };

  std::vector<double> breakpoints;
  breakpoints.reserve(3 * set.size() + 1);
  for (const auto& [id, m] : set) {
    const double b = m >= 0.5 ? m : 1.0 - m;
    // 1 - m is inexact for small m; the true switch point may sit an ulp away.
    for (double c : {b, std::nextafter(b, 0.0), std::nextafter(b, 2.0)}) {
      if (admissible(c)) breakpoints.push_back(c);
    }
  }
  breakpoints.push_back(1.0);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  std::vector<double> candidates = breakpoints;
  candidates.push_back(0.5 + (breakpoints.front() - 0.5) / 2.0);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    candidates.push_back(breakpoints[i] + (breakpoints[i + 1] - breakpoints[i]) / 2.0);
  }
  if (admissible(0.5 + epsilon)) candidates.push_back(0.5 + epsilon);
  std::erase_if(candidates, [&](double c) { return !admissible(c); });
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Prefix sums over the sorted grades give every candidate's objective in
  // O(log n). They round differently from the universe-order sums, so the
  // near-optimal candidates are rescored with objective_v_balanced.
  std::vector<double> sorted;
  sorted.reserve(set.size());
  for (const auto& [id, m] : set) sorted.push_back(m);
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> below(sorted.size() + 1, 0.0), above(sorted.size() + 1, 0.0);
  for (std::size_t i = 0; i < sorted.size(); ++i) below[i + 1] = below[i] + sorted[i];
  for (std::size_t i = sorted.size(); i-- > 0;) above[i] = above[i + 1] + (1.0 - sorted[i]);

  std::vector<double> fast(candidates.size());
  double fast_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double alpha = candidates[i], beta = 1.0 - alpha;
    const auto e = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), alpha) - sorted.begin());
    const auto r = static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), beta) - sorted.begin());
    fast[i] = std::abs(above[e] + below[r] - static_cast<double>(e - r));
    fast_min = std::min(fast_min, fast[i]);
  }

  const double slack = 1e-9 * static_cast<double>(sorted.size() + 1);
  BalancedOptimum best{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (fast[i] > fast_min + slack) continue;
    const double v = objective_v_balanced(set, candidates[i]);
    if (v < best.v) best = {candidates[i], v};
  }
  return best;
}

}  // namespace threeway
