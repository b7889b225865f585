#pragma once

#include <cstddef>

#include "threeway/fuzzy_set.hpp"

namespace threeway {

/// Three-way codebook: reduce to 0, shadow at 0.5, elevate to 1.
enum class Region { Reduce, Shadow, Elevate };

constexpr double codebook_value(Region r) noexcept {
  switch (r) {
    case Region::Reduce: return 0.0;
    case Region::Shadow: return 0.5;
    case Region::Elevate: return 1.0;
  }
  return 0.5;
}

/// Thresholds with 0 <= beta < 0.5 < alpha <= 1.
class ThresholdPair {
 public:
  /// Throws Error(InvalidThresholds) when the ordering is violated.
  ThresholdPair(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

 private:
  double alpha_;
  double beta_;
};

/// Shadowed-set value: 0, the whole unit interval, or 1.
enum class ShadowValue { Zero, Unit, One };

struct RegionErrors {
  double elevated = 0.0;     // sum of 1 - m over m >= alpha
  double reduced = 0.0;      // sum of m over m <= beta
  double shadow = 0.0;       // sum of (1 - m) + m over the shadow band
  double shadow_half = 0.0;  // sum of |m - 0.5| over the shadow band
};

struct RegionCounts {
  std::size_t elevated = 0;
  std::size_t reduced = 0;
  std::size_t shadow = 0;
};

/// One if m >= alpha, Zero if m <= beta, Unit otherwise.
ShadowValue shadow_assign(double m, const ThresholdPair& t) noexcept;

/// Same partition as shadow_assign, with the shadow mapped to 0.5.
Region approx_three_way(double m, const ThresholdPair& t) noexcept;

RegionErrors region_errors(const ScalarFuzzySet& set, const ThresholdPair& t);
RegionCounts region_counts(const ScalarFuzzySet& set, const ThresholdPair& t);

/// |elevated + reduced - card(shadow band)|.
double objective_v(const ScalarFuzzySet& set, const ThresholdPair& t);

/// objective_v with beta = 1 - alpha; alpha must lie in (0.5, 1].
double objective_v_balanced(const ScalarFuzzySet& set, double alpha);

/// Distance from m to the codebook value of its region. Overlap at m == beta
/// goes to the reduce branch.
double per_object_error(double m, const ThresholdPair& t) noexcept;

double total_error(const ScalarFuzzySet& set, const ThresholdPair& t);

struct BalancedOptimum {
  double alpha;
  double v;
};

/// Minimizes objective_v_balanced over a finite breakpoint set.
///
/// The objective is constant between consecutive values of m (for m >= 0.5)
/// and 1 - m (for m < 0.5), so evaluating every breakpoint, its floating-point
/// neighbours, the midpoint of every gap, 0.5 + epsilon and 1 reaches every
/// attainable value. Ties resolve to the smallest alpha.
/// Throws Error(EmptyUniverse) on an empty set.
BalancedOptimum optimize_thresholds_balanced(const ScalarFuzzySet& set, double epsilon = 1e-9);

}  // namespace threeway
