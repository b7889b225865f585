#pragma once

#include <compare>

namespace threeway {

/// Which range check applies when an interval is constructed.
enum class IntervalRole {
  General,     // lo <= hi only
  Membership,  // additionally [lo, hi] within [0, 1]
  Loss,        // additionally lo >= 0
};

/// Closed interval [lo, hi] with lo <= hi. Zero width models a scalar.
class Interval {
 public:
  /// Degenerate interval at 0.
  constexpr Interval() noexcept = default;

  /// Throws Error(InvertedBounds) if lo > hi or a bound is NaN, and
  /// Error(OutOfRange) if the bounds leave the range implied by `role`.
  static Interval make(double lo, double hi, IntervalRole role = IntervalRole::General);

  static Interval point(double x) { return make(x, x); }

  constexpr double lo() const noexcept { return lo_; }
  constexpr double hi() const noexcept { return hi_; }
  constexpr double width() const noexcept { return hi_ - lo_; }
  constexpr bool degenerate() const noexcept { return lo_ == hi_; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;

 private:
  constexpr Interval(double lo, double hi) noexcept : lo_(lo), hi_(hi) {}

  double lo_ = 0.0;
  double hi_ = 0.0;
};

inline Interval make_interval(double lo, double hi, IntervalRole role = IntervalRole::General) {
  return Interval::make(lo, hi, role);
}

/// Interpolation weight between the lower (0) and upper (1) bound.
class Theta {
 public:
  constexpr Theta() noexcept = default;
  /// Throws Error(OutOfRange) unless 0 <= value <= 1.
  explicit Theta(double value);

  constexpr double value() const noexcept { return value_; }

 private:
  double value_ = 0.5;
};

/// Degree in [0, 1] to which one interval is at least another.
class PossibilityDegree {
 public:
  constexpr PossibilityDegree() noexcept = default;
  /// Throws Error(OutOfRange) unless 0 <= value <= 1.
  explicit PossibilityDegree(double value);

  constexpr double value() const noexcept { return value_; }

  friend constexpr auto operator<=>(const PossibilityDegree&, const PossibilityDegree&) = default;

 private:
  double value_ = 0.5;
};

/// (1 - theta) * lo + theta * hi; always within [lo, hi].
double m_theta(const Interval& interval, Theta theta) noexcept;

/// [c * lo, c * hi]. Throws Error(NegativeScale) if c < 0.
Interval scale(const Interval& interval, double c);

/// p(x >= y) = max{1 - max{(y.hi - x.lo) / (width(x) + width(y)), 0}, 0}.
///
/// Two zero-width intervals compare by point order: 1 if x.lo > y.lo,
/// 0.5 if equal, 0 otherwise. This is the limit of shrinking equal-width
/// intervals and keeps p(x >= y) + p(y >= x) = 1.
PossibilityDegree possibility_degree(const Interval& x, const Interval& y) noexcept;

}  // namespace threeway
