#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "threeway/dtrs.hpp"
#include "threeway/interval.hpp"
#include "threeway/shadowed.hpp"

namespace threeway {

/// High: m >= 0.5, the shadow action reduces to 0.5. Low: m < 0.5, it elevates.
enum class Situation { High, Low };

std::string_view to_string(Situation s) noexcept;

/// Interval risks of elevate, reduce and the applicable shadow action.
struct RiskIntervals {
  Interval r_e;
  Interval r_r;
  Interval r_s;
  Situation situation;
};

/// Row/column order of the preference matrix.
enum PreferenceIndex : std::size_t { kE = 0, kR = 1, kS = 2 };

/// Complementary 3x3 matrix p[i][j] = p(risk_i >= risk_j).
///
/// Diagonal entries are exactly 0.5 and p[j][i] == 1 - p[i][j] exactly.
/// Entries are kept on the dyadic grid 2^-50 so that the complement and
/// every row sum are exact in binary floating point.
class PreferenceMatrix {
 public:
  /// Builds the matrix from the upper-triangle degrees (e>=r, e>=s, r>=s).
  PreferenceMatrix(double p_er, double p_es, double p_rs);

  double operator()(std::size_t row, std::size_t col) const { return p_.at(row).at(col).value(); }
  const std::array<std::array<PossibilityDegree, 3>, 3>& entries() const noexcept { return p_; }

  friend bool operator==(const PreferenceMatrix&, const PreferenceMatrix&) = default;

 private:
  std::array<std::array<PossibilityDegree, 3>, 3> p_;
};

/// Row sums; p_e + p_r + p_s == 4.5.
struct PreferenceTotals {
  double p_e;
  double p_r;
  double p_s;
};

/// I: p == 0, II: 0 < p < 1, III: p == 1.
enum class Regime { I, II, III };

std::string_view to_string(Regime r) noexcept;

struct RegimeTriple {
  Regime er;
  Regime es;
  Regime rs;

  friend bool operator==(const RegimeTriple&, const RegimeTriple&) = default;
};

/// Subset of {0, 0.5, 1}.
class OutcomeSet {
 public:
  constexpr OutcomeSet() noexcept = default;
  constexpr OutcomeSet(std::initializer_list<Region> regions) noexcept {
    for (Region r : regions) bits_ |= bit(r);
  }

  constexpr bool contains(Region r) const noexcept { return (bits_ & bit(r)) != 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>((bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1));
  }
  /// e.g. "1 or 0.5 or 0", listed from elevate down.
  std::string describe() const;

  friend constexpr bool operator==(OutcomeSet, OutcomeSet) = default;

 private:
  static constexpr unsigned bit(Region r) noexcept { return 1u << static_cast<unsigned>(r); }
  unsigned bits_ = 0;
};

/// Risk intervals scaled from the interval losses by each action's error.
RiskIntervals risk_intervals(double m, const IntervalLossProfile& p);

PreferenceMatrix preference_matrix(const RiskIntervals& r);

/// Row sums of the matrix.
PreferenceTotals preference_totals(const PreferenceMatrix& p) noexcept;

/// Regime of p_er, p_es and p_rs by exact comparison against 0 and 1.
RegimeTriple classify_regimes(const PreferenceMatrix& p) noexcept;
RegimeTriple classify_regimes(const RiskIntervals& r);

/// Outcomes the regime table admits for a triple (same table for both
/// situations). Row number is 1-based: 9 * er + 3 * es + rs + 1.
OutcomeSet allowed_outcomes(const RegimeTriple& rt) noexcept;
std::size_t regime_row(const RegimeTriple& rt) noexcept;

/// Table row that no three interval risks can produce; consistency checks skip it.
constexpr RegimeTriple kErratumRow{Regime::III, Regime::I, Regime::III};

/// Action with the smallest total preference. Ties: elevate, reduce, shadow.
Region decide_from_totals(const PreferenceTotals& t) noexcept;

Region decide_possibility(double m, const IntervalLossProfile& p);

/// Every intermediate of the possibility pipeline for one grade.
struct PossibilityTrace {
  RiskIntervals risks;
  PreferenceMatrix matrix;
  PreferenceTotals totals;
  RegimeTriple regimes;
  Region decision;
};

PossibilityTrace trace_possibility(double m, const IntervalLossProfile& p);

}  // namespace threeway
