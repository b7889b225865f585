#pragma once

// Brute-force verifiers for the closed-form and optimizing code paths.
//
// Nothing here calls the threshold formulas, the breakpoint optimizer or the
// row-sum machinery to compute an expected value; risks and possibility
// degrees are re-evaluated literally from their definitions. The suites do
// call the engines, but only as the system under test.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "threeway/dtrs.hpp"
#include "threeway/fuzzy_set.hpp"
#include "threeway/shadowed.hpp"

namespace threeway::oracle {

/// `points` equally spaced values from lo to hi inclusive.
class GridSpec {
 public:
  /// Throws Error(OutOfRange) unless points >= 2 and lo < hi.
  explicit GridSpec(std::size_t points = 1001, double lo = 0.0, double hi = 1.0);

  std::size_t points() const noexcept { return points_; }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double step() const noexcept { return (hi_ - lo_) / static_cast<double>(points_ - 1); }
  double at(std::size_t i) const noexcept;

 private:
  std::size_t points_;
  double lo_;
  double hi_;
};

/// Literal argmin of the applicable risks with ties elevate, reduce, shadow.
/// Throws Error(ConditionViolation) if the profile breaks c1-c3.
Region brute_force_decide(double m, const LossProfile& p);

struct ScanBoundaries {
  double alpha_hat;  // smallest grid m >= 0.5 decided as elevate
  double beta_hat;   // largest grid m < 0.5 decided as reduce
};

ScanBoundaries threshold_scan(const LossProfile& p, const GridSpec& grid = GridSpec());

struct ScanOptimum {
  double alpha_star;
  double v_star;
};

/// Balanced objective on every grid alpha in (0.5, 1]; smallest alpha wins
/// ties. Throws Error(EmptyUniverse).
ScanOptimum exhaustive_v_scan(const ScalarFuzzySet& set, const GridSpec& grid = GridSpec(10000, 0.5, 1.0));

/// p(x >= y) evaluated from the three-case piecewise form.
double reference_possibility(const Interval& x, const Interval& y) noexcept;

/// Deterministic generator; uniform draws use the top 53 bits directly so
/// sequences do not depend on the standard library's distributions.
class CaseGenerator {
 public:
  explicit CaseGenerator(std::uint64_t seed) : engine_(seed) {}

  double unit();                              // [0, 1)
  double uniform(double lo, double hi);       // [lo, hi)
  double positive(double hi);                 // (0, hi]
  std::size_t index(std::size_t n);           // [0, n)
  bool chance(double p) { return unit() < p; }

  /// c1-c3 hold; equality cases of c2/c3 are drawn now and then.
  LossProfile valid_profile();
  /// Lower bounds in (0, 10], widths in [0, 5] (zero now and then).
  IntervalLossProfile interval_profile();
  /// One of 101 grid points i / 100.
  double grid_grade() { return static_cast<double>(index(101)) / 100.0; }

 private:
  std::mt19937_64 engine_;
};

struct Violation {
  std::string check;
  std::string detail;

  friend bool operator<(const Violation& a, const Violation& b) {
    return a.check != b.check ? a.check < b.check : a.detail < b.detail;
  }
};

/// Counts and violations of one suite. Violations are sorted so reports do
/// not depend on evaluation order.
struct SuiteReport {
  std::string name;
  std::map<std::string, std::size_t> counters;
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  void count(const std::string& key, std::size_t n = 1) { counters[key] += n; }
  void fail(std::string check, std::string detail);
  void finalize();
};

/// Closed-form decisions against brute_force_decide on n_profiles random
/// valid profiles times the grid, skipping points within `boundary` of a
/// threshold; threshold_scan must land within one step of alpha and beta.
SuiteReport closed_form_suite(std::uint64_t seed, std::size_t n_profiles = 100,
                              const GridSpec& grid = GridSpec(), double boundary = 1e-9);

/// Range, infeasibility and scale-invariance checks on derived thresholds.
SuiteReport threshold_invariant_suite(std::uint64_t seed, std::size_t n_profiles = 10000);

/// Matrix invariants, regime-table consistency (erratum row excluded),
/// degenerate dominance, the degenerate-loss bridge to the scalar pipeline
/// and the two worked examples as fixed cases.
SuiteReport possibility_consistency_suite(std::uint64_t seed = 42, std::size_t n_cases = 10000);

/// Breakpoint optimizer against exhaustive_v_scan plus the shadow-balance
/// identity on random datasets of at most max_objects objects.
SuiteReport optimizer_suite(std::uint64_t seed, std::size_t n_datasets = 50, std::size_t max_objects = 100,
                            std::size_t scan_points = 10000);

}  // namespace threeway::oracle
