#include "threeway/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "threeway/error.hpp"
#include "threeway/possibility.hpp"

namespace threeway::oracle {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string fmt(const Interval& iv) { return "[" + fmt(iv.lo()) + "," + fmt(iv.hi()) + "]"; }

std::string fmt(const LossProfile& p) {
  return "(" + fmt(p.lambda_e) + "," + fmt(p.lambda_r) + "," + fmt(p.lambda_sd) + "," + fmt(p.lambda_su) + ")";
}

std::string fmt(const IntervalLossProfile& p) {
  return "(" + fmt(p.lambda_e()) + "," + fmt(p.lambda_r()) + "," + fmt(p.lambda_sd()) + "," +
         fmt(p.lambda_su()) + ")";
}

std::string fmt(const PreferenceMatrix& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < 3; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < 3; ++j) out += (j ? "," : "") + fmt(p(i, j));
    out += "]";
  }
  return out + "]";
}

double codebook(Region r) { return codebook_value(r); }

// Balanced objective straight from the definition.
double literal_v(const ScalarFuzzySet& set, double alpha) {
  const double beta = 1.0 - alpha;
  double elevated = 0.0, reduced = 0.0, card = 0.0;
  for (const auto& [id, m] : set) {
    if (m >= alpha) {
      elevated += 1.0 - m;
    } else if (m <= beta) {
      reduced += m;
    } else {
      card += 1.0;
    }
  }
  return std::abs(elevated + reduced - card);
}

}  // namespace

GridSpec::GridSpec(std::size_t points, double lo, double hi) : points_(points), lo_(lo), hi_(hi) {
  if (points < 2 || !(lo < hi)) {
    throw Error(ErrorKind::OutOfRange, "grid needs at least two points and lo < hi");
  }
}

double GridSpec::at(std::size_t i) const noexcept {
  if (i + 1 == points_) return hi_;
  return lo_ + (hi_ - lo_) * static_cast<double>(i) / static_cast<double>(points_ - 1);
}

Region brute_force_decide(double m, const LossProfile& p) {
  if (!(p.lambda_e > 0 && p.lambda_r > 0 && p.lambda_sd > 0 && p.lambda_su > 0)) {
    throw Error(ErrorKind::ConditionViolation, "c1: losses must be positive");
  }
  if (p.lambda_sd > p.lambda_r) throw Error(ErrorKind::ConditionViolation, "c2: lambda_sd > lambda_r");
  if (p.lambda_su > p.lambda_e) throw Error(ErrorKind::ConditionViolation, "c3: lambda_su > lambda_e");

  const double r_e = (1.0 - m) * p.lambda_e;
  const double r_r = m * p.lambda_r;
  const double r_s = m >= 0.5 ? (m - 0.5) * p.lambda_sd : (0.5 - m) * p.lambda_su;

  // Candidates in tie-break order; the first strict improvement wins.
  const std::pair<double, Region> options[] = {
      {r_e, Region::Elevate}, {r_r, Region::Reduce}, {r_s, Region::Shadow}};
  auto best = options[0];
  for (const auto& o : options) {
    if (o.first < best.first) best = o;
  }
  return best.second;
}

ScanBoundaries threshold_scan(const LossProfile& p, const GridSpec& grid) {
  ScanBoundaries out{1.0, 0.0};
  bool found_alpha = false;
  for (std::size_t i = 0; i < grid.points(); ++i) {
    const double m = grid.at(i);
    const Region d = brute_force_decide(m, p);
    if (m >= 0.5 && d == Region::Elevate && !found_alpha) {
      out.alpha_hat = m;
      found_alpha = true;
    }
    if (m < 0.5 && d == Region::Reduce) out.beta_hat = m;
  }
  return out;
}

ScanOptimum exhaustive_v_scan(const ScalarFuzzySet& set, const GridSpec& grid) {
  if (set.empty()) throw Error(ErrorKind::EmptyUniverse, "cannot scan an empty universe");
  ScanOptimum best{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < grid.points(); ++i) {
    const double alpha = grid.at(i);
    if (!(alpha > 0.5 && alpha <= 1.0)) continue;
    const double v = literal_v(set, alpha);
    if (v < best.v_star) best = {alpha, v};
  }
  return best;
}

double reference_possibility(const Interval& x, const Interval& y) noexcept {
  const double denom = (x.hi() - x.lo()) + (y.hi() - y.lo());
  if (denom == 0.0) return x.lo() > y.lo() ? 1.0 : (x.lo() == y.lo() ? 0.5 : 0.0);
  const double ratio = (y.hi() - x.lo()) / denom;
  if (ratio >= 1.0) return 0.0;
  if (ratio <= 0.0) return 1.0;
  return 1.0 - ratio;
}

double CaseGenerator::unit() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

double CaseGenerator::uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

double CaseGenerator::positive(double hi) { return hi * (1.0 - unit()); }

std::size_t CaseGenerator::index(std::size_t n) {
  return std::min(static_cast<std::size_t>(unit() * static_cast<double>(n)), n - 1);
}

LossProfile CaseGenerator::valid_profile() {
  LossProfile p{};
  p.lambda_e = positive(10.0);
  p.lambda_r = positive(10.0);
  p.lambda_sd = chance(0.1) ? p.lambda_r : p.lambda_r * (1.0 - unit());
  p.lambda_su = chance(0.1) ? p.lambda_e : p.lambda_e * (1.0 - unit());
  return p;
}

IntervalLossProfile CaseGenerator::interval_profile() {
  auto draw = [this] {
    const double lo = positive(10.0);
    const double width = chance(0.1) ? 0.0 : uniform(0.0, 5.0);
    return Interval::make(lo, lo + width, IntervalRole::Loss);
  };
  const Interval e = draw(), r = draw(), sd = draw(), su = draw();
  return IntervalLossProfile(e, r, sd, su);
}

void SuiteReport::fail(std::string check, std::string detail) {
  violations.push_back({std::move(check), std::move(detail)});
}

void SuiteReport::finalize() { std::sort(violations.begin(), violations.end()); }

SuiteReport closed_form_suite(std::uint64_t seed, std::size_t n_profiles, const GridSpec& grid,
                              double boundary) {
  SuiteReport report{"closed_form", {}, {}};
  CaseGenerator gen(seed);
  for (std::size_t k = 0; k < n_profiles; ++k) {
    const LossProfile p = gen.valid_profile();
    const DerivedThresholds t = thresholds_from_losses(p);
    report.count("profiles");
    for (std::size_t i = 0; i < grid.points(); ++i) {
      const double m = grid.at(i);
      if (std::abs(m - t.alpha) <= boundary || std::abs(m - t.beta) <= boundary) {
        report.count("boundary_points_skipped");
        continue;
      }
      report.count("points_checked");
      const Region closed = decide(m, t);
      const Region brute = brute_force_decide(m, p);
      if (closed != brute) {
        report.fail("decide_vs_brute_force", "profile=" + fmt(p) + " m=" + fmt(m) + " closed=" +
                                                 fmt(codebook(closed)) + " brute=" + fmt(codebook(brute)));
      }
    }
    const ScanBoundaries scan = threshold_scan(p, grid);
    const double step = grid.step();
    report.count("scans");
    if (!(scan.alpha_hat >= t.alpha && scan.alpha_hat - t.alpha < step + 1e-12)) {
      report.fail("alpha_scan", "profile=" + fmt(p) + " alpha=" + fmt(t.alpha) + " alpha_hat=" + fmt(scan.alpha_hat));
    }
    if (!(scan.beta_hat <= t.beta && t.beta - scan.beta_hat < step + 1e-12)) {
      report.fail("beta_scan", "profile=" + fmt(p) + " beta=" + fmt(t.beta) + " beta_hat=" + fmt(scan.beta_hat));
    }
  }
  report.finalize();
  return report;
}

SuiteReport threshold_invariant_suite(std::uint64_t seed, std::size_t n_profiles) {
  SuiteReport report{"threshold_invariants", {}, {}};
  CaseGenerator gen(seed);
  const auto close = [](double a, double b) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::abs(a - b) <= 1e-12;
  };
  for (std::size_t k = 0; k < n_profiles; ++k) {
    const LossProfile p = gen.valid_profile();
    const DerivedThresholds t = thresholds_from_losses(p);
    report.count("profiles");
    if (std::isinf(t.gamma_minus)) report.count("gamma_minus_infinite");
    if (std::isinf(t.gamma_plus)) report.count("gamma_plus_infinite");
    if (!(t.alpha > 0.5 && t.alpha < 1.0)) report.fail("alpha_range", fmt(p) + " alpha=" + fmt(t.alpha));
    if (!(t.beta > 0.0 && t.beta < 0.5)) report.fail("beta_range", fmt(p) + " beta=" + fmt(t.beta));
    if (!(t.gamma_minus <= 0.0)) report.fail("gamma_minus", fmt(p) + " gamma_minus=" + fmt(t.gamma_minus));
    if (!(t.gamma_plus >= 1.0)) report.fail("gamma_plus", fmt(p) + " gamma_plus=" + fmt(t.gamma_plus));
    for (double c : {0.1, 10.0}) {
      const LossProfile scaled{c * p.lambda_e, c * p.lambda_r, c * p.lambda_sd, c * p.lambda_su};
      const DerivedThresholds s = thresholds_from_losses(scaled);
      if (!(close(s.alpha, t.alpha) && close(s.beta, t.beta) && close(s.gamma, t.gamma))) {
        report.fail("scale_invariance", fmt(p) + " c=" + fmt(c));
      }
      // The unbounded thresholds amplify input rounding by their condition
      // number, so they get a relative tolerance scaled by it.
      const double kappa_minus = (p.lambda_r + p.lambda_sd) / (p.lambda_r - p.lambda_sd);
      const double kappa_plus = (p.lambda_e + p.lambda_su) / (p.lambda_e - p.lambda_su);
      const auto close_cond = [](double a, double b, double kappa) {
        if (std::isinf(a) || std::isinf(b)) return a == b;
        return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)) * std::max(1.0, kappa);
      };
      if (!close(s.gamma_minus, t.gamma_minus) || !close(s.gamma_plus, t.gamma_plus)) {
        report.count("gamma_outside_absolute_tolerance");
      }
      if (!(close_cond(s.gamma_minus, t.gamma_minus, kappa_minus) &&
            close_cond(s.gamma_plus, t.gamma_plus, kappa_plus))) {
        report.fail("scale_invariance_gamma", fmt(p) + " c=" + fmt(c));
      }
    }
  }
  report.finalize();
  return report;
}

namespace {

void check_possibility_case(SuiteReport& report, double m, const IntervalLossProfile& p) {
  const PossibilityTrace tr = trace_possibility(m, p);
  const Interval* risk[] = {&tr.risks.r_e, &tr.risks.r_r, &tr.risks.r_s};
  const auto repro = [&] {
    return "m=" + fmt(m) + " losses=" + fmt(p) + " matrix=" + fmt(tr.matrix) +
           " decision=" + fmt(codebook(tr.decision));
  };

  report.count("cases");
  for (std::size_t i = 0; i < 3; ++i) {
    if (tr.matrix(i, i) != 0.5) report.fail("diagonal", repro());
    for (std::size_t j = i + 1; j < 3; ++j) {
      report.count("pairs");
      if (tr.matrix(j, i) != 1.0 - tr.matrix(i, j)) report.fail("matrix_complement", repro());
      const double forward = possibility_degree(*risk[i], *risk[j]).value();
      const double backward = possibility_degree(*risk[j], *risk[i]).value();
      if (std::abs(forward + backward - 1.0) > 1e-12) report.fail("degree_complement", repro());
      if (std::abs(tr.matrix(i, j) - reference_possibility(*risk[i], *risk[j])) > 1e-12) {
        report.fail("degree_vs_reference", repro());
      }
    }
  }
  if (tr.totals.p_e + tr.totals.p_r + tr.totals.p_s != 4.5) report.fail("totals_sum", repro());

  if (tr.regimes == kErratumRow) {
    report.count("erratum_row_skipped");
  } else {
    report.count("table_checks");
    if (!allowed_outcomes(tr.regimes).contains(tr.decision)) {
      report.fail("regime_table", "row=" + std::to_string(regime_row(tr.regimes)) + " " + repro());
    }
  }

  const Region regions[] = {Region::Elevate, Region::Reduce, Region::Shadow};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t a = (i + 1) % 3, b = (i + 2) % 3;
    if (risk[i]->hi() < risk[a]->lo() && risk[i]->hi() < risk[b]->lo()) {
      report.count("dominance_checks");
      if (tr.decision != regions[i]) report.fail("degenerate_dominance", repro());
    }
  }
}

}  // namespace

SuiteReport possibility_consistency_suite(std::uint64_t seed, std::size_t n_cases) {
  SuiteReport report{"possibility_consistency", {}, {}};

  // Worked examples: x2 (m = 0.7) and x3 (m = 0.4).
  struct Fixed {
    const char* name;
    double m;
    IntervalLossProfile losses;
    Region expected;
  };
  const Fixed fixed[] = {
      {"example_high", 0.7,
       IntervalLossProfile(Interval::make(1, 2), Interval::make(5, 6), Interval::make(3, 4), Interval::make(3, 4)),
       Region::Elevate},
      {"example_low", 0.4,
       IntervalLossProfile(Interval::make(5, 6), Interval::make(1, 2), Interval::make(1, 2), Interval::make(3, 4)),
       Region::Shadow},
  };
  for (const auto& f : fixed) {
    report.count("fixed_cases");
    check_possibility_case(report, f.m, f.losses);
    const Region d = decide_possibility(f.m, f.losses);
    if (d != f.expected) report.fail("fixed_case", std::string(f.name) + " decision=" + fmt(codebook(d)));
  }

  CaseGenerator gen(seed);
  for (std::size_t k = 0; k < n_cases; ++k) {
    const double m = gen.grid_grade();
    check_possibility_case(report, m, gen.interval_profile());
  }

  // Degenerate losses collapse every comparison to point order; the decision
  // must match the scalar risk argmin.
  CaseGenerator scalar_gen(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t k = 0; k < n_cases; ++k) {
    const double m = scalar_gen.grid_grade();
    const LossProfile p = scalar_gen.valid_profile();
    const Region via_intervals = decide_possibility(m, IntervalLossProfile::from_scalar(p));
    const Region via_rules = decide_by_rules(m, p);
    const Region via_oracle = brute_force_decide(m, p);
    report.count("degenerate_cases");
    if (via_intervals != via_rules || via_intervals != via_oracle) {
      report.fail("degenerate_bridge", "m=" + fmt(m) + " losses=" + fmt(p) + " possibility=" +
                                           fmt(codebook(via_intervals)) + " rules=" + fmt(codebook(via_rules)) +
                                           " brute=" + fmt(codebook(via_oracle)));
    } else {
      report.count("degenerate_agreements");
    }
  }
  report.finalize();
  return report;
}

SuiteReport optimizer_suite(std::uint64_t seed, std::size_t n_datasets, std::size_t max_objects,
                            std::size_t scan_points) {
  SuiteReport report{"shadowed_optimizer", {}, {}};
  CaseGenerator gen(seed);
  const GridSpec grid(scan_points, 0.5, 1.0);
  for (std::size_t k = 0; k < n_datasets; ++k) {
    const std::size_t n = 1 + gen.index(max_objects);
    const bool coarse = gen.chance(0.5);  // two-decimal grades collide with breakpoints
    std::vector<double> grades(n);
    for (double& g : grades) {
      g = gen.unit();
      if (coarse) g = std::round(g * 100.0) / 100.0;
    }
    const ScalarFuzzySet set = ScalarFuzzySet::from_grades(grades);
    report.count("datasets");
    report.count("objects", n);

    const BalancedOptimum opt = optimize_thresholds_balanced(set);
    const ScanOptimum scan = exhaustive_v_scan(set, grid);
    if (!(opt.v <= scan.v_star + 1e-12)) {
      report.fail("optimizer_vs_scan", "dataset=" + std::to_string(k) + " v=" + fmt(opt.v) +
                                           " scan_v=" + fmt(scan.v_star) + " scan_alpha=" + fmt(scan.alpha_star));
    }
    if (std::abs(objective_v_balanced(set, opt.alpha) - opt.v) != 0.0) {
      report.fail("optimizer_value", "dataset=" + std::to_string(k));
    }

    for (double alpha : {opt.alpha, scan.alpha_star}) {
      const ThresholdPair t(alpha, 1.0 - alpha);
      std::size_t card = 0;
      for (const auto& [id, m] : set) card += (m > t.beta() && m < t.alpha()) ? 1 : 0;
      report.count("balance_checks");
      if (region_errors(set, t).shadow != static_cast<double>(card)) {
        report.fail("shadow_balance", "dataset=" + std::to_string(k) + " alpha=" + fmt(alpha));
      }
    }
  }
  report.finalize();
  return report;
}

}  // namespace threeway::oracle
