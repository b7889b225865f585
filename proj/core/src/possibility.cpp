#include "threeway/possibility.hpp"

#include <cassert>
#include <cmath>

namespace threeway {

namespace {

constexpr double kGrid = 0x1p50;

// Entries live in [0, 1]; a multiple of 2^-50 there has an exact complement
// and sums of up to nine of them stay exact below 8.
double snap(double p) noexcept { return std::nearbyint(p * kGrid) / kGrid; }

Regime regime_of(double p) noexcept {
  if (p == 0.0) return Regime::I;
  if (p == 1.0) return Regime::III;
  return Regime::II;
}

}  // namespace

std::string_view to_string(Situation s) noexcept {
  return s == Situation::High ? "high" : "low";
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::I: return "I";
    case Regime::II: return "II";
    case Regime::III: return "III";
  }
  return "?";
}

std::string OutcomeSet::describe() const {
  std::string out;
  for (Region r : {Region::Elevate, Region::Shadow, Region::Reduce}) {
    if (!contains(r)) continue;
    if (!out.empty()) out += " or ";
    out += r == Region::Elevate ? "1" : r == Region::Shadow ? "0.5" : "0";
  }
  return out;
}

PreferenceMatrix::PreferenceMatrix(double p_er, double p_es, double p_rs) {
  const double er = snap(p_er), es = snap(p_es), rs = snap(p_rs);
  p_ = {{{PossibilityDegree(0.5), PossibilityDegree(er), PossibilityDegree(es)},
         {PossibilityDegree(1.0 - er), PossibilityDegree(0.5), PossibilityDegree(rs)},
         {PossibilityDegree(1.0 - es), PossibilityDegree(1.0 - rs), PossibilityDegree(0.5)}}};
}

RiskIntervals risk_intervals(double m, const IntervalLossProfile& p) {
  assert(m >= 0.0 && m <= 1.0);
  RiskIntervals r{scale(p.lambda_e(), 1.0 - m), scale(p.lambda_r(), m), Interval{}, Situation::High};
  if (m >= 0.5) {
    r.r_s = scale(p.lambda_sd(), m - 0.5);
  } else {
    r.r_s = scale(p.lambda_su(), 0.5 - m);
    r.situation = Situation::Low;
  }
  return r;
}

PreferenceMatrix preference_matrix(const RiskIntervals& r) {
  return PreferenceMatrix(possibility_degree(r.r_e, r.r_r).value(),
                          possibility_degree(r.r_e, r.r_s).value(),
                          possibility_degree(r.r_r, r.r_s).value());
}

PreferenceTotals preference_totals(const PreferenceMatrix& p) noexcept {
  PreferenceTotals t{};
  double* rows[] = {&t.p_e, &t.p_r, &t.p_s};
  for (std::size_t i = 0; i < 3; ++i) {
    *rows[i] = p(i, 0) + p(i, 1) + p(i, 2);
  }
  return t;
}

RegimeTriple classify_regimes(const PreferenceMatrix& p) noexcept {
  return {regime_of(p(kE, kR)), regime_of(p(kE, kS)), regime_of(p(kR, kS))};
}

RegimeTriple classify_regimes(const RiskIntervals& r) { return classify_regimes(preference_matrix(r)); }

std::size_t regime_row(const RegimeTriple& rt) noexcept {
  return 9 * static_cast<std::size_t>(rt.er) + 3 * static_cast<std::size_t>(rt.es) +
         static_cast<std::size_t>(rt.rs) + 1;
}

OutcomeSet allowed_outcomes(const RegimeTriple& rt) noexcept {
  constexpr Region E = Region::Elevate, S = Region::Shadow, R = Region::Reduce;
  // Rows 1..27 in (p_er, p_es, p_rs) order I < II < III.
  static const OutcomeSet table[27] = {
      {E},       {E},       {E},  // I   I   *
      {E},       {E, S},    {E, S},  // I   II  *
      {E},       {S},       {S},  // I   III *
      {E, R},    {E, R, S}, {E},  // II  I   *
      {E, R},    {E, S, R}, {E, S},  // II  II  *
      {R},       {S, R},    {S},  // II  III *
      {R},       {R},       {E},  // III I   *
      {R},       {S, R},    {S},  // III II  *
      {R},       {S, R},    {S},  // III III *
  };
  return table[regime_row(rt) - 1];
}

Region decide_from_totals(const PreferenceTotals& t) noexcept {
  if (t.p_e <= t.p_r && t.p_e <= t.p_s) return Region::Elevate;
  if (t.p_r <= t.p_s) return Region::Reduce;
  return Region::Shadow;
}

PossibilityTrace trace_possibility(double m, const IntervalLossProfile& p) {
  RiskIntervals risks = risk_intervals(m, p);
  PreferenceMatrix matrix = preference_matrix(risks);
  const PreferenceTotals totals = preference_totals(matrix);
  return {risks, matrix, totals, classify_regimes(matrix), decide_from_totals(totals)};
}

Region decide_possibility(double m, const IntervalLossProfile& p) {
  return decide_from_totals(preference_totals(preference_matrix(risk_intervals(m, p))));
}

}  // namespace threeway
