#include "threeway/dtrs.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

#include "threeway/error.hpp"

namespace threeway {

IntervalLossProfile::IntervalLossProfile(Interval e, Interval r, Interval sd, Interval su)
    : e_(e), r_(r), sd_(sd), su_(su) {
  const std::pair<const char*, const Interval*> named[] = {
      {"lambda_e", &e_}, {"lambda_r", &r_}, {"lambda_sd", &sd_}, {"lambda_su", &su_}};
  for (const auto& [name, iv] : named) {
    if (!(iv->lo() > 0.0)) {
      throw Error(ErrorKind::NonPositiveLoss, std::string(name) + " must have a positive lower bound");
    }
  }
}

IntervalLossProfile IntervalLossProfile::from_scalar(const LossProfile& p) {
  return IntervalLossProfile(Interval::point(p.lambda_e), Interval::point(p.lambda_r),
                             Interval::point(p.lambda_sd), Interval::point(p.lambda_su));
}

std::string_view to_string(Action a) noexcept {
  switch (a) {
    case Action::Elevate: return "elevate";
    case Action::Reduce: return "reduce";
    case Action::ShadowDown: return "shadow_down";
    case Action::ShadowUp: return "shadow_up";
  }
  return "unknown";
}

Region region_of(Action a) noexcept {
  switch (a) {
    case Action::Elevate: return Region::Elevate;
    case Action::Reduce: return Region::Reduce;
    case Action::ShadowDown:
    case Action::ShadowUp: break;
  }
  return Region::Shadow;
}

double RiskSet::at(Action a) const {
  if (a == Action::Elevate) return elevate;
  if (a == Action::Reduce) return reduce;
  if (a == shadow_action) return shadow;
  throw std::out_of_range("shadow action not applicable at this grade");
}

void validate(const LossProfile& p) {
  if (!(p.lambda_e > 0.0 && p.lambda_r > 0.0 && p.lambda_sd > 0.0 && p.lambda_su > 0.0)) {
    throw Error(ErrorKind::ConditionViolation, "c1: every loss must be strictly positive");
  }
  if (!(p.lambda_sd <= p.lambda_r)) {
    throw Error(ErrorKind::ConditionViolation, "c2: lambda_sd must not exceed lambda_r");
  }
  if (!(p.lambda_su <= p.lambda_e)) {
    throw Error(ErrorKind::ConditionViolation, "c3: lambda_su must not exceed lambda_e");
  }
}

RiskSet risks(double m, const LossProfile& p) {
  assert(m >= 0.0 && m <= 1.0);
  RiskSet r{(1.0 - m) * p.lambda_e, m * p.lambda_r, 0.0, shadow_action_for(m)};
  if (r.shadow_action == Action::ShadowDown) {
    r.shadow = (m - 0.5) * p.lambda_sd;
  } else {
    r.shadow = (0.5 - m) * p.lambda_su;
  }
  assert(r.shadow >= 0.0);
  return r;
}

DerivedThresholds thresholds_from_losses(const LossProfile& p) {
  validate(p);
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double e = p.lambda_e, r = p.lambda_r, sd = p.lambda_sd, su = p.lambda_su;

  DerivedThresholds t{};
  t.alpha = (2.0 * e + sd) / (2.0 * (e + sd));
  t.beta = su / (2.0 * (r + su));
  t.gamma = e / (e + r);
  t.gamma_minus = r == sd ? -inf : -sd / (2.0 * (r - sd));
  t.gamma_plus = e == su ? inf : (e - 0.5 * su) / (e - su);

  // Under c2/c3 reduce never wins above 0.5 and elevate never wins below it.
  assert(t.gamma_minus <= 0.0);
  assert(t.gamma_plus >= 1.0);
  return t;
}

LossProfile reduce_losses(const IntervalLossProfile& p, Theta theta) {
  LossProfile out{m_theta(p.lambda_e(), theta), m_theta(p.lambda_r(), theta),
                  m_theta(p.lambda_sd(), theta), m_theta(p.lambda_su(), theta)};
  validate(out);
  return out;
}

Region decide(double m, const ThresholdPair& t) noexcept { return approx_three_way(m, t); }

Region decide(double m, const DerivedThresholds& t) noexcept {
  if (m >= t.alpha) return Region::Elevate;
  if (m <= t.beta) return Region::Reduce;
  return Region::Shadow;
}

Region decide_by_rules(double m, const LossProfile& p) {
  validate(p);
  const RiskSet r = risks(m, p);
  if (r.elevate <= r.reduce && r.elevate <= r.shadow) return Region::Elevate;
  if (r.reduce <= r.shadow) return Region::Reduce;
  return Region::Shadow;
}

}  // namespace threeway
