#pragma once

#include <string_view>

#include "threeway/interval.hpp"
#include "threeway/shadowed.hpp"

namespace threeway {

/// Unit costs of the four grade-changing actions.
struct LossProfile {
  double lambda_e;   // elevate to 1
  double lambda_r;   // reduce to 0
  double lambda_sd;  // reduce to 0.5 (m >= 0.5)
  double lambda_su;  // elevate to 0.5 (m < 0.5)

  friend bool operator==(const LossProfile&, const LossProfile&) = default;
};

/// Interval-valued unit costs; every lower bound is strictly positive.
class IntervalLossProfile {
 public:
  /// Throws Error(NonPositiveLoss) if any lower bound is <= 0.
  IntervalLossProfile(Interval e, Interval r, Interval sd, Interval su);

  /// Every interval degenerate at the scalar cost.
  static IntervalLossProfile from_scalar(const LossProfile& p);

  const Interval& lambda_e() const noexcept { return e_; }
  const Interval& lambda_r() const noexcept { return r_; }
  const Interval& lambda_sd() const noexcept { return sd_; }
  const Interval& lambda_su() const noexcept { return su_; }

 private:
  Interval e_, r_, sd_, su_;
};

enum class Action { Elevate, Reduce, ShadowDown, ShadowUp };

std::string_view to_string(Action a) noexcept;
Region region_of(Action a) noexcept;

/// Shadow action applicable at m: ShadowDown for m >= 0.5, ShadowUp below.
constexpr Action shadow_action_for(double m) noexcept {
  return m >= 0.5 ? Action::ShadowDown : Action::ShadowUp;
}

/// Risks of the three applicable actions at one grade.
struct RiskSet {
  double elevate;
  double reduce;
  double shadow;
  Action shadow_action;

  /// Throws std::out_of_range for the inapplicable shadow action.
  double at(Action a) const;
};

struct DerivedThresholds {
  double alpha;
  double beta;
  double gamma;
  double gamma_minus;  // -inf when lambda_r == lambda_sd
  double gamma_plus;   // +inf when lambda_e == lambda_su

  ThresholdPair pair() const { return ThresholdPair(alpha, beta); }
};

/// Throws Error(ConditionViolation) naming c1 (positivity), c2
/// (lambda_sd <= lambda_r) or c3 (lambda_su <= lambda_e).
void validate(const LossProfile& p);

/// Error-weighted costs: (1 - m) lambda_e, m lambda_r and either
/// (m - 0.5) lambda_sd or (0.5 - m) lambda_su.
RiskSet risks(double m, const LossProfile& p);

/// Closed-form thresholds of the cost-minimizing three-way rule.
DerivedThresholds thresholds_from_losses(const LossProfile& p);

/// Component-wise m_theta; the result must satisfy c1-c3.
LossProfile reduce_losses(const IntervalLossProfile& p, Theta theta);

/// Elevate if m >= alpha, reduce if m <= beta, shadow otherwise.
Region decide(double m, const ThresholdPair& t) noexcept;
Region decide(double m, const DerivedThresholds& t) noexcept;

/// Direct argmin of the applicable risks. Ties: Elevate, then Reduce, then
/// the shadow action.
Region decide_by_rules(double m, const LossProfile& p);

}  // namespace threeway
