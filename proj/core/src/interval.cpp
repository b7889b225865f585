#include "threeway/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "threeway/error.hpp"

namespace threeway {

namespace {

std::string describe(double lo, double hi) {
  std::ostringstream os;
  os.precision(17);
  os << '[' << lo << ", " << hi << ']';
  return os.str();
}

}  // namespace

Interval Interval::make(double lo, double hi, IntervalRole role) {
  if (std::isnan(lo) || std::isnan(hi)) {
    throw Error(ErrorKind::OutOfRange, "interval bound is NaN");
  }
  if (lo > hi) {
    throw Error(ErrorKind::InvertedBounds, "lower bound exceeds upper bound in " + describe(lo, hi));
  }
  switch (role) {
    case IntervalRole::General:
      break;
    case IntervalRole::Membership:
      if (lo < 0.0 || hi > 1.0) {
        throw Error(ErrorKind::OutOfRange, "membership interval " + describe(lo, hi) + " leaves [0, 1]");
      }
      break;
    case IntervalRole::Loss:
      if (lo < 0.0) {
        throw Error(ErrorKind::OutOfRange, "loss interval " + describe(lo, hi) + " is negative");
      }
      break;
  }
  return Interval(lo, hi);
}

Theta::Theta(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorKind::OutOfRange, "theta must lie in [0, 1]");
  }
}

PossibilityDegree::PossibilityDegree(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorKind::OutOfRange, "possibility degree must lie in [0, 1]");
  }
}

double m_theta(const Interval& interval, Theta theta) noexcept {
  const double t = theta.value();
  const double m = (1.0 - t) * interval.lo() + t * interval.hi();
  // Rounding can push the combination an ulp outside the interval.
  return std::clamp(m, interval.lo(), interval.hi());
}

Interval scale(const Interval& interval, double c) {
  if (!(c >= 0.0)) {
    throw Error(ErrorKind::NegativeScale, "scale factor must be non-negative");
  }
  return Interval::make(c * interval.lo(), c * interval.hi());
}

PossibilityDegree possibility_degree(const Interval& x, const Interval& y) noexcept {
  const double spread = x.width() + y.width();
  if (spread == 0.0) {
    if (x.lo() > y.lo()) return PossibilityDegree(1.0);
    if (x.lo() == y.lo()) return PossibilityDegree(0.5);
    return PossibilityDegree(0.0);
  }
  const double ratio = (y.hi() - x.lo()) / spread;
  return PossibilityDegree(std::max(1.0 - std::max(ratio, 0.0), 0.0));
}

}  // namespace threeway
