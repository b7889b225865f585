#include "threeway/fuzzy_set.hpp"

#include <cmath>

#include "threeway/error.hpp"

namespace threeway {

ObjectId::ObjectId(std::string label) : label_(std::move(label)) {
  if (label_.empty()) {
    throw Error(ErrorKind::OutOfRange, "object id must be non-empty");
  }
}

namespace detail {

template <typename Grade>
void GradedUniverse<Grade>::append(ObjectId id, Grade grade) {
  auto [it, inserted] = index_.emplace(id.str(), entries_.size());
  if (!inserted) {
    throw Error(ErrorKind::DuplicateId, "duplicate object id '" + id.str() + "'");
  }
  entries_.emplace_back(std::move(id), std::move(grade));
}

template class GradedUniverse<Interval>;
template class GradedUniverse<double>;

}  // namespace detail

IVFuzzySet::IVFuzzySet(std::vector<std::pair<ObjectId, Interval>> grades) {
  for (auto& [id, grade] : grades) {
    append(std::move(id), Interval::make(grade.lo(), grade.hi(), IntervalRole::Membership));
  }
}

ScalarFuzzySet::ScalarFuzzySet(std::vector<std::pair<ObjectId, double>> grades) {
  for (auto& [id, grade] : grades) {
    if (!(grade >= 0.0 && grade <= 1.0)) {
      throw Error(ErrorKind::OutOfRange, "grade of '" + id.str() + "' leaves [0, 1]");
    }
    append(std::move(id), grade);
  }
}

ScalarFuzzySet ScalarFuzzySet::from_grades(const std::vector<double>& grades) {
  std::vector<std::pair<ObjectId, double>> named;
  named.reserve(grades.size());
  for (std::size_t i = 0; i < grades.size(); ++i) {
    named.emplace_back(ObjectId("x" + std::to_string(i + 1)), grades[i]);
  }
  return ScalarFuzzySet(std::move(named));
}

ScalarFuzzySet reduce(const IVFuzzySet& set, Theta theta) {
  std::vector<std::pair<ObjectId, double>> out;
  out.reserve(set.size());
  for (const auto& [id, grade] : set) {
    out.emplace_back(id, m_theta(grade, theta));
  }
  return ScalarFuzzySet(std::move(out));
}

IVFuzzySet embed_scalar(const ScalarFuzzySet& set) {
  std::vector<std::pair<ObjectId, Interval>> out;
  out.reserve(set.size());
  for (const auto& [id, grade] : set) {
    out.emplace_back(id, Interval::point(grade));
  }
  return IVFuzzySet(std::move(out));
}

}  // namespace threeway
