#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "threeway/interval.hpp"

namespace threeway {

/// Non-empty label of one object of the universe.
class ObjectId {
 public:
  /// Throws Error(OutOfRange) for an empty label.
  explicit ObjectId(std::string label);

  const std::string& str() const noexcept { return label_; }

  friend bool operator==(const ObjectId&, const ObjectId&) = default;

 private:
  std::string label_;
};

namespace detail {

/// Ordered universe with unique ids and one grade per object.
template <typename Grade>
class GradedUniverse {
 public:
  using Entry = std::pair<ObjectId, Grade>;

  GradedUniverse() = default;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Universe order.
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool contains(const std::string& id) const { return index_.count(id) != 0; }

  /// Throws std::out_of_range for an unknown id.
  const Grade& grade(const std::string& id) const { return entries_[index_.at(id)].second; }

 protected:
  void append(ObjectId id, Grade grade);

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace detail

/// Finite universe whose grades are closed subintervals of [0, 1].
class IVFuzzySet : public detail::GradedUniverse<Interval> {
 public:
  IVFuzzySet() = default;

  /// Grades are re-validated as membership intervals. Throws
  /// Error(DuplicateId), Error(OutOfRange) or Error(InvertedBounds).
  explicit IVFuzzySet(std::vector<std::pair<ObjectId, Interval>> grades);
};

/// Finite universe whose grades are scalars in [0, 1].
class ScalarFuzzySet : public detail::GradedUniverse<double> {
 public:
  ScalarFuzzySet() = default;

  /// Throws Error(DuplicateId) or Error(OutOfRange).
  explicit ScalarFuzzySet(std::vector<std::pair<ObjectId, double>> grades);

  /// Convenience for tests and generators: ids are "x1", "x2", ...
  static ScalarFuzzySet from_grades(const std::vector<double>& grades);
};

/// Pointwise m_theta of every grade, universe order preserved.
ScalarFuzzySet reduce(const IVFuzzySet& set, Theta theta);

/// Each grade g becomes [g, g]; reduce(embed_scalar(f), t) == f for every t.
IVFuzzySet embed_scalar(const ScalarFuzzySet& set);

}  // namespace threeway
