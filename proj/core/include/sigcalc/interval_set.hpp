#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigcalc/stepfn.hpp"
#include "sigcalc/time.hpp"

namespace sigcalc {

/// Endpoint of an interval; an empty `at` is -inf (as a lower bound) or
/// +inf (as an upper bound).
struct Bound {
  std::optional<Time> at;
  bool closed = false;

  static Bound infinite() { return {}; }
  static Bound open(Time t) { return {std::move(t), false}; }
  static Bound closed_at(Time t) { return {std::move(t), true}; }

  bool finite() const noexcept { return at.has_value(); }

  friend bool operator==(const Bound&, const Bound&) = default;
};

struct Interval {
  Bound lo;
  Bound hi;

  static Interval point(const Time& t) { return {Bound::closed_at(t), Bound::closed_at(t)}; }

  bool empty() const;
  bool contains(const Time& t) const;
  bool is_point() const { return lo.finite() && hi.finite() && *lo.at == *hi.at; }

  /// A member of the interval: the lower end when it is closed, otherwise
  /// the midpoint (or lower end + 1 when unbounded above).
  Time witness() const;

  /// "[a,b)", "(a,inf)", "{a}".
  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted, pairwise disjoint, maximal intervals.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Normalizes an arbitrary list: drops empty intervals, sorts and merges
  /// overlapping or touching ones.
  static IntervalSet from_intervals(std::vector<Interval> intervals);

  /// Parses a union such as "[0,1) u [2,3)", "{0,1,2}", "(2,inf)" or "empty".
  /// Separators "u", "U" and "∪" are accepted.
  static IntervalSet parse(std::string_view text);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  std::size_t size() const noexcept { return intervals_.size(); }
  bool contains(const Time& t) const;

  std::string str() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// {t : f(t) = 1}.
IntervalSet one_set(const StepFn& f);

/// Characteristic function of the set.
StepFn indicator(const IntervalSet& set);

/// Shorthand for indicator(IntervalSet::parse(text)).
StepFn indicator(std::string_view text);

/// One representative per maximal component of {t >= from : f(t) = 1},
/// in increasing order (see Interval::witness).
std::vector<Time> component_witnesses(const StepFn& f, const Time& from = Time(0));

/// Maximal components of {t >= from : f(t) = 1}.
std::vector<Interval> components_from(const StepFn& f, const Time& from = Time(0));

}  // namespace sigcalc
