#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sigcalc/stepfn.hpp"

namespace sigcalc {

struct SignalCheck {
  bool ok = true;
  std::string reason;  ///< first violated clause, empty when ok

  explicit operator bool() const noexcept { return ok; }
};

/// Realizability: null before 0, right-continuous, finitely many switches.
SignalCheck is_signal(const StepFn& f);

/// A StepFn known to be a signal. Construction validates.
class Signal {
 public:
  Signal() = default;
  /// Throws DomainError when `f` is not a signal.
  explicit Signal(StepFn f);

  /// Signal holding `value` from each listed time on; times strictly increasing.
  static Signal from_changes(const std::vector<std::pair<Time, Bit>>& changes);
  /// Indicator of a union of [a, b) intervals, e.g. "[0,1) u [2,3)".
  static Signal from_set(std::string_view text);

  const StepFn& fn() const noexcept { return fn_; }
  operator const StepFn&() const noexcept { return fn_; }  // NOLINT(google-explicit-constructor)
  Bit operator()(const Time& t) const { return fn_(t); }

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  StepFn fn_;
};

/// Minimal timed sequence of a signal: the sorted support of its derivative.
/// Throws DomainError for non-signals.
std::vector<Time> switch_points(const StepFn& x);

}  // namespace sigcalc
