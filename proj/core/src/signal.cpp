#include "sigcalc/signal.hpp"

#include "sigcalc/errors.hpp"
#include "sigcalc/interval_set.hpp"

namespace sigcalc {

SignalCheck is_signal(const StepFn& f) {
  if (f.before()) return {false, "not null before 0: value 1 on (-inf, first breakpoint)"};
  const auto pieces = f.breakpoints();
  if (!pieces.empty() && pieces.front().at < Time(0)) {
    return {false, "not null before 0: breakpoint at " + pieces.front().at.str()};
  }
  for (const auto& bp : pieces) {
    if (bp.point != bp.after) {
      return {false, "not right-continuous at " + bp.at.str()};
    }
  }
  return {};
}

Signal::Signal(StepFn f) : fn_(std::move(f)) {
  if (auto check = is_signal(fn_); !check) throw DomainError("not a signal: " + check.reason);
}

Signal Signal::from_changes(const std::vector<std::pair<Time, Bit>>& changes) {
  std::vector<Breakpoint> pieces;
  pieces.reserve(changes.size());
  for (const auto& [t, value] : changes) pieces.push_back({t, value, value});
  return Signal(StepFn::from_pieces(false, std::move(pieces)));
}

Signal Signal::from_set(std::string_view text) { return Signal(indicator(text)); }

std::vector<Time> switch_points(const StepFn& x) {
  if (auto check = is_signal(x); !check) throw DomainError("switch_points: " + check.reason);
  // Canonical signals keep exactly the breakpoints where the value changes.
  return x.breakpoint_times();
}

}  // namespace sigcalc
