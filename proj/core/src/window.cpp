#include "sigcalc/window.hpp"

#include "sigcalc/errors.hpp"
#include "sigcalc/interval_set.hpp"

namespace sigcalc {

namespace {

void require_positive(const Time& d, const char* what) {
  if (!(Time(0) < d)) throw ParameterError(std::string(what) + " must be positive, got " + d.str());
}

StepFn all_over(const StepFn& f, const Offset& lo, const Offset& hi) {
  std::vector<Interval> blocked;
  const IntervalSet zeros = one_set(~f);
  for (const auto& z : zeros.intervals()) {
    Interval iv;
    if (z.lo.finite()) iv.lo = {*z.lo.at - hi.at, z.lo.closed && hi.closed};
    if (z.hi.finite()) iv.hi = {*z.hi.at - lo.at, z.hi.closed && lo.closed};
    blocked.push_back(std::move(iv));
  }
  return ~indicator(IntervalSet::from_intervals(std::move(blocked)));
}

}  // namespace

StepFn window_over(WindowMode mode, const StepFn& f, const Offset& lo, const Offset& hi) {
  if (hi.at < lo.at || (lo.at == hi.at && !(lo.closed && hi.closed))) {
    throw ParameterError("empty window <" + lo.at.str() + ", " + hi.at.str() + ">");
  }
  if (mode == WindowMode::All) return all_over(f, lo, hi);
  return ~all_over(~f, lo, hi);
}

StepFn window(WindowMode mode, const StepFn& f, const Time& d, WindowKind kind) {
  require_positive(d, "window width");
  switch (kind) {
    case WindowKind::CO:
      return window_over(mode, f, {-d, true}, {Time(0), false});
    case WindowKind::OO:
      return window_over(mode, f, {-d, false}, {Time(0), false});
    case WindowKind::OC:
      return window_over(mode, f, {-d, false}, {Time(0), true});
  }
  throw ParameterError("unknown window kind");
}

StepFn window_exists_all(const StepFn& f, const Time& a, const Time& b, WindowKind kind) {
  require_positive(b, "lower window bound");
  if (a < b) throw ParameterError("window range needs b <= a, got a=" + a.str() + " b=" + b.str());
  return window(WindowMode::All, f, b, kind);
}

StepFn window_since_rise(const StepFn& f, const Time& a, const Time& b) {
  require_positive(b, "lower window bound");
  if (a < b) throw ParameterError("window range needs b <= a, got a=" + a.str() + " b=" + b.str());

  const auto pieces = f.breakpoints();
  std::vector<Interval> ones;
  Bit previous = f.before();
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const Breakpoint& start = pieces[k];
    const Bit rose = !previous && start.point;
    previous = start.after;
    if (!rose) continue;

    // Supremum of the s with f = 1 on [start, s); nullopt is +inf.
    std::optional<Time> held_until = start.at;
    if (start.after) {
      held_until.reset();
      for (std::size_t j = k + 1; j < pieces.size(); ++j) {
        if (!pieces[j].point || !pieces[j].after) {
          held_until = pieces[j].at;
          break;
        }
      }
    }
    // t must satisfy start + b <= t <= start + a and t <= held_until.
    Interval iv{Bound::closed_at(start.at + b), Bound::closed_at(start.at + a)};
    if (held_until && *held_until < start.at + a) iv.hi = Bound::closed_at(*held_until);
    ones.push_back(std::move(iv));
  }
  return indicator(IntervalSet::from_intervals(std::move(ones)));
}

}  // namespace sigcalc
