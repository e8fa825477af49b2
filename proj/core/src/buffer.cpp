#include "sigcalc/buffer.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "sigcalc/errors.hpp"
#include "sigcalc/interval_set.hpp"
#include "sigcalc/window.hpp"

namespace sigcalc {

void DelayParams::validate() const {
  const Time zero(0);
  if (!(zero < rise_min) || rise_max < rise_min) {
    throw ParameterError("rise delays need 0 < min <= max, got [" + rise_min.str() + ", " +
                         rise_max.str() + "]");
  }
  if (!(zero < fall_min) || fall_max < fall_min) {
    throw ParameterError("fall delays need 0 < min <= max, got [" + fall_min.str() + ", " +
                         fall_max.str() + "]");
  }
}

void DetParams::validate() const {
  if (!(Time(0) < rise) || !(Time(0) < fall)) {
    throw ParameterError("delays must be positive, got rise=" + rise.str() + " fall=" + fall.str());
  }
}

namespace {

StepFn before(const Time& t) {
  return indicator(IntervalSet::from_intervals({Interval{Bound::infinite(), Bound::open(t)}}));
}

// The first point of a component that starts strictly after `after`.
const Interval* next_component(const std::vector<Interval>& comps, std::size_t& cursor,
                               const std::optional<Time>& after) {
  while (cursor < comps.size()) {
    const Interval& c = comps[cursor];
    if (c.lo.finite() && (!after || *after < *c.lo.at)) {
      if (!c.lo.closed) throw std::logic_error("enabling window opens without a first instant");
      return &c;
    }
    ++cursor;
  }
  return nullptr;
}

}  // namespace

Signal didb_simulate(const Signal& i, const DetParams& p) {
  p.validate();
  const auto rise_enabled = one_set(window(WindowMode::All, i, p.rise)).intervals();
  const auto fall_enabled = one_set(window(WindowMode::All, ~i.fn(), p.fall)).intervals();

  std::vector<std::pair<Time, Bit>> changes;
  std::optional<Time> last;
  std::size_t ri = 0;
  std::size_t fi = 0;
  Bit state = false;
  while (true) {
    const Interval* next = state ? next_component(fall_enabled, fi, last)
                                 : next_component(rise_enabled, ri, last);
    if (!next) break;
    state = !state;
    last = *next->lo.at;
    changes.emplace_back(*last, state);
  }
  return Signal::from_changes(changes);
}

namespace {

struct OutputTerms {
  StepFn old_value;  // o(t - 0)
  StepFn rise;
  StepFn fall;
  StepFn change;  // Do
};

OutputTerms output_terms(const Signal& o) {
  auto semi = semi_derivatives(o);
  return {left_limit(o), semi.rise, semi.fall, derivative(o)};
}

Report didb_form(const Signal& i, const Signal& o, const DetParams& p, DidbForm form) {
  const auto [old, rise, fall, change] = output_terms(o);
  const StepFn held_one = window(WindowMode::All, i, p.rise);
  const StepFn held_zero = window(WindowMode::All, ~i.fn(), p.fall);
  const StepFn must_rise = ~old & held_one;
  const StepFn must_fall = old & held_zero;

  Report r(std::string(to_string(form)));
  r.require_leq(o.fn() & before(p.rise), StepFn::constant(false), "4.5.init: o = 0 for t < d_r");
  switch (form) {
    case DidbForm::A:
      r.require_eq(rise, must_rise, "4.3a.rise: o(t-0)'o(t) = o(t-0)' prod_[t-d_r,t) i");
      r.require_eq(fall, must_fall, "4.3a.fall: o(t-0)o(t)' = o(t-0) prod_[t-d_f,t) i'");
      break;
    case DidbForm::B:
      r.require_eq(change, must_rise | must_fall, "4.3b: Do(t) = rise enable + fall enable");
      break;
    case DidbForm::C: {
      r.require_leq(must_rise, o, "4.3c.rise: o(t-0)' prod_[t-d_r,t) i <= o(t)");
      r.require_leq(must_fall, ~o.fn(), "4.3c.fall: o(t-0) prod_[t-d_f,t) i' <= o(t)'");
      const StepFn idle = (~old & ~held_one) | (old & ~held_zero);
      const StepFn kept = (~old & ~o.fn()) | (old & o.fn());
      r.require_leq(idle, kept, "4.3c.hold: no enabling window => o(t) = o(t-0)");
      break;
    }
    case DidbForm::D: {
      const StepFn exactly_one = (~old & ~o.fn() & ~held_one) ^ (old & o.fn() & ~held_zero) ^
                                 (~old & o.fn() & held_one) ^ (old & ~o.fn() & held_zero);
      r.require_eq(exactly_one, StepFn::constant(true),
                   "4.3d: exactly one of rise, fall, stay 0, stay 1 holds");
      break;
    }
    case DidbForm::E: {
      const StepFn input_old = left_limit(i);
      const StepFn quiet = ~derivative(i);
      const StepFn rhs =
          (~old & input_old & window(WindowMode::All, quiet, p.rise, WindowKind::OO)) |
          (old & ~input_old & window(WindowMode::All, quiet, p.fall, WindowKind::OO));
      r.require_eq(change, rhs, "4.7: Do(t) from i(t-0) and Di on open windows");
      break;
    }
    case DidbForm::All:
      break;
  }
  return r;
}

}  // namespace

Report didb_verify(const Signal& i, const Signal& o, const DetParams& p, DidbForm form) {
  p.validate();
  if (form != DidbForm::All) return didb_form(i, o, p, form);

  Report all(std::string(to_string(DidbForm::All)));
  std::string verdicts;
  bool any_pass = false;
  bool any_fail = false;
  std::optional<Time> first_failure;
  for (DidbForm f : {DidbForm::A, DidbForm::B, DidbForm::C, DidbForm::D, DidbForm::E}) {
    Report r = didb_form(i, o, p, f);
    verdicts += std::string(verdicts.empty() ? "" : " ") + std::string(to_string(f)) + "=" +
                std::string(to_string(r.verdict()));
    (r.passed() ? any_pass : any_fail) = true;
    if (!r.passed() && !first_failure) first_failure = r.violations().front().witness;
    all.absorb(r);
  }
  if (any_pass && any_fail) {
    all.add({*first_failure, false, false, "equivalent forms disagree: " + verdicts});
  }
  return all;
}

Report nidb_verify(const Signal& i, const Signal& o, const DelayParams& p, NidbForm form) {
  p.validate();
  const auto [old, rise, fall, change] = output_terms(o);
  const StepFn forced_rise = ~old & window(WindowMode::All, i, p.rise_max);
  const StepFn allowed_rise = ~old & window(WindowMode::All, i, p.rise_min);
  const StepFn forced_fall = old & window(WindowMode::All, ~i.fn(), p.fall_max);
  const StepFn allowed_fall = old & window(WindowMode::All, ~i.fn(), p.fall_min);

  Report r(std::string(to_string(form)));
  r.require_leq(o.fn() & before(p.rise_min), StepFn::constant(false),
                "4.2.init: o = 0 for t < d_r,min");
  if (form == NidbForm::A) {
    r.require_leq(forced_rise, rise, "4.1a.rise-lower: o(t-0)' prod_[t-d_r,max,t) i <= o(t-0)'o(t)");
    r.require_leq(rise, allowed_rise, "4.1a.rise-upper: o(t-0)'o(t) <= o(t-0)' prod_[t-d_r,min,t) i");
    r.require_leq(forced_fall, fall, "4.1a.fall-lower: o(t-0) prod_[t-d_f,max,t) i' <= o(t-0)o(t)'");
    r.require_leq(fall, allowed_fall, "4.1a.fall-upper: o(t-0)o(t)' <= o(t-0) prod_[t-d_f,min,t) i'");
  } else {
    r.require_leq(forced_rise | forced_fall, change, "4.1b.lower: forced switches <= Do(t)");
    r.require_leq(change, allowed_rise | allowed_fall, "4.1b.upper: Do(t) <= allowed switches");
  }
  return r;
}

std::vector<Transition> automaton_trace(const Signal& i, const Signal& o) {
  auto times = i.fn().breakpoint_times();
  auto ot = o.fn().breakpoint_times();
  times.insert(times.end(), ot.begin(), ot.end());
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  std::vector<Transition> out;
  AutomatonState current{};
  for (const Time& t : times) {
    AutomatonState next{i(t), o(t)};
    if (next != current) out.push_back({t, next});
    current = next;
  }
  return out;
}

Report check_stability(const Signal& i, const Signal& o) {
  Report r("3.4");
  const auto output_switches = o.fn().breakpoints();
  auto check_run = [&](const Interval& run, Bit value) {
    // First instant of the run at which o agrees with i.
    std::optional<Time> start;
    if (run.lo.finite() ? o(*run.lo.at) == value : o.fn().before() == value) {
      start = run.lo.at;  // nullopt encodes -inf
    } else {
      for (const auto& bp : output_switches) {
        if (run.contains(bp.at) && bp.point == value) {
          start = bp.at;
          break;
        }
      }
      if (!start) return;
    }
    for (const auto& bp : output_switches) {
      const bool after_start = !start || *start < bp.at;
      const bool within = !run.hi.finite() || !(*run.hi.at < bp.at);
      if (after_start && within) {
        r.add({bp.at, bp.point, value,
               "3.4: o switched while in a stable state under constant input " +
                   std::string(value ? "1" : "0") + " on " + run.str()});
        return;
      }
    }
  };
  const IntervalSet high = one_set(i);
  const IntervalSet low = one_set(~i.fn());
  for (const auto& run : high.intervals()) check_run(run, true);
  for (const auto& run : low.intervals()) check_run(run, false);
  r.sort_by_witness();
  return r;
}

Report check_inertia(const Signal& i, const DetParams& p) {
  p.validate();
  const Signal o = didb_simulate(i, p);
  Report r("3.5");
  const auto ones = one_set(i).intervals();
  const auto zeros = one_set(~i.fn()).intervals();

  auto run_length_ok = [](const std::vector<Interval>& runs, const Time& at, const Time& d) {
    for (const auto& run : runs) {
      if (!run.contains(at)) continue;
      if (!run.lo.finite() || !run.hi.finite()) return true;
      return !(*run.hi.at - *run.lo.at < d);
    }
    return false;
  };

  Bit previous = false;
  for (const auto& bp : o.fn().breakpoints()) {
    const bool rose = !previous && bp.point;
    const Time& d = rose ? p.rise : p.fall;
    if (!run_length_ok(rose ? ones : zeros, bp.at - d, d)) {
      r.add({bp.at, bp.point, previous,
             std::string(rose ? "3.5.rise" : "3.5.fall") +
                 ": output switch caused by an input run shorter than the delay"});
    }
    previous = bp.point;
  }

  bool all_short = true;
  for (const auto& run : ones) {
    if (!run.hi.finite() || !(*run.hi.at - *run.lo.at < p.rise)) all_short = false;
  }
  if (all_short && !o.fn().is_constant()) {
    r.add({o.fn().breakpoints().front().at, true, false,
           "3.5.filter: every input pulse is shorter than d_r but the output switched"});
  }
  return r;
}

std::string_view to_string(DidbForm form) {
  switch (form) {
    case DidbForm::A:
      return "4.3a";
    case DidbForm::B:
      return "4.3b";
    case DidbForm::C:
      return "4.3c";
    case DidbForm::D:
      return "4.3d";
    case DidbForm::E:
      return "4.7";
    case DidbForm::All:
      return "4.3all";
  }
  return "?";
}

std::string_view to_string(NidbForm form) { return form == NidbForm::A ? "4.1a" : "4.1b"; }

std::optional<DidbForm> parse_didb_form(std::string_view text) {
  // Accepts the CLI letter ("a" .. "e", "all") or the condition id.
  static constexpr std::pair<std::string_view, DidbForm> kLetters[] = {
      {"a", DidbForm::A}, {"b", DidbForm::B}, {"c", DidbForm::C},
      {"d", DidbForm::D}, {"e", DidbForm::E}, {"all", DidbForm::All}};
  for (const auto& [letter, form] : kLetters) {
    if (text == letter || text == to_string(form)) return form;
  }
  return std::nullopt;
}

std::optional<NidbForm> parse_nidb_form(std::string_view text) {
  if (text == "a" || text == to_string(NidbForm::A)) return NidbForm::A;
  if (text == "b" || text == to_string(NidbForm::B)) return NidbForm::B;
  return std::nullopt;
}

}  // namespace sigcalc
