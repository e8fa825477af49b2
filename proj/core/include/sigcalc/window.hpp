#pragma once

#include "sigcalc/stepfn.hpp"
#include "sigcalc/time.hpp"

namespace sigcalc {

enum class WindowMode {
  All,  ///< infimum over the window (product of the values)
  Any,  ///< supremum over the window (reunion of the values)
};

/// Window shapes relative to the current instant t, for width d.
enum class WindowKind {
  CO,  ///< [t-d, t)
  OO,  ///< (t-d, t)
  OC,  ///< (t-d, t]
};

/// Endpoint of a window given as an offset from t.
struct Offset {
  Time at;
  bool closed = false;
};

/// result(t) = inf (All) or sup (Any) of f over the window of width d.
///
/// Exact interval geometry: for All, the 0-set of the result is the
/// Minkowski difference of the 0-set of f with the window shape; Any is the
/// dual. Throws ParameterError when d <= 0.
StepFn window(WindowMode mode, const StepFn& f, const Time& d, WindowKind kind = WindowKind::CO);

/// result(t) = inf (All) or sup (Any) of f over the set {t + s : s in <lo, hi>}.
/// The relative window may lie in the past or the future but must be non-empty.
StepFn window_over(WindowMode mode, const StepFn& f, const Offset& lo, const Offset& hi);

/// result(t) = 1 iff some start t' in [t-a, t-b] has f = 1 on the window that
/// starts at t' and ends at t (shape given by `kind`). Requires 0 < b <= a.
/// Since an All-window shrinks as its start moves right, this equals
/// window(All, f, b, kind).
StepFn window_exists_all(const StepFn& f, const Time& a, const Time& b,
                         WindowKind kind = WindowKind::CO);

/// result(t) = 1 iff some t' in [t-a, t-b] has f(t'-0) = 0 and f = 1 on
/// [t', t): f rose at t' and has held since. Requires 0 < b <= a.
StepFn window_since_rise(const StepFn& f, const Time& a, const Time& b);

}  // namespace sigcalc
