#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sigcalc/time.hpp"

namespace sigcalc {

using Bit = bool;

/// One breakpoint of a step function: the value at the instant itself and
/// the value on the open interval that follows it.
struct Breakpoint {
  Time at;
  Bit point = false;
  Bit after = false;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Binary function on the real line with finitely many breakpoints.
///
/// Values at breakpoints are independent of the values on the surrounding
/// open intervals, which is what lets the same type hold signals, their left
/// limits and their derivatives. The representation is canonical: a
/// breakpoint is kept only when its point value differs from one of its
/// neighbouring interval values, so pointwise-equal functions compare equal
/// with operator==.
class StepFn {
 public:
  StepFn() = default;

  static StepFn constant(Bit value);

  /// Builds the canonical function. Times must be strictly increasing.
  /// Throws ConstructionError otherwise.
  static StepFn from_pieces(Bit before, std::vector<Breakpoint> pieces);

  /// Value at t.
  Bit operator()(const Time& t) const;
  Bit eval(const Time& t) const { return (*this)(t); }

  /// Value on (-inf, first breakpoint).
  Bit before() const noexcept { return before_; }
  /// Value on (last breakpoint, +inf).
  Bit final_value() const noexcept { return pieces_.empty() ? before_ : pieces_.back().after; }
  /// Value on the open interval that starts at t (the right limit at t).
  Bit right_limit(const Time& t) const;
  /// Value on the open interval that ends at t.
  Bit left_limit_at(const Time& t) const;

  std::span<const Breakpoint> breakpoints() const noexcept { return pieces_; }
  std::vector<Time> breakpoint_times() const;
  bool is_constant() const noexcept { return pieces_.empty(); }

  friend bool operator==(const StepFn&, const StepFn&) = default;

 private:
  Bit before_ = false;
  std::vector<Breakpoint> pieces_;
};

StepFn operator~(const StepFn& f);
StepFn operator&(const StepFn& f, const StepFn& g);
StepFn operator|(const StepFn& f, const StepFn& g);
StepFn operator^(const StepFn& f, const StepFn& g);

enum class BoolOp { Not, And, Or, Xor, Implies };

/// Pointwise combination. `g` is ignored for Not and required otherwise.
StepFn pointwise(BoolOp op, const StepFn& f, const std::optional<StepFn>& g = std::nullopt);

/// Pointwise implication f -> g, i.e. f' + g.
StepFn implies(const StepFn& f, const StepFn& g);

/// t -> f(t - 0).
StepFn left_limit(const StepFn& f);

/// Left derivative: t -> f(t - 0) xor f(t).
StepFn derivative(const StepFn& f);

struct SemiDerivatives {
  StepFn rise;  ///< f(t - 0)' f(t)
  StepFn fall;  ///< f(t - 0) f(t)'
};

SemiDerivatives semi_derivatives(const StepFn& f);

/// g(t) = f(t + offset).
StepFn shift(const StepFn& f, const Time& offset);

/// A point where `f(t) <= g(t)` fails, with the two values there.
struct LeqWitness {
  Time at;
  Bit lhs = false;
  Bit rhs = false;
};

struct LeqResult {
  bool holds = true;
  std::optional<LeqWitness> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// Decides f(t) <= g(t) for every t >= from, on the common breakpoint
/// refinement. On failure the witness is the least failing time when the
/// failing set starts with a closed end, otherwise the midpoint of the first
/// failing open piece (left end + 1 for an unbounded piece).
LeqResult leq(const StepFn& f, const StepFn& g, const Time& from = Time(0));

}  // namespace sigcalc
