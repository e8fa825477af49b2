#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigcalc/report.hpp"
#include "sigcalc/signal.hpp"
#include "sigcalc/time.hpp"

namespace sigcalc {

/// Timing bounds of the non-deterministic inertial delay buffer: the output
/// may rise after an input rise held for rise_min and must rise once it has
/// been held for rise_max; falls are bounded by fall_min and fall_max.
struct DelayParams {
  Time rise_min;
  Time rise_max;
  Time fall_min;
  Time fall_max;

  /// Throws ParameterError unless 0 < rise_min <= rise_max and
  /// 0 < fall_min <= fall_max.
  void validate() const;
  bool deterministic() const { return rise_min == rise_max && fall_min == fall_max; }

  static DelayParams uniform(const Time& d) { return {d, d, d, d}; }

  friend bool operator==(const DelayParams&, const DelayParams&) = default;
};

/// Delays of the deterministic buffer.
struct DetParams {
  Time rise;
  Time fall;

  void validate() const;
  DelayParams as_bounds() const { return {rise, rise, fall, fall}; }

  friend bool operator==(const DetParams&, const DetParams&) = default;
};

// --- deterministic buffer -------------------------------------------------

/// The unique output of the deterministic buffer for input i:
///   o(t) = 1     if o(t-0) = 0 and i = 1 on [t - rise, t)
///   o(t) = 0     if o(t-0) = 1 and i = 0 on [t - fall, t)
///   o(t) = o(t-0) otherwise.
Signal didb_simulate(const Signal& i, const DetParams& p);

/// Equivalent characterizations of the deterministic buffer.
enum class DidbForm {
  A,    ///< rising and falling semi-derivatives as equations
  B,    ///< the derivative as one equation
  C,    ///< necessary transitions plus persistence
  D,    ///< exactly one of four statements holds
  E,    ///< the derivative written with the input derivative on open windows
  All,  ///< every form, plus agreement between them
};

Report didb_verify(const Signal& i, const Signal& o, const DetParams& p, DidbForm form);

// --- non-deterministic buffer ---------------------------------------------

enum class NidbForm {
  A,  ///< semi-derivative bounds
  B,  ///< derivative bounds
};

Report nidb_verify(const Signal& i, const Signal& o, const DelayParams& p, NidbForm form);

struct SamplePolicy {
  enum class Kind { Eager, Lazy, Random };

  Kind kind = Kind::Eager;
  std::uint64_t seed = 0;
  /// Random delays are drawn on the grid min + k / granularity.
  std::uint64_t granularity = 16;

  static SamplePolicy eager() { return {Kind::Eager, 0, 16}; }
  static SamplePolicy lazy() { return {Kind::Lazy, 0, 16}; }
  static SamplePolicy random(std::uint64_t seed, std::uint64_t granularity = 16) {
    return {Kind::Random, seed, granularity};
  }
};

/// One admissible output of the non-deterministic buffer. Eager switches at
/// the earliest admissible instant, Lazy only when forced, Random after a
/// delay drawn uniformly from [min, max]. A pending switch is dropped when
/// the input changes back before it fires.
Signal nidb_sample(const Signal& i, const DelayParams& p, const SamplePolicy& policy);

// --- automaton view ---------------------------------------------------------

struct AutomatonState {
  Bit input = false;
  Bit output = false;

  bool stable() const noexcept { return input == output; }
  friend bool operator==(const AutomatonState&, const AutomatonState&) = default;
};

struct Transition {
  Time at;
  AutomatonState state;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// State changes of t -> (i(t), o(t)) from the initial state (0, 0).
std::vector<Transition> automaton_trace(const Signal& i, const Signal& o);

/// A constant input applied in a stable state keeps the output constant:
/// whenever i(t) = o(t) and i is constant on [t, t'), o is constant on [t, t'].
Report check_stability(const Signal& i, const Signal& o);

/// Pulses shorter than the delay are filtered: every output switch of the
/// simulated buffer is caused by an input run at least as long as the delay,
/// and an input whose 1-runs are all shorter than the rise delay gives the
/// null output.
Report check_inertia(const Signal& i, const DetParams& p);

std::string_view to_string(DidbForm form);
std::string_view to_string(NidbForm form);
std::optional<DidbForm> parse_didb_form(std::string_view text);
std::optional<NidbForm> parse_nidb_form(std::string_view text);

}  // namespace sigcalc
