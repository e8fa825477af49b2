#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigcalc/litcmp.hpp"
#include "sigcalc/report.hpp"
#include "sigcalc/signal.hpp"

namespace sigcalc {

// --- .bsig waveforms ----------------------------------------------------------
//
// One "<time> <bit>" change point per line, times strictly increasing and
// non-negative, written as p/q, an integer or an exact decimal. The value
// before the first change is 0. '#' starts a comment; "# bsig <version>" and
// "# name: <text>" comment lines form an optional header.

struct BsigDocument {
  int version = 1;
  std::optional<std::string> name;
  Signal signal;

  friend bool operator==(const BsigDocument&, const BsigDocument&) = default;
};

/// Throws ParseError (with the 1-based line number) on malformed input.
BsigDocument parse_bsig_document(std::string_view text);
Signal parse_bsig(std::string_view text);

std::string write_bsig(const BsigDocument& doc);
std::string write_bsig(const Signal& x, std::optional<std::string> name = std::nullopt);

// --- VCD export -------------------------------------------------------------

/// Value change dump of the named functions. Breakpoints at t >= 0 are scaled
/// to integer ticks by the least common multiple of their denominators (noted
/// in the header comment). A value held only at an isolated instant is shown
/// for one tick. Names must be unique identifiers; throws ParameterError.
std::string export_vcd(const std::vector<std::pair<std::string, StepFn>>& named);

// --- random signals -----------------------------------------------------------

struct GenConfig {
  Time horizon = Time(16);
  std::uint64_t max_switches = 8;
  std::uint64_t granularity = 4;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Signal with at most max_switches switch points, each a multiple of
/// 1/granularity in [0, horizon]. Deterministic in the config.
Signal random_signal(const GenConfig& cfg);

// --- reports ------------------------------------------------------------------

/// {"condition", "verdict": "pass"|"fail", "violations": [{"witness": "p/q",
/// "lhs": 0|1, "rhs": 0|1, "clause"}]}
std::string report_to_json(const Report& r);
Report report_from_json(std::string_view text);
/// Verdict line followed by one line per violation.
std::string report_summary(const Report& r);

std::string fuzz_report_to_json(const FuzzReport& r);
FuzzReport fuzz_report_from_json(std::string_view text);
std::string fuzz_report_summary(const FuzzReport& r);

}  // namespace sigcalc
