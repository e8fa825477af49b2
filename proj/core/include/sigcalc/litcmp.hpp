#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigcalc/buffer.hpp"
#include "sigcalc/interval_set.hpp"
#include "sigcalc/report.hpp"
#include "sigcalc/signal.hpp"

namespace sigcalc {

/// Conditions of the earlier published definition of the buffer.
enum class LitCond {
  A,  ///< output null before rise_min
  B,  ///< every output switch follows an input switch held for [min, max]
  C,  ///< every input switch held for max is followed by an output switch in [min, max]
};

std::string_view to_string(LitCond cond);
std::optional<LitCond> parse_lit_cond(std::string_view text);

/// Decides one literature condition exactly for all t >= 0. Violations of C
/// are reported at the deadline t + d_max, the first instant at which the
/// missing output switch is certain; the clause names the triggering t.
Report lit_verify(const Signal& i, const Signal& o, const DelayParams& p, LitCond cond);

/// Runs a condition by id: "4.1a", "4.1b", "5.1a", "5.1b" or "5.1c".
/// Throws ParameterError for other ids.
Report run_condition(std::string_view id, const Signal& i, const Signal& o, const DelayParams& p);

struct Expectation {
  std::string condition;
  Verdict verdict = Verdict::Pass;
  /// When set, the earliest witness must lie in this interval.
  std::optional<Interval> witness_in;
};

struct Fixture {
  std::string name;
  Signal input;
  Signal output;
  DelayParams params;
  std::vector<Expectation> expected;
};

struct FixtureCheck {
  Expectation expected;
  Report actual;
  bool matches = false;
};

struct FixtureOutcome {
  std::vector<FixtureCheck> checks;
  bool all_match() const;
};

/// "5.3": input held at 1 from 0 on, output null; the literature condition b
/// holds while 4.1 a fails exactly at t = rise_max.
/// "5.4": all delays 2, a unit pulse on [1, 2), output null; 4.1 a holds
/// while literature condition c fails. Throws ParameterError for other ids.
Fixture counterexample(std::string_view id);
/// The "5.3" fixture under other delay bounds.
Fixture counterexample_53(const DelayParams& p);

FixtureOutcome run_fixture(const Fixture& fixture);

struct FuzzConfig {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  Time horizon = Time(16);
  std::uint64_t max_switches = 8;
  std::uint64_t granularity = 4;  ///< denominators of generated times
  Time max_delay = Time(4);
  unsigned threads = 1;  ///< does not affect the report

  void validate() const;
};

struct ClaimTally {
  std::string claim;
  std::uint64_t checked = 0;
  std::uint64_t confirmed = 0;

  friend bool operator==(const ClaimTally&, const ClaimTally&) = default;
};

struct Refutation {
  std::string claim;
  std::uint64_t trial = 0;
  Signal input;
  Signal output;
  DelayParams params;
  std::string detail;

  friend bool operator==(const Refutation&, const Refutation&) = default;
};

struct FuzzReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<ClaimTally> claims;
  std::vector<Refutation> refutations;
  /// Trials where literature condition b holds but 4.1 a does not.
  std::uint64_t strict_count = 0;
  std::optional<Refutation> strict_example;

  bool passed() const { return refutations.empty(); }
  const ClaimTally* claim(std::string_view name) const;

  friend bool operator==(const FuzzReport&, const FuzzReport&) = default;
};

inline constexpr std::string_view kClaimImplication = "5.2: 4.1a => 5.1b";
inline constexpr std::string_view kClaimNidbForms = "4.1: a <=> b";
inline constexpr std::string_view kClaimDidbForms = "4.3: a <=> b <=> c <=> d <=> 4.7";
inline constexpr std::string_view kClaimIdentities = "4.6: window identities";

/// Seeded campaign over random (i, o, p). Trial k depends only on (seed, k),
/// so the report does not depend on `threads`.
FuzzReport fuzz_claims(const FuzzConfig& config);

}  // namespace sigcalc
