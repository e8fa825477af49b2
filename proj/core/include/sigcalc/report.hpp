#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigcalc/stepfn.hpp"
#include "sigcalc/time.hpp"

namespace sigcalc {

enum class Verdict { Pass, Fail };

std::string_view to_string(Verdict v);

struct Violation {
  Time witness;
  Bit lhs = false;
  Bit rhs = false;
  std::string clause;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of checking one condition for all t >= 0. The verdict is Fail
/// exactly when at least one violation was recorded.
class Report {
 public:
  Report() = default;
  explicit Report(std::string condition) : condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }
  Verdict verdict() const noexcept { return violations_.empty() ? Verdict::Pass : Verdict::Fail; }
  bool passed() const noexcept { return violations_.empty(); }

  void add(Violation v) { violations_.push_back(std::move(v)); }
  void absorb(const Report& other);
  void sort_by_witness();

  /// Least witness time over all violations; nullopt on Pass.
  std::optional<Time> earliest_witness() const;

  /// Records one violation per maximal component of {t >= 0 : lhs > rhs}.
  void require_leq(const StepFn& lhs, const StepFn& rhs, const std::string& clause);
  /// Records one violation per maximal component of {t >= 0 : lhs != rhs}.
  void require_eq(const StepFn& lhs, const StepFn& rhs, const std::string& clause);

  friend bool operator==(const Report&, const Report&) = default;

 private:
  std::string condition_;
  std::vector<Violation> violations_;
};

}  // namespace sigcalc
