#include "sigcalc/report.hpp"

#include <algorithm>

#include "sigcalc/interval_set.hpp"

namespace sigcalc {

std::string_view to_string(Verdict v) { return v == Verdict::Pass ? "pass" : "fail"; }

void Report::absorb(const Report& other) {
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

void Report::sort_by_witness() {
  std::stable_sort(violations_.begin(), violations_.end(),
                   [](const Violation& a, const Violation& b) { return a.witness < b.witness; });
}

std::optional<Time> Report::earliest_witness() const {
  std::optional<Time> best;
  for (const auto& v : violations_) {
    if (!best || v.witness < *best) best = v.witness;
  }
  return best;
}

void Report::require_leq(const StepFn& lhs, const StepFn& rhs, const std::string& clause) {
  for (const Time& t : component_witnesses(lhs & ~rhs)) add({t, lhs(t), rhs(t), clause});
}

void Report::require_eq(const StepFn& lhs, const StepFn& rhs, const std::string& clause) {
  for (const Time& t : component_witnesses(lhs ^ rhs)) add({t, lhs(t), rhs(t), clause});
}

}  // namespace sigcalc
