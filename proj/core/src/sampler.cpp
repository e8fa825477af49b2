#include <stdexcept>

#include "rng.hpp"
#include "sigcalc/buffer.hpp"
#include "sigcalc/errors.hpp"
#include "sigcalc/interval_set.hpp"

namespace sigcalc {

namespace {

class DelayDraw {
 public:
  explicit DelayDraw(const SamplePolicy& policy) : policy_(policy), rng_(policy.seed) {
    if (policy.kind == SamplePolicy::Kind::Random && policy.granularity == 0) {
      throw ParameterError("sampling granularity must be positive");
    }
  }

  Time operator()(const Time& lo, const Time& hi) {
    switch (policy_.kind) {
      case SamplePolicy::Kind::Eager:
        return lo;
      case SamplePolicy::Kind::Lazy:
        return hi;
      case SamplePolicy::Kind::Random:
        break;
    }
    // Grid lo + k/g for k = 0..steps, plus hi itself when it is off the grid.
    const mpq_class span = (hi - lo).value() * mpz_class(std::to_string(policy_.granularity));
    const mpz_class steps_z = span.get_num() / span.get_den();
    if (!steps_z.fits_ulong_p()) throw ParameterError("delay range too wide for the granularity");
    const std::uint64_t steps = steps_z.get_ui();
    const bool hi_on_grid = span.get_den() == 1;
    const std::uint64_t k = rng_.between(0, hi_on_grid ? steps : steps + 1);
    if (k > steps) return hi;
    return lo + Time(mpq_class(mpz_class(std::to_string(k)),
                               mpz_class(std::to_string(policy_.granularity))));
  }

 private:
  SamplePolicy policy_;
  detail::Rng rng_;
};

}  // namespace

Signal nidb_sample(const Signal& i, const DelayParams& p, const SamplePolicy& policy) {
  p.validate();
  DelayDraw draw(policy);
  const auto ones = one_set(i).intervals();
  const auto zeros = one_set(~i.fn()).intervals();

  // The output alternates between waiting on 1-runs (to rise) and 0-runs (to
  // fall). A run that ends before the drawn delay elapses cancels the switch.
  std::vector<std::pair<Time, Bit>> changes;
  std::optional<Time> last;
  std::size_t oi = 0;
  std::size_t zi = 0;
  Bit state = false;
  while (true) {
    const auto& runs = state ? zeros : ones;
    std::size_t& cursor = state ? zi : oi;
    const Time& dmin = state ? p.fall_min : p.rise_min;
    const Time& dmax = state ? p.fall_max : p.rise_max;
    bool switched = false;
    for (; cursor < runs.size(); ++cursor) {
      const Interval& run = runs[cursor];
      if (!run.lo.finite() || (last && *run.lo.at < *last)) continue;
      const Time at = *run.lo.at + draw(dmin, dmax);
      if (run.hi.finite() && *run.hi.at < at) continue;
      state = !state;
      last = at;
      changes.emplace_back(at, state);
      ++cursor;
      switched = true;
      break;
    }
    if (!switched) break;
  }

  Signal o = Signal::from_changes(changes);
  if (Report check = nidb_verify(i, o, p, NidbForm::A); !check.passed()) {
    throw std::logic_error("sampled output is not admissible at t=" +
                           check.violations().front().witness.str() + ": " +
                           check.violations().front().clause);
  }
  return o;
}

}  // namespace sigcalc
