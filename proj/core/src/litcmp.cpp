#include "sigcalc/litcmp.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "rng.hpp"
#include "sigcalc/errors.hpp"
#include "sigcalc/waveio.hpp"
#include "sigcalc/window.hpp"

namespace sigcalc {

std::string_view to_string(LitCond cond) {
  switch (cond) {
    case LitCond::A:
      return "5.1a";
    case LitCond::B:
      return "5.1b";
    case LitCond::C:
      return "5.1c";
  }
  return "?";
}

std::optional<LitCond> parse_lit_cond(std::string_view text) {
  for (LitCond c : {LitCond::A, LitCond::B, LitCond::C}) {
    const std::string_view id = to_string(c);
    if (text == id || text == id.substr(id.size() - 1)) return c;
  }
  return std::nullopt;
}

namespace {

// Input switch at t held (no opposite switch) on (t, t + d_max) must be
// followed by an output switch somewhere in [t + d_min, t + d_max].
void require_response(Report& r, const StepFn& trigger, const StepFn& opposite,
                      const StepFn& response, const Time& dmin, const Time& dmax,
                      const std::string& label) {
  const StepFn held = window_over(WindowMode::All, ~opposite, {Time(0), false}, {dmax, false});
  const StepFn answered = window_over(WindowMode::Any, response, {dmin, true}, {dmax, true});
  const StepFn missed = trigger & held & ~answered;
  for (const Time& t : component_witnesses(missed)) {
    r.add({t + dmax, false, false,
           label + ": input switch at t=" + t.str() + " held on (t, t+" + dmax.str() +
               ") but no output switch in [t+" + dmin.str() + ", t+" + dmax.str() + "]"});
  }
}

}  // namespace

Report lit_verify(const Signal& i, const Signal& o, const DelayParams& p, LitCond cond) {
  p.validate();
  Report r(std::string(to_string(cond)));
  switch (cond) {
    case LitCond::A: {
      const StepFn early =
          indicator(IntervalSet::from_intervals({{Bound::infinite(), Bound::open(p.rise_min)}}));
      r.require_leq(o.fn() & early, StepFn::constant(false), "5.1a: o = 0 for t < d_r,min");
      break;
    }
    case LitCond::B: {
      const auto out = semi_derivatives(o);
      r.require_leq(out.rise, window_since_rise(i, p.rise_max, p.rise_min),
                    "5.1b.rise: o rises only if i rose at some t' in [t-d_r,max, t-d_r,min] "
                    "and stayed 1 on [t', t)");
      r.require_leq(out.fall, window_since_rise(~i.fn(), p.fall_max, p.fall_min),
                    "5.1b.fall: o falls only if i fell at some t' in [t-d_f,max, t-d_f,min] "
                    "and stayed 0 on [t', t)");
      break;
    }
    case LitCond::C: {
      const auto in = semi_derivatives(i);
      const auto out = semi_derivatives(o);
      require_response(r, in.rise, in.fall, out.rise, p.rise_min, p.rise_max, "5.1c.rise");
      require_response(r, in.fall, in.rise, out.fall, p.fall_min, p.fall_max, "5.1c.fall");
      r.sort_by_witness();
      break;
    }
  }
  return r;
}

Report run_condition(std::string_view id, const Signal& i, const Signal& o, const DelayParams& p) {
  if (id == "4.1a") return nidb_verify(i, o, p, NidbForm::A);
  if (id == "4.1b") return nidb_verify(i, o, p, NidbForm::B);
  if (id == "5.1a") return lit_verify(i, o, p, LitCond::A);
  if (id == "5.1b") return lit_verify(i, o, p, LitCond::B);
  if (id == "5.1c") return lit_verify(i, o, p, LitCond::C);
  throw ParameterError("unknown condition '" + std::string(id) + "'");
}

bool FixtureOutcome::all_match() const {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.matches; });
}

Fixture counterexample_53(const DelayParams& p) {
  p.validate();
  return {"5.3",
          Signal::from_set("[0,inf)"),
          Signal(),
          p,
          {{"5.1b", Verdict::Pass, std::nullopt},
           {"4.1a", Verdict::Fail, Interval::point(p.rise_max)}}};
}

Fixture counterexample(std::string_view id) {
  if (id == "5.3") return counterexample_53({Time(1), Time(2), Time(1), Time(2)});
  if (id == "5.4") {
    return {"5.4",
            Signal::from_set("[1,2)"),
            Signal(),
            DelayParams::uniform(Time(2)),
            {{"4.1a", Verdict::Pass, std::nullopt},
             {"5.1c", Verdict::Fail, Interval{Bound::open(Time(2)), Bound::closed_at(Time(4))}}}};
  }
  throw ParameterError("unknown counterexample '" + std::string(id) + "' (expected 5.3 or 5.4)");
}

FixtureOutcome run_fixture(const Fixture& fixture) {
  FixtureOutcome outcome;
  for (const auto& e : fixture.expected) {
    Report actual = run_condition(e.condition, fixture.input, fixture.output, fixture.params);
    bool matches = actual.verdict() == e.verdict;
    if (matches && e.witness_in) {
      const auto w = actual.earliest_witness();
      matches = w && e.witness_in->contains(*w);
    }
    outcome.checks.push_back({e, std::move(actual), matches});
  }
  return outcome;
}

// --- fuzz campaign ------------------------------------------------------------

void FuzzConfig::validate() const {
  if (trials == 0) throw ParameterError("fuzz campaign needs at least one trial");
  if (granularity == 0) throw ParameterError("granularity must be positive");
  if (!(Time(0) < horizon)) throw ParameterError("horizon must be positive");
  if (!(Time(0) < max_delay)) throw ParameterError("max_delay must be positive");
}

const ClaimTally* FuzzReport::claim(std::string_view name) const {
  for (const auto& c : claims) {
    if (c.claim == name) return &c;
  }
  return nullptr;
}

namespace {

Time grid_time(std::uint64_t k, std::uint64_t granularity) {
  return Time(mpq_class(mpz_class(std::to_string(k)), mpz_class(std::to_string(granularity))));
}

// Positive multiple of 1/granularity in (0, max_delay].
Time draw_delay(detail::Rng& rng, const FuzzConfig& cfg) {
  const mpq_class span = cfg.max_delay.value() * mpz_class(std::to_string(cfg.granularity));
  const std::uint64_t top = std::max<std::uint64_t>(1, mpz_class(span.get_num() / span.get_den()).get_ui());
  return grid_time(rng.between(1, top), cfg.granularity);
}

DelayParams draw_params(detail::Rng& rng, const FuzzConfig& cfg) {
  Time a = draw_delay(rng, cfg);
  Time b = draw_delay(rng, cfg);
  Time c = draw_delay(rng, cfg);
  Time d = draw_delay(rng, cfg);
  if (b < a) std::swap(a, b);
  if (d < c) std::swap(c, d);
  return {a, b, c, d};
}

// Moves, drops or inserts switches of a candidate output.
Signal perturb(const Signal& o, detail::Rng& rng, const FuzzConfig& cfg) {
  auto times = o.fn().breakpoint_times();
  const std::uint64_t kind = times.empty() ? 2 : rng.below(3);
  if (kind == 0) {
    const std::size_t k = rng.below(times.size());
    const Time step = grid_time(rng.between(1, 2 * cfg.granularity), cfg.granularity);
    times[k] = rng.coin() ? times[k] + step : times[k] - step;
    if (times[k] < Time(0)) times[k] = Time(0);
  } else if (kind == 1) {
    const std::size_t k = rng.below(times.size());
    times.erase(times.begin() + static_cast<std::ptrdiff_t>(k),
                times.begin() + static_cast<std::ptrdiff_t>(std::min(k + 2, times.size())));
  } else {
    const mpq_class span = cfg.horizon.value() * mpz_class(std::to_string(cfg.granularity));
    const Time at = grid_time(rng.between(0, mpz_class(span.get_num() / span.get_den()).get_ui()),
                              cfg.granularity);
    const Time width = grid_time(rng.between(1, 2 * cfg.granularity), cfg.granularity);
    times.push_back(at);
    times.push_back(at + width);
  }
  // Toggle semantics: each time flips the value, duplicates cancel.
  std::sort(times.begin(), times.end());
  std::vector<std::pair<Time, Bit>> changes;
  Bit value = false;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (k + 1 < times.size() && times[k] == times[k + 1]) {
      ++k;
      continue;
    }
    value = !value;
    changes.emplace_back(times[k], value);
  }
  return Signal::from_changes(changes);
}

struct TrialOutcome {
  std::array<bool, 4> checked{};
  std::array<bool, 4> confirmed{};
  std::vector<Refutation> refutations;
  bool strict = false;
  std::optional<Refutation> strict_example;
};

enum Claim : std::size_t { kImplication, kNidbForms, kDidbForms, kIdentities };

TrialOutcome run_trial(const FuzzConfig& cfg, std::uint64_t index) {
  detail::Rng rng(detail::mix_seed(cfg.seed, index));
  TrialOutcome out;
  const Signal i = random_signal({cfg.horizon, cfg.max_switches, cfg.granularity, rng.below(UINT64_MAX)});
  const DelayParams p = draw_params(rng, cfg);

  // Half the outputs are admissible samples (some perturbed), half unrelated.
  Signal o;
  switch (rng.below(4)) {
    case 0:
      o = nidb_sample(i, p, SamplePolicy::random(rng.below(UINT64_MAX), cfg.granularity));
      break;
    case 1:
      o = perturb(nidb_sample(i, p, SamplePolicy::random(rng.below(UINT64_MAX), cfg.granularity)),
                  rng, cfg);
      break;
    case 2:
      o = random_signal({cfg.horizon, cfg.max_switches, cfg.granularity, rng.below(UINT64_MAX)});
      break;
    default:
      o = rng.coin() ? Signal() : random_signal({cfg.horizon, 2, cfg.granularity, rng.below(UINT64_MAX)});
      break;
  }

  auto refute = [&](Claim c, std::string_view name, const Signal& oo, const DelayParams& pp,
                    std::string detail) {
    out.refutations.push_back({std::string(name), index, i, oo, pp, std::move(detail)});
    out.confirmed[c] = false;
  };

  // 5.2 and 4.1 on (i, o, p).
  const bool nidb_a = nidb_verify(i, o, p, NidbForm::A).passed();
  const bool nidb_b = nidb_verify(i, o, p, NidbForm::B).passed();
  const bool lit_b = lit_verify(i, o, p, LitCond::B).passed();
  out.checked[kImplication] = out.confirmed[kImplication] = true;
  if (nidb_a && !lit_b) refute(kImplication, kClaimImplication, o, p, "4.1a passes, 5.1b fails");
  out.checked[kNidbForms] = out.confirmed[kNidbForms] = true;
  if (nidb_a != nidb_b) {
    refute(kNidbForms, kClaimNidbForms, o, p,
           std::string("4.1a ") + (nidb_a ? "passes" : "fails") + ", 4.1b " +
               (nidb_b ? "passes" : "fails"));
  }
  if (lit_b && !nidb_a) {
    out.strict = true;
    out.strict_example = Refutation{"5.1b holds, 4.1a fails", index, i, o, p, ""};
  }

  // 4.3 on deterministic delays: the simulator output, a perturbation of it,
  // or an unrelated signal.
  const DetParams dp{draw_delay(rng, cfg), draw_delay(rng, cfg)};
  Signal od = didb_simulate(i, dp);
  const std::uint64_t variant = rng.below(3);
  if (variant == 1) od = perturb(od, rng, cfg);
  if (variant == 2) od = random_signal({cfg.horizon, cfg.max_switches, cfg.granularity, rng.below(UINT64_MAX)});
  std::string verdicts;
  int passes = 0;
  for (DidbForm f : {DidbForm::A, DidbForm::B, DidbForm::C, DidbForm::D, DidbForm::E}) {
    const bool ok = didb_verify(i, od, dp, f).passed();
    passes += ok ? 1 : 0;
    verdicts += std::string(to_string(f)) + (ok ? "=pass " : "=fail ");
  }
  out.checked[kDidbForms] = out.confirmed[kDidbForms] = true;
  if (passes != 0 && passes != 5) refute(kDidbForms, kClaimDidbForms, od, dp.as_bounds(), verdicts);
  if (variant == 0 && passes != 5) {
    refute(kDidbForms, kClaimDidbForms, od, dp.as_bounds(), "simulator output rejected: " + verdicts);
  }

  // 4.6 on (i, d).
  const Time d = draw_delay(rng, cfg);
  const StepFn quiet = window(WindowMode::All, ~derivative(i), d, WindowKind::OO);
  const StepFn old = left_limit(i);
  out.checked[kIdentities] = out.confirmed[kIdentities] = true;
  if (window(WindowMode::All, i, d) != (old & quiet)) {
    refute(kIdentities, kClaimIdentities, i, DelayParams::uniform(d), "prod i != i(t-0) prod Di'");
  }
  if (window(WindowMode::All, ~i.fn(), d) != (~old & quiet)) {
    refute(kIdentities, kClaimIdentities, i, DelayParams::uniform(d), "prod i' != i(t-0)' prod Di'");
  }
  return out;
}

}  // namespace

FuzzReport fuzz_claims(const FuzzConfig& config) {
  config.validate();
  std::vector<TrialOutcome> outcomes(config.trials);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(config.trials)));
  if (workers == 1) {
    for (std::uint64_t k = 0; k < config.trials; ++k) outcomes[k] = run_trial(config, k);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t k = w; k < config.trials; k += workers) outcomes[k] = run_trial(config, k);
      });
    }
  }

  FuzzReport report;
  report.trials = config.trials;
  report.seed = config.seed;
  const std::array<std::string_view, 4> names{kClaimImplication, kClaimNidbForms, kClaimDidbForms,
                                              kClaimIdentities};
  for (auto name : names) report.claims.push_back({std::string(name), 0, 0});
  for (auto& t : outcomes) {
    for (std::size_t c = 0; c < names.size(); ++c) {
      report.claims[c].checked += t.checked[c] ? 1 : 0;
      report.claims[c].confirmed += t.confirmed[c] ? 1 : 0;
    }
    for (auto& x : t.refutations) report.refutations.push_back(std::move(x));
    if (t.strict) {
      ++report.strict_count;
      if (!report.strict_example) report.strict_example = std::move(t.strict_example);
    }
  }
  return report;
}

}  // namespace sigcalc
