#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "printers.hpp"
#include "sigcalc/errors.hpp"
#include "sigcalc/litcmp.hpp"

using namespace sigcalc;

namespace {

Signal sig(std::string_view set) { return Signal::from_set(set); }

// Instants where x switches to `to`, found by probing its breakpoints.
std::vector<Time> switches_to(const Signal& x, Bit to) {
  std::vector<Time> out;
  for (const Time& t : oracle::times_of(x)) {
    if (x(t) == to && oracle::left_limit_at(x, t) != to) out.push_back(t);
  }
  return out;
}

bool has_switch_in(const Signal& x, Bit to, const Time& lo, bool lo_closed, const Time& hi) {
  for (const Time& t : switches_to(x, to)) {
    if ((lo < t || (lo_closed && lo == t)) && t <= hi) return true;
  }
  return false;
}

// Condition b: every output switch to v at s has an input switch to v at
// some t' in [s - max, s - min] with the input held at v on [t', s).
bool oracle_b(const Signal& i, const Signal& o, const DelayParams& p) {
  for (Bit v : {true, false}) {
    const Time& lo = v ? p.rise_min : p.fall_min;
    const Time& hi = v ? p.rise_max : p.fall_max;
    for (const Time& s : switches_to(o, v)) {
      bool justified = false;
      for (const Time& t : switches_to(i, v)) {
        if (s - hi <= t && t <= s - lo) {
          // No opposite switch in (t, s): the input is held on [t, s).
          bool held = true;
          for (const Time& u : switches_to(i, !v)) held = held && !(t < u && u < s);
          justified = justified || held;
        }
      }
      if (!justified) return false;
    }
  }
  return true;
}

// Condition c: earliest deadline t + max of an input switch to v at t, held
// on (t, t + max), with no output switch to v in [t + min, t + max].
std::optional<Time> oracle_c(const Signal& i, const Signal& o, const DelayParams& p) {
  std::optional<Time> first;
  for (Bit v : {true, false}) {
    const Time& lo = v ? p.rise_min : p.fall_min;
    const Time& hi = v ? p.rise_max : p.fall_max;
    for (const Time& t : switches_to(i, v)) {
      bool held = true;
      for (const Time& u : switches_to(i, !v)) held = held && !(t < u && u < t + hi);
      if (held && !has_switch_in(o, v, t + lo, true, t + hi)) {
        if (!first || t + hi < *first) first = t + hi;
      }
    }
  }
  return first;
}

DelayParams random_bounds(gen::Source& src) {
  const Time rmin = src.delay(2), fmin = src.delay(2);
  return {rmin, rmin + src.grid(src.uniform(0, 8)), fmin, fmin + src.grid(src.uniform(0, 8))};
}

}  // namespace

TEST(LitVerify, Examples) {
  const DelayParams p{Time(1), Time(2), Time(1), Time(2)};
  EXPECT_TRUE(lit_verify(sig("[0,inf)"), sig("empty"), p, LitCond::B).passed());
  for (LitCond c : {LitCond::A, LitCond::B, LitCond::C}) {
    EXPECT_TRUE(lit_verify(sig("empty"), sig("empty"), p, c).passed());
  }
  const Report pulse = lit_verify(sig("[1,2)"), sig("empty"), DelayParams::uniform(Time(2)), LitCond::C);
  EXPECT_EQ(pulse.condition(), "5.1c");
  ASSERT_EQ(pulse.verdict(), Verdict::Fail);
  const Time w = *pulse.earliest_witness();
  EXPECT_TRUE(Time(2) < w && w <= Time(4)) << w;
}

TEST(LitVerify, ConditionAMatchesFirstSwitch) {
  gen::Source src(127);
  for (int trial = 0; trial < 300; ++trial) {
    const Signal o = src.signal(4, 6);
    const DelayParams p = random_bounds(src);
    const auto sw = switches_to(o, true);
    const bool expected = sw.empty() || !(sw.front() < p.rise_min);
    EXPECT_EQ(lit_verify(sig("empty"), o, p, LitCond::A).passed(), expected);
  }
}

TEST(LitVerify, ConditionBMatchesSwitchEnumeration) {
  gen::Source src(131);
  int failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Signal i = src.signal(6, 8);
    const DelayParams p = random_bounds(src);
    const Signal o = src.coin() ? src.signal(4, 10) : nidb_sample(i, p, SamplePolicy::random(trial));
    const bool expected = oracle_b(i, o, p);
    EXPECT_EQ(lit_verify(i, o, p, LitCond::B).passed(), expected)
        << "i=" << one_set(i).str() << " o=" << one_set(o).str();
    failures += expected ? 0 : 1;
  }
  EXPECT_GT(failures, 50);
}

TEST(LitVerify, ConditionCMatchesSwitchEnumeration) {
  gen::Source src(137);
  int failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Signal i = src.signal(6, 8);
    const DelayParams p = random_bounds(src);
    const Signal o = src.coin() ? src.signal(4, 10) : nidb_sample(i, p, SamplePolicy::random(trial));
    const std::optional<Time> expected = oracle_c(i, o, p);
    const Report r = lit_verify(i, o, p, LitCond::C);
    EXPECT_EQ(r.earliest_witness(), expected) << "i=" << one_set(i).str() << " o=" << one_set(o).str();
    failures += expected ? 1 : 0;
  }
  EXPECT_GT(failures, 50);
}

TEST(LitVerify, ParseConditionIds) {
  EXPECT_EQ(parse_lit_cond("b"), LitCond::B);
  EXPECT_EQ(parse_lit_cond("5.1c"), LitCond::C);
  EXPECT_FALSE(parse_lit_cond("d").has_value());
  EXPECT_THROW(run_condition("4.2", sig("empty"), sig("empty"), DelayParams::uniform(Time(1))),
               ParameterError);
}

TEST(Counterexample, HeldInputWithNullOutput) {
  const Fixture f = counterexample("5.3");
  EXPECT_EQ(f.input, sig("[0,inf)"));
  EXPECT_EQ(f.output, sig("empty"));
  const FixtureOutcome out = run_fixture(f);
  EXPECT_TRUE(out.all_match());
  const Report nidb = nidb_verify(f.input, f.output, f.params, NidbForm::A);
  EXPECT_EQ(nidb.earliest_witness(), f.params.rise_max);
  EXPECT_TRUE(lit_verify(f.input, f.output, f.params, LitCond::B).passed());
}

TEST(Counterexample, HeldInputUnderOtherBounds) {
  gen::Source src(139);
  for (int trial = 0; trial < 50; ++trial) {
    const DelayParams p = random_bounds(src);
    const FixtureOutcome out = run_fixture(counterexample_53(p));
    EXPECT_TRUE(out.all_match());
    EXPECT_EQ(nidb_verify(sig("[0,inf)"), sig("empty"), p, NidbForm::A).earliest_witness(), p.rise_max);
  }
}

TEST(Counterexample, FilteredPulse) {
  const Fixture f = counterexample("5.4");
  EXPECT_EQ(f.params, DelayParams::uniform(Time(2)));
  EXPECT_TRUE(run_fixture(f).all_match());
  EXPECT_TRUE(nidb_verify(f.input, f.output, f.params, NidbForm::A).passed());
  EXPECT_FALSE(lit_verify(f.input, f.output, f.params, LitCond::C).passed());
  EXPECT_THROW(counterexample("5.5"), ParameterError);
}

TEST(FuzzClaims, RejectsEmptyCampaign) {
  FuzzConfig cfg;
  cfg.trials = 0;
  EXPECT_THROW(fuzz_claims(cfg), ParameterError);
}

TEST(FuzzClaims, DefaultCampaignHasNoRefutationsAndShowsStrictness) {
  const FuzzReport r = fuzz_claims(FuzzConfig{});
  EXPECT_EQ(r.trials, 1000u);
  EXPECT_TRUE(r.passed()) << (r.refutations.empty() ? "" : r.refutations.front().detail);
  for (std::string_view name : {kClaimImplication, kClaimNidbForms, kClaimDidbForms, kClaimIdentities}) {
    const ClaimTally* c = r.claim(name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_GT(c->checked, 0u);
    EXPECT_EQ(c->checked, c->confirmed);
  }
  EXPECT_GT(r.strict_count, 0u);
  ASSERT_TRUE(r.strict_example.has_value());
  const Refutation& ex = *r.strict_example;
  EXPECT_TRUE(lit_verify(ex.input, ex.output, ex.params, LitCond::B).passed());
  EXPECT_FALSE(nidb_verify(ex.input, ex.output, ex.params, NidbForm::A).passed());
}

TEST(FuzzClaims, ReplayIsIdenticalAndThreadIndependent) {
  FuzzConfig cfg;
  cfg.trials = 200;
  cfg.seed = 99;
  const FuzzReport once = fuzz_claims(cfg);
  EXPECT_EQ(fuzz_claims(cfg), once);
  cfg.threads = 4;
  EXPECT_EQ(fuzz_claims(cfg), once);
}
