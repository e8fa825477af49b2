#include <gtest/gtest.h>

#include "printers.hpp"
#include "generators.hpp"
#include "oracle.hpp"
#include "sigcalc/errors.hpp"
#include "sigcalc/interval_set.hpp"
#include "sigcalc/stepfn.hpp"

using namespace sigcalc;

namespace {

// x of the worked example: 1 on [0,1) u [2,3).
StepFn example_x() { return indicator("[0,1) u [2,3)"); }

}  // namespace

TEST(Canonical, EmptyInputIsConstantZero) {
  const StepFn f = StepFn::from_pieces(false, {});
  EXPECT_TRUE(f.is_constant());
  EXPECT_EQ(f, StepFn::constant(false));
}

TEST(Canonical, ExampleSignalFromPieces) {
  const StepFn f = StepFn::from_pieces(false, {{Time(0), true, true},
                                                {Time(1), false, false},
                                                {Time(2), true, true},
                                                {Time(3), false, false}});
  EXPECT_EQ(f, example_x());
  EXPECT_EQ(f.breakpoints().size(), 4u);
}

TEST(Canonical, RemovableBreakpointElided) {
  const StepFn f = StepFn::from_pieces(true, {{Time(5), true, true}});
  EXPECT_TRUE(f.is_constant());
  EXPECT_EQ(f, StepFn::constant(true));
}

TEST(Canonical, RejectsNonIncreasingTimes) {
  EXPECT_THROW(StepFn::from_pieces(false, {{Time(1), true, true}, {Time(1), false, false}}),
               ConstructionError);
  EXPECT_THROW(StepFn::from_pieces(false, {{Time(2), true, true}, {Time(1), false, false}}),
               ConstructionError);
}

TEST(Canonical, IdempotentAndUniqueUnderRandomRefinement) {
  gen::Source src(11);
  for (int trial = 0; trial < 300; ++trial) {
    const StepFn f = src.stepfn();
    EXPECT_EQ(StepFn::from_pieces(f.before(), {f.breakpoints().begin(), f.breakpoints().end()}), f);
    // Insert redundant breakpoints; the canonical result must not change.
    std::vector<Breakpoint> padded(f.breakpoints().begin(), f.breakpoints().end());
    for (int k = 0; k < 3; ++k) {
      const Time t = src.grid(src.uniform(-20, 60)) + Time(1, 7);
      padded.push_back({t, f(t), f(t)});
    }
    std::sort(padded.begin(), padded.end(),
              [](const Breakpoint& a, const Breakpoint& b) { return a.at < b.at; });
    padded.erase(std::unique(padded.begin(), padded.end(),
                             [](const Breakpoint& a, const Breakpoint& b) { return a.at == b.at; }),
                 padded.end());
    EXPECT_EQ(StepFn::from_pieces(f.before(), padded), f);
  }
}

TEST(Eval, ExampleValues) {
  const StepFn x = example_x();
  EXPECT_TRUE(x(Time(1, 2)));
  EXPECT_FALSE(x(Time(3, 2)));
  EXPECT_TRUE(x(Time(0)));
  EXPECT_FALSE(x(Time(1)));
  EXPECT_FALSE(x(Time(-1)));
  EXPECT_FALSE(x(Time(100)));
}

TEST(Eval, PointValueIndependentOfNeighbours) {
  const StepFn f = StepFn::from_pieces(true, {{Time(1), false, true}});
  EXPECT_TRUE(f(Time(0)));
  EXPECT_FALSE(f(Time(1)));
  EXPECT_TRUE(f(Time(2)));
  EXPECT_TRUE(f.right_limit(Time(1)));
  EXPECT_TRUE(f.left_limit_at(Time(1)));
}

TEST(Pointwise, Examples) {
  const StepFn f = indicator("[0,1)");
  EXPECT_EQ(~~f, f);
  EXPECT_EQ(f & ~f, StepFn::constant(false));
  EXPECT_EQ(pointwise(BoolOp::Xor, indicator("[0,2)"), indicator("[1,3)")), example_x());
  EXPECT_EQ(pointwise(BoolOp::Implies, f, StepFn::constant(false)), ~f);
  EXPECT_THROW(pointwise(BoolOp::And, f), ParameterError);
}

TEST(Pointwise, XorExampleAgreesWithGridEvaluation) {
  const StepFn lhs = indicator("[0,2)") ^ indicator("[1,3)");
  for (Time t(-1); t <= Time(4); t += Time(1, 4)) {
    const bool expected = (Time(0) <= t && t < Time(1)) || (Time(2) <= t && t < Time(3));
    EXPECT_EQ(lhs(t), expected) << t;
  }
}

TEST(Pointwise, BooleanLawsHoldForRandomFunctions) {
  gen::Source src(7);
  for (int trial = 0; trial < 300; ++trial) {
    const StepFn f = src.stepfn();
    const StepFn g = src.stepfn();
    const StepFn h = src.stepfn();
    EXPECT_EQ(~~f, f);
    EXPECT_EQ(~(f & g), ~f | ~g);
    EXPECT_EQ(~(f | g), ~f & ~g);
    EXPECT_EQ(f | (f & g), f);
    EXPECT_EQ(f & (f | g), f);
    EXPECT_EQ(f & (g | h), (f & g) | (f & h));
    EXPECT_EQ(f ^ g, (f & ~g) | (~f & g));
    EXPECT_EQ(implies(f, g), ~f | g);
    EXPECT_EQ(f ^ f, StepFn::constant(false));
    // Breakpoints of the result come from the operands.
    auto ts = oracle::times_of(f);
    auto gs = oracle::times_of(g);
    const StepFn both = f & g;
    for (const auto& bp : both.breakpoints()) {
      EXPECT_TRUE(std::find(ts.begin(), ts.end(), bp.at) != ts.end() ||
                  std::find(gs.begin(), gs.end(), bp.at) != gs.end());
    }
  }
}

TEST(LeftLimit, Examples) {
  EXPECT_EQ(left_limit(example_x()), indicator("(0,1] u (2,3]"));
  EXPECT_EQ(left_limit(StepFn::constant(false)), StepFn::constant(false));
  EXPECT_EQ(left_limit(indicator("[2,inf)")), indicator("(2,inf)"));
}

TEST(LeftLimit, IdempotentAndKeepsIntervalValues) {
  gen::Source src(3);
  for (int trial = 0; trial < 300; ++trial) {
    const StepFn f = src.stepfn();
    const StepFn l = left_limit(f);
    EXPECT_EQ(left_limit(l), l);
    for (const auto& bp : f.breakpoints()) {
      EXPECT_EQ(l.right_limit(bp.at), f.right_limit(bp.at));
      EXPECT_EQ(l(bp.at), oracle::left_limit_at(f, bp.at));
    }
  }
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(example_x()), indicator("{0,1,2,3}"));
  EXPECT_EQ(derivative(StepFn::constant(true)), StepFn::constant(false));
  EXPECT_EQ(derivative(indicator("[2,inf)")), indicator("{2}"));
}

TEST(SemiDerivatives, Examples) {
  auto s = semi_derivatives(example_x());
  EXPECT_EQ(s.rise, indicator("{0,2}"));
  EXPECT_EQ(s.fall, indicator("{1,3}"));
  s = semi_derivatives(StepFn::constant(true));
  EXPECT_EQ(s.rise, StepFn::constant(false));
  EXPECT_EQ(s.fall, StepFn::constant(false));
  s = semi_derivatives(indicator("[5,inf)"));
  EXPECT_EQ(s.rise, indicator("{5}"));
  EXPECT_EQ(s.fall, StepFn::constant(false));
}

TEST(SemiDerivatives, DecomposeTheDerivative) {
  gen::Source src(5);
  for (int trial = 0; trial < 300; ++trial) {
    const StepFn f = src.stepfn();
    const auto s = semi_derivatives(f);
    EXPECT_EQ(s.rise | s.fall, derivative(f));
    EXPECT_EQ(s.rise & s.fall, StepFn::constant(false));
  }
}

TEST(Shift, MovesBreakpoints) {
  EXPECT_EQ(shift(indicator("[0,1)"), Time(2)), indicator("[-2,-1)"));
  EXPECT_EQ(shift(indicator("[0,1)"), Time(-1, 2)), indicator("[1/2,3/2)"));
}

TEST(Leq, Examples) {
  const StepFn f = example_x();
  EXPECT_TRUE(leq(f, f));
  EXPECT_TRUE(leq(indicator("[0,1)"), StepFn::constant(true)));
  const LeqResult r = leq(indicator("[0,2)"), indicator("[0,1)"));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness->at, Time(1));
  EXPECT_TRUE(r.witness->lhs);
  EXPECT_FALSE(r.witness->rhs);
}

TEST(Leq, OpenIntervalWitnessIsMidpoint) {
  const LeqResult r = leq(indicator("(1,2)"), StepFn::constant(false));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness->at, Time(3, 2));
  const LeqResult tail = leq(indicator("(4,inf)"), StepFn::constant(false));
  EXPECT_EQ(tail.witness->at, Time(5));
}

TEST(Leq, OnlyTimesFromZeroCount) {
  EXPECT_TRUE(leq(indicator("[-3,0)"), StepFn::constant(false)));
  const LeqResult r = leq(indicator("(-1,1)"), StepFn::constant(false));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness->at, Time(0));
}

TEST(Leq, AgreesWithPointwiseCheckOnGrid) {
  gen::Source src(17);
  for (int trial = 0; trial < 300; ++trial) {
    const StepFn f = src.stepfn();
    const StepFn g = src.stepfn();
    const LeqResult r = leq(f, g);
    bool violated = false;
    auto relevant = oracle::times_of(f);
    auto gt = oracle::times_of(g);
    relevant.insert(relevant.end(), gt.begin(), gt.end());
    relevant.push_back(Time(0));
    for (const Time& t : oracle::dense_grid(relevant, Time(2))) {
      if (!(t < Time(0)) && f(t) && !g(t)) violated = true;
    }
    EXPECT_EQ(r.holds, !violated);
    if (!r.holds) {
      EXPECT_TRUE(f(r.witness->at) && !g(r.witness->at));
      EXPECT_GE(r.witness->at, Time(0));
    }
  }
}
