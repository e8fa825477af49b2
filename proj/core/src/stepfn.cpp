#include "sigcalc/stepfn.hpp"

#include <algorithm>

#include "sigcalc/errors.hpp"
#include "sigcalc/interval_set.hpp"

namespace sigcalc {

StepFn StepFn::constant(Bit value) {
  StepFn f;
  f.before_ = value;
  return f;
}

StepFn StepFn::from_pieces(Bit before, std::vector<Breakpoint> pieces) {
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    if (!(pieces[k - 1].at < pieces[k].at)) {
      throw ConstructionError("breakpoint times must be strictly increasing (" +
                              pieces[k - 1].at.str() + " then " + pieces[k].at.str() + ")");
    }
  }
  StepFn f;
  f.before_ = before;
  Bit previous = before;
  for (auto& bp : pieces) {
    if (bp.point != previous || bp.point != bp.after) {
      previous = bp.after;
      f.pieces_.push_back(std::move(bp));
    }
  }
  return f;
}

namespace {

// Index of the first breakpoint with time >= t.
std::size_t lower_index(std::span<const Breakpoint> pieces, const Time& t) {
  auto it = std::lower_bound(pieces.begin(), pieces.end(), t,
                             [](const Breakpoint& bp, const Time& x) { return bp.at < x; });
  return static_cast<std::size_t>(it - pieces.begin());
}

}  // namespace

Bit StepFn::operator()(const Time& t) const {
  const std::size_t k = lower_index(pieces_, t);
  if (k < pieces_.size() && pieces_[k].at == t) return pieces_[k].point;
  return k == 0 ? before_ : pieces_[k - 1].after;
}

Bit StepFn::right_limit(const Time& t) const {
  const std::size_t k = lower_index(pieces_, t);
  if (k < pieces_.size() && pieces_[k].at == t) return pieces_[k].after;
  return k == 0 ? before_ : pieces_[k - 1].after;
}

Bit StepFn::left_limit_at(const Time& t) const {
  const std::size_t k = lower_index(pieces_, t);
  return k == 0 ? before_ : pieces_[k - 1].after;
}

std::vector<Time> StepFn::breakpoint_times() const {
  std::vector<Time> out;
  out.reserve(pieces_.size());
  for (const auto& bp : pieces_) out.push_back(bp.at);
  return out;
}

namespace {

template <typename Op>
StepFn map_values(const StepFn& f, Op op) {
  std::vector<Breakpoint> out;
  out.reserve(f.breakpoints().size());
  for (const auto& bp : f.breakpoints()) out.push_back({bp.at, op(bp.point), op(bp.after)});
  return StepFn::from_pieces(op(f.before()), std::move(out));
}

// Merge sweep over the union of both breakpoint sets.
template <typename Op>
StepFn combine(const StepFn& f, const StepFn& g, Op op) {
  const auto fb = f.breakpoints();
  const auto gb = g.breakpoints();
  std::vector<Breakpoint> out;
  out.reserve(fb.size() + gb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Bit fcur = f.before();
  Bit gcur = g.before();
  while (i < fb.size() || j < gb.size()) {
    const bool take_f = j == gb.size() || (i < fb.size() && !(gb[j].at < fb[i].at));
    const bool take_g = i == fb.size() || (j < gb.size() && !(fb[i].at < gb[j].at));
    const Time& t = take_f ? fb[i].at : gb[j].at;
    Bit fp = fcur;
    Bit gp = gcur;
    if (take_f) {
      fp = fb[i].point;
      fcur = fb[i].after;
    }
    if (take_g) {
      gp = gb[j].point;
      gcur = gb[j].after;
    }
    out.push_back({t, op(fp, gp), op(fcur, gcur)});
    if (take_f) ++i;
    if (take_g) ++j;
  }
  return StepFn::from_pieces(op(f.before(), g.before()), std::move(out));
}

}  // namespace

StepFn operator~(const StepFn& f) {
  return map_values(f, [](Bit b) { return !b; });
}

StepFn operator&(const StepFn& f, const StepFn& g) {
  return combine(f, g, [](Bit a, Bit b) { return a && b; });
}

StepFn operator|(const StepFn& f, const StepFn& g) {
  return combine(f, g, [](Bit a, Bit b) { return a || b; });
}

StepFn operator^(const StepFn& f, const StepFn& g) {
  return combine(f, g, [](Bit a, Bit b) { return a != b; });
}

StepFn implies(const StepFn& f, const StepFn& g) {
  return combine(f, g, [](Bit a, Bit b) { return !a || b; });
}

StepFn pointwise(BoolOp op, const StepFn& f, const std::optional<StepFn>& g) {
  if (op == BoolOp::Not) return ~f;
  if (!g) throw ParameterError("binary pointwise operation needs two operands");
  switch (op) {
    case BoolOp::And:
      return f & *g;
    case BoolOp::Or:
      return f | *g;
    case BoolOp::Xor:
      return f ^ *g;
    case BoolOp::Implies:
      return implies(f, *g);
    case BoolOp::Not:
      break;
  }
  return ~f;
}

StepFn left_limit(const StepFn& f) {
  std::vector<Breakpoint> out;
  out.reserve(f.breakpoints().size());
  Bit previous = f.before();
  for (const auto& bp : f.breakpoints()) {
    out.push_back({bp.at, previous, bp.after});
    previous = bp.after;
  }
  return StepFn::from_pieces(f.before(), std::move(out));
}

StepFn derivative(const StepFn& f) { return left_limit(f) ^ f; }

SemiDerivatives semi_derivatives(const StepFn& f) {
  const StepFn old_value = left_limit(f);
  return {~old_value & f, old_value & ~f};
}

StepFn shift(const StepFn& f, const Time& offset) {
  std::vector<Breakpoint> out;
  out.reserve(f.breakpoints().size());
  for (const auto& bp : f.breakpoints()) out.push_back({bp.at - offset, bp.point, bp.after});
  return StepFn::from_pieces(f.before(), std::move(out));
}

LeqResult leq(const StepFn& f, const StepFn& g, const Time& from) {
  const StepFn bad = f & ~g;
  const auto witnesses = component_witnesses(bad, from);
  if (witnesses.empty()) return {};
  const Time& t = witnesses.front();
  return {false, LeqWitness{t, f(t), g(t)}};
}

}  // namespace sigcalc
