#include "sigcalc/interval_set.hpp"

#include <algorithm>
#include <cctype>

#include "sigcalc/errors.hpp"

namespace sigcalc {

bool Interval::empty() const {
  if (!lo.finite() || !hi.finite()) return false;
  if (*lo.at < *hi.at) return false;
  if (*hi.at < *lo.at) return true;
  return !(lo.closed && hi.closed);
}

bool Interval::contains(const Time& t) const {
  const bool above = !lo.finite() || *lo.at < t || (*lo.at == t && lo.closed);
  const bool below = !hi.finite() || t < *hi.at || (*hi.at == t && hi.closed);
  return above && below;
}

Time Interval::witness() const {
  if (lo.finite()) {
    if (lo.closed) return *lo.at;
    return hi.finite() ? midpoint(*lo.at, *hi.at) : *lo.at + Time(1);
  }
  return hi.finite() ? *hi.at - Time(1) : Time(0);
}

std::string Interval::str() const {
  if (is_point()) return "{" + lo.at->str() + "}";
  std::string s;
  s += lo.finite() && lo.closed ? '[' : '(';
  s += lo.finite() ? lo.at->str() : "-inf";
  s += ',';
  s += hi.finite() ? hi.at->str() : "inf";
  s += hi.finite() && hi.closed ? ']' : ')';
  return s;
}

namespace {

bool lower_less(const Bound& a, const Bound& b) {
  if (!a.finite()) return b.finite();
  if (!b.finite()) return false;
  if (*a.at < *b.at) return true;
  if (*b.at < *a.at) return false;
  return a.closed && !b.closed;
}

// Upper bound `hi` reaches or touches a following lower bound `lo`.
bool touches(const Bound& hi, const Bound& lo) {
  if (!hi.finite() || !lo.finite()) return true;
  if (*lo.at < *hi.at) return true;
  return *lo.at == *hi.at && (lo.closed || hi.closed);
}

Bound upper_max(const Bound& a, const Bound& b) {
  if (!a.finite() || !b.finite()) return Bound::infinite();
  if (*a.at < *b.at) return b;
  if (*b.at < *a.at) return a;
  return {a.at, a.closed || b.closed};
}

}  // namespace

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals) {
  std::erase_if(intervals, [](const Interval& iv) { return iv.empty(); });
  std::stable_sort(intervals.begin(), intervals.end(),
                   [](const Interval& a, const Interval& b) { return lower_less(a.lo, b.lo); });
  IntervalSet set;
  for (auto& iv : intervals) {
    if (!set.intervals_.empty() && touches(set.intervals_.back().hi, iv.lo)) {
      auto& last = set.intervals_.back();
      last.hi = upper_max(last.hi, iv.hi);
    } else {
      set.intervals_.push_back(std::move(iv));
    }
  }
  return set;
}

bool IntervalSet::contains(const Time& t) const {
  // First interval that starts strictly after t.
  auto it = std::partition_point(intervals_.begin(), intervals_.end(), [&](const Interval& iv) {
    return !iv.lo.finite() || *iv.lo.at < t || (*iv.lo.at == t && iv.lo.closed);
  });
  return it != intervals_.begin() && std::prev(it)->contains(t);
}

std::string IntervalSet::str() const {
  if (intervals_.empty()) return "empty";
  std::string s;
  for (std::size_t k = 0; k < intervals_.size(); ++k) {
    if (k) s += " u ";
    s += intervals_[k].str();
  }
  return s;
}

namespace {

class IntervalParser {
 public:
  explicit IntervalParser(std::string_view text) : text_(text) {}

  IntervalSet run() {
    std::vector<Interval> out;
    skip_separators();
    if (consume_word("empty") || consume_word("\xE2\x88\x85")) {
      skip_separators();
      if (pos_ != text_.size()) fail("trailing input after 'empty'");
      return {};
    }
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '{') {
        ++pos_;
        while (true) {
          out.push_back(Interval::point(finite_time()));
          skip_spaces();
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          expect('}');
          break;
        }
      } else if (c == '[' || c == '(') {
        ++pos_;
        Interval iv;
        iv.lo = bound(c == '[', true);
        skip_spaces();
        expect(',');
        iv.hi = bound(false, false);
        skip_spaces();
        const char close = peek();
        if (close != ']' && close != ')') fail("expected ']' or ')'");
        ++pos_;
        if (iv.hi.finite()) iv.hi.closed = close == ']';
        out.push_back(std::move(iv));
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_separators();
    }
    return IntervalSet::from_intervals(std::move(out));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParameterError("interval set '" + std::string(text_) + "': " + what);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_spaces();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  void skip_separators() {
    while (true) {
      skip_spaces();
      if (consume_word("\xE2\x88\xAA")) continue;  // U+222A
      if (peek() == 'u' || peek() == 'U') {
        ++pos_;
        continue;
      }
      break;
    }
  }

  std::string_view token() {
    skip_spaces();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ',' || c == ')' || c == ']' || c == '}' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      ++pos_;
    }
    if (start == pos_) fail("expected a time");
    return text_.substr(start, pos_ - start);
  }

  Time finite_time() {
    auto tok = token();
    try {
      return Time::parse(tok);
    } catch (const ParameterError&) {
      fail("bad time '" + std::string(tok) + "'");
    }
  }

  Bound bound(bool closed, bool lower) {
    auto tok = token();
    if (tok == "inf" || tok == "+inf" || tok == "-inf") {
      if ((tok == "-inf") != lower) fail("infinity on the wrong side");
      return Bound::infinite();
    }
    try {
      return {Time::parse(tok), closed};
    } catch (const ParameterError&) {
      fail("bad time '" + std::string(tok) + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntervalSet IntervalSet::parse(std::string_view text) { return IntervalParser(text).run(); }

IntervalSet one_set(const StepFn& f) {
  std::vector<Interval> out;
  bool previous_one = false;
  auto add = [&](Interval iv, Bit value) {
    if (value) {
      if (previous_one) {
        out.back().hi = std::move(iv.hi);
      } else {
        out.push_back(std::move(iv));
      }
    }
    previous_one = value;
  };
  const auto pieces = f.breakpoints();
  if (pieces.empty()) {
    add({Bound::infinite(), Bound::infinite()}, f.before());
  } else {
    add({Bound::infinite(), Bound::open(pieces.front().at)}, f.before());
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      add(Interval::point(pieces[k].at), pieces[k].point);
      Bound hi = k + 1 < pieces.size() ? Bound::open(pieces[k + 1].at) : Bound::infinite();
      add({Bound::open(pieces[k].at), std::move(hi)}, pieces[k].after);
    }
  }
  IntervalSet set = IntervalSet::from_intervals(std::move(out));
  return set;
}

StepFn indicator(const IntervalSet& set) {
  std::vector<Time> ends;
  for (const auto& iv : set.intervals()) {
    if (iv.lo.finite()) ends.push_back(*iv.lo.at);
    if (iv.hi.finite()) ends.push_back(*iv.hi.at);
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  if (ends.empty()) return StepFn::constant(!set.empty());

  std::vector<Breakpoint> pieces;
  pieces.reserve(ends.size());
  for (std::size_t k = 0; k < ends.size(); ++k) {
    const Time inside = k + 1 < ends.size() ? midpoint(ends[k], ends[k + 1]) : ends[k] + Time(1);
    pieces.push_back({ends[k], set.contains(ends[k]), set.contains(inside)});
  }
  return StepFn::from_pieces(set.contains(ends.front() - Time(1)), std::move(pieces));
}

StepFn indicator(std::string_view text) { return indicator(IntervalSet::parse(text)); }

std::vector<Interval> components_from(const StepFn& f, const Time& from) {
  const StepFn tail = indicator(IntervalSet::from_intervals(
      {Interval{Bound::closed_at(from), Bound::infinite()}}));
  return one_set(f & tail).intervals();
}

std::vector<Time> component_witnesses(const StepFn& f, const Time& from) {
  std::vector<Time> out;
  for (const auto& iv : components_from(f, from)) out.push_back(iv.witness());
  return out;
}

}  // namespace sigcalc
