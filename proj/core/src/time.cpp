#include "sigcalc/time.hpp"

#include <cctype>
#include <ostream>

#include "sigcalc/errors.hpp"

namespace sigcalc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Time::Time(long num, long den) {
  if (den == 0) throw ParameterError("time with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Time::Time(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Time Time::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParameterError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(parse_integer(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ParameterError("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w = whole.empty() ? mpz_class(0) : parse_integer(whole);
    mpz_class f = frac.empty() ? mpz_class(0) : parse_integer(frac);
    q = mpq_class(w * scale + f, scale);
  } else {
    if (!all_digits(s)) throw ParameterError("malformed time '" + std::string(text) + "'");
    q = mpq_class(parse_integer(s));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Time(std::move(q));
}

std::string Time::str() const { return value_.get_str(); }

Time& Time::operator+=(const Time& other) {
  value_ += other.value_;
  return *this;
}

Time& Time::operator-=(const Time& other) {
  value_ -= other.value_;
  return *this;
}

Time& Time::operator*=(const Time& other) {
  value_ *= other.value_;
  return *this;
}

Time& Time::operator/=(const Time& other) {
  if (other.value_ == 0) throw ParameterError("division of time by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Time& t) { return os << t.str(); }

Time midpoint(const Time& a, const Time& b) { return (a + b) / Time(2); }

}  // namespace sigcalc
