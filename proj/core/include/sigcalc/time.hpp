#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sigcalc {

/// Exact rational instant on the real line.
///
/// Always held in lowest terms with a positive denominator, so equal values
/// have identical representations. Literals accept "p/q", integers and
/// finite decimals ("0.75" is exactly 3/4); nothing goes through binary
/// floating point.
class Time {
 public:
  Time() = default;
  Time(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Time(long num, long den);
  explicit Time(mpq_class value);

  static Time parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Time& operator+=(const Time& other);
  Time& operator-=(const Time& other);
  Time& operator*=(const Time& other);
  Time& operator/=(const Time& other);

  friend Time operator+(Time a, const Time& b) { return a += b; }
  friend Time operator-(Time a, const Time& b) { return a -= b; }
  friend Time operator*(Time a, const Time& b) { return a *= b; }
  friend Time operator/(Time a, const Time& b) { return a /= b; }
  friend Time operator-(const Time& a) { return Time(mpq_class(-a.value_)); }

  friend bool operator==(const Time& a, const Time& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Time& a, const Time& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Time& t);

 private:
  mpq_class value_{0};
};

Time midpoint(const Time& a, const Time& b);

/// Least common multiple of the denominators; 1 for an empty range.
template <typename Range>
mpz_class common_denominator(const Range& times) {
  mpz_class scale = 1;
  for (const Time& t : times) {
    mpz_class den = t.denominator();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  return scale;
}

}  // namespace sigcalc
