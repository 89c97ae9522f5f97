#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wallcross {

/// Exact rational number in lowest terms with positive denominator.
///
/// Thin value wrapper around GMP's mpq_class that keeps the canonical form
/// after every operation and avoids leaking GMP expression templates into
/// the rest of the code.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value);               // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" (optional sign, decimal digits). Throws
  /// std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// Value as a signed 64-bit integer; throws if not an integer in range.
  std::int64_t to_int64() const;

  /// Canonical text: "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;
  Rational pow(unsigned exponent) const;

  /// Largest integer <= value.
  mpz_class floor() const;
  /// Smallest integer >= value.
  mpz_class ceil() const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace wallcross
