#include "wallcross/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace wallcross {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class from_int64(long long v) {
  // mpz_class has no portable long long constructor.
  return mpz_class(std::to_string(v));
}

}  // namespace

Rational::Rational(long long value) : value_(from_int64(value)) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(from_int64(num), from_int64(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw std::overflow_error("integer " + str() + " out of range");
  return n.get_si();
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(n, d));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace wallcross
