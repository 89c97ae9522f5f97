#include "wallcross/chern.hpp"

#include <sstream>
#include <stdexcept>

namespace wallcross {

ChernCharacter ChernCharacter::parse(std::string_view text) {
  std::array<Rational, 4> parts;
  std::size_t index = 0;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    if (index == 4) throw std::invalid_argument("Chern character needs exactly four entries: '" + std::string(text) + "'");
    parts[index++] = Rational::parse(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (index != 4) throw std::invalid_argument("Chern character needs exactly four entries: '" + std::string(text) + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

bool ChernCharacter::in_lattice() const {
  return ch_[0].is_integer() && ch_[1].is_integer() && (2 * ch_[2]).is_integer() &&
         (6 * ch_[3]).is_integer();
}

ChernCharacter ChernCharacter::dual() const { return {ch_[0], -ch_[1], ch_[2], -ch_[3]}; }

std::string ChernCharacter::str() const {
  return ch_[0].str() + "," + ch_[1].str() + "," + ch_[2].str() + "," + ch_[3].str();
}

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& o) {
  for (std::size_t i = 0; i < 4; ++i) ch_[i] += o.ch_[i];
  return *this;
}

ChernCharacter& ChernCharacter::operator-=(const ChernCharacter& o) {
  for (std::size_t i = 0; i < 4; ++i) ch_[i] -= o.ch_[i];
  return *this;
}

ChernCharacter operator*(const Rational& k, const ChernCharacter& v) {
  return {k * v.ch_[0], k * v.ch_[1], k * v.ch_[2], k * v.ch_[3]};
}

const Rational& ExtendedSlope::value() const {
  if (!value_) throw std::domain_error("slope is +infinity");
  return *value_;
}

std::string ExtendedSlope::str() const { return value_ ? value_->str() : std::string("+inf"); }

std::strong_ordering operator<=>(const ExtendedSlope& a, const ExtendedSlope& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  return *a.value_ <=> *b.value_;
}

StabilityPoint::StabilityPoint(Rational alpha, Rational beta, std::optional<Rational> s)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), s_(std::move(s)) {
  if (alpha_.sign() <= 0) throw std::invalid_argument("alpha must be > 0, got " + alpha_.str());
  if (s_ && s_->sign() <= 0) throw std::invalid_argument("s must be > 0, got " + s_->str());
}

const Rational& StabilityPoint::s() const {
  if (!s_) throw std::invalid_argument("stability point has no s parameter");
  return *s_;
}

ChernCharacter twist(const ChernCharacter& v, const Rational& beta) {
  const Rational b2 = beta * beta;
  const Rational b3 = b2 * beta;
  return {v.ch0(),
          v.ch1() - beta * v.ch0(),
          v.ch2() - beta * v.ch1() + b2 / 2 * v.ch0(),
          v.ch3() - beta * v.ch2() + b2 / 2 * v.ch1() - b3 / 6 * v.ch0()};
}

ExtendedSlope mu_slope(const ChernCharacter& v, const Rational& beta) {
  if (v.ch0().is_zero()) return ExtendedSlope::infinity();
  return ExtendedSlope::finite(twist(v, beta).ch1() / v.ch0());
}

ExtendedSlope nu_slope(const ChernCharacter& v, const StabilityPoint& p) {
  const ChernCharacter t = twist(v, p.beta());
  if (t.ch1().is_zero()) return ExtendedSlope::infinity();
  return ExtendedSlope::finite((t.ch2() - p.alpha_sq() / 2 * t.ch0()) / t.ch1());
}

ExtendedSlope lambda_slope(const ChernCharacter& v, const StabilityPoint& p) {
  const ChernCharacter t = twist(v, p.beta());
  const Rational a = p.alpha_sq();
  const Rational denominator = t.ch2() - a / 2 * t.ch0();
  if (denominator.is_zero()) return ExtendedSlope::infinity();
  const Rational numerator = t.ch3() - a * (Rational(1, 6) + p.s()) * t.ch1();
  return ExtendedSlope::finite(numerator / denominator);
}

Rational discriminant(const ChernCharacter& v) { return v.ch1() * v.ch1() - 2 * v.ch0() * v.ch2(); }

namespace {

ChernCharacter line_bundle(long long d) {
  const Rational r(d);
  return {1, r, r * r / 2, r * r * r / 6};
}

ChernCharacter plane_twist(long long d) { return line_bundle(d) - line_bundle(d - 1); }

ChernCharacter points(long long n) {
  if (n < 0) throw std::invalid_argument("number of points must be >= 0, got " + std::to_string(n));
  return {0, 0, 0, Rational(n)};
}

struct LibraryVisitor {
  ChernCharacter operator()(const sheaf::LineBundle& s) const { return line_bundle(s.d); }
  ChernCharacter operator()(const sheaf::PlaneTwist& s) const { return plane_twist(s.d); }
  ChernCharacter operator()(const sheaf::IdealPoints& s) const { return line_bundle(s.d) - points(s.n); }
  ChernCharacter operator()(const sheaf::PlaneIdealPoints& s) const { return plane_twist(s.d) - points(s.n); }
  ChernCharacter operator()(const sheaf::CotangentPlane&) const {
    // Euler sequence 0 -> Omega_V -> O_V(-1)^3 -> O_V -> 0.
    return Rational(3) * plane_twist(-1) - plane_twist(0);
  }
  ChernCharacter operator()(const sheaf::SkewLinesIdeal&) const { return {1, 0, -2, 2}; }
};

}  // namespace

ChernCharacter sheaf_library(const SheafSpec& spec) { return std::visit(LibraryVisitor{}, spec); }

Rational euler_pairing(const ChernCharacter& f, const ChernCharacter& g) {
  static const std::array<Rational, 4> todd{Rational(1), Rational(2), Rational(11, 6), Rational(1)};
  const ChernCharacter fd = f.dual();
  Rational chi;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; i + j < 4; ++j) {
      chi += fd[i] * g[j] * todd[3 - i - j];
    }
  }
  return chi;
}

namespace {

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long result = 1;
  for (long long i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace

std::vector<long long> bott_cohomology(int n, long long d) {
  if (n < 1 || n > 3) throw std::invalid_argument("bott_cohomology supports 1 <= n <= 3, got " + std::to_string(n));
  std::vector<long long> h(static_cast<std::size_t>(n) + 1, 0);
  if (d >= 0) h.front() = binomial(d + n, n);
  if (d <= -n - 1) h.back() = binomial(-d - 1, n);
  return h;
}

}  // namespace wallcross
