#include "wallcross/lambdawalls.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <iomanip>
#include <sstream>

namespace wallcross {

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_50;

Decimal to_decimal(const Rational& r) {
  return Decimal(r.numerator().get_str()) / Decimal(r.denominator().get_str());
}

std::string format12(const Decimal& value) {
  std::ostringstream os;
  os << std::setprecision(12) << value;
  std::string s = os.str();
  if (s == "-0") s = "0";
  return s;
}

std::vector<Rational> point_vector(const WallPolynomial& w, const StabilityPoint& p) {
  const std::size_t s_index = lambda_ring().require("s");
  if (w.poly.involves(s_index) && !p.has_s()) {
    throw std::invalid_argument("wall " + w.label + " depends on s but the point has none");
  }
  return {p.alpha_sq(), p.beta(), p.has_s() ? p.s() : Rational(0)};
}

struct ZParts {
  Polynomial re;
  Polynomial im;
};

ZParts central_charge(const ChernCharacter& v) {
  const PolyRing& r = lambda_ring();
  const Polynomial a = Polynomial::variable(r, "a");
  const Polynomial b = Polynomial::variable(r, "b");
  const Polynomial s = Polynomial::variable(r, "s");
  const Polynomial c0(r, v.ch0()), c1(r, v.ch1()), c2(r, v.ch2()), c3(r, v.ch3());
  const Polynomial b2 = b * b;
  const Polynomial t1 = c1 - b * c0;
  const Polynomial t2 = c2 - b * c1 + Rational(1, 2) * b2 * c0;
  const Polynomial t3 = c3 - b * c2 + Rational(1, 2) * b2 * c1 - Rational(1, 6) * b2 * b * c0;
  const Polynomial sixth(r, Rational(1, 6));
  return {-t3 + a * (sixth + s) * t1, t2 - Rational(1, 2) * a * c0};
}

}  // namespace

const PolyRing& lambda_ring() {
  static const PolyRing ring({"a", "b", "s"});
  return ring;
}

WallPolynomial WallPolynomial::from_polynomial(const Polynomial& p, std::string label) {
  return {p.in_ring(lambda_ring()), std::move(label)};
}

WallPolynomial WallPolynomial::from_zero_locus(const ZeroLocus& z, std::string label) {
  return from_polynomial(z.polynomial(), std::move(label));
}

WallPolynomial WallPolynomial::from_locus(const WallLocus& w, std::string label) {
  const PolyRing& r = lambda_ring();
  const Polynomial a = Polynomial::variable(r, "a");
  const Polynomial b = Polynomial::variable(r, "b");
  switch (w.kind()) {
    case WallLocus::Kind::Circle: {
      const Polynomial db = b - Polynomial(r, w.center_beta());
      return {a + db * db - Polynomial(r, w.radius_sq()), std::move(label)};
    }
    case WallLocus::Kind::VerticalLine: return {b - Polynomial(r, w.beta()), std::move(label)};
    case WallLocus::Kind::Everywhere: return {Polynomial(r), std::move(label)};
    case WallLocus::Kind::Empty: return {Polynomial(r, Rational(1)), std::move(label)};
  }
  throw std::logic_error("unknown wall kind");
}

WallPolynomial phi(const ChernCharacter& f, const ChernCharacter& g, std::string label) {
  const ZParts zf = central_charge(f);
  const ZParts zg = central_charge(g);
  return {zf.re * zg.im - zg.re * zf.im, std::move(label)};
}

WallPolynomial wall_w1() {
  return phi(sheaf_library(sheaf::LineBundle{-1}), sheaf_library(sheaf::PlaneIdealPoints{-2, 1}), "W1");
}

WallPolynomial wall_w2() {
  return phi(sheaf_library(sheaf::IdealPoints{-1, 1}), sheaf_library(sheaf::PlaneTwist{-2}), "W2");
}

WallPolynomial hyperbola(const ChernCharacter& v) {
  return WallPolynomial::from_zero_locus(nu_zero_locus(v), "hyperbola");
}

Rational evaluate_wall(const WallPolynomial& w, const StabilityPoint& p) {
  return w.poly.evaluate(point_vector(w, p));
}

Rational phi_alpha_derivative_at(const WallPolynomial& w, const StabilityPoint& p) {
  const std::size_t a = lambda_ring().require("a");
  return 2 * p.alpha() * w.poly.derivative(a).evaluate(point_vector(w, p));
}

Polynomial phi_alpha_derivative_symbolic(const WallPolynomial& w, const Rational& alpha, const Rational& beta) {
  const std::size_t a = lambda_ring().require("a");
  const std::size_t b = lambda_ring().require("b");
  return Rational(2) * alpha * w.poly.derivative(a).substitute(a, alpha * alpha).substitute(b, beta);
}

Rational wall_slope_at(const WallPolynomial& w, const StabilityPoint& p) {
  const auto point = point_vector(w, p);
  if (!w.poly.evaluate(point).is_zero()) {
    throw WallError("not on wall: " + w.label + " does not vanish at (" + p.alpha().str() + ", " + p.beta().str() + ")");
  }
  const Rational d_alpha = 2 * p.alpha() * w.poly.derivative(lambda_ring().require("a")).evaluate(point);
  if (d_alpha.is_zero()) throw WallError("vertical tangent: " + w.label + " has zero alpha-derivative here");
  const Rational d_beta = w.poly.derivative(lambda_ring().require("b")).evaluate(point);
  return -d_beta / d_alpha;
}

std::string ChamberLabel::str() const {
  switch (kind) {
    case Kind::ChamberI: return "I";
    case Kind::ChamberII: return "II";
    case Kind::ChamberIII: return "III";
    case Kind::OutsideRegion: return "outside";
    case Kind::OnWall:
      switch (which) {
        case Which::W1: return "on W1";
        case Which::W2: return "on W2";
        case Which::Both: return "on W1 and W2";
        case Which::None: break;
      }
      return "on wall";
  }
  return "?";
}

ChamberLabel classify_chamber(const ChernCharacter& v, const StabilityPoint& p) {
  if (!(v == skew_lines_class())) {
    throw std::invalid_argument("chamber structure is only certified for (1,0,-2,2), got " + v.str());
  }
  if (!p.has_s()) throw std::invalid_argument("classify_chamber needs s > 0");
  if (p.beta().sign() >= 0) return {};
  const ExtendedSlope nu = nu_slope(v, p);
  if (nu.is_infinite() || nu.value().sign() <= 0) return {};

  const int phi1 = evaluate_wall(wall_w1(), p).sign();
  const int phi2 = evaluate_wall(wall_w2(), p).sign();
  using K = ChamberLabel::Kind;
  using W = ChamberLabel::Which;
  if (phi1 == 0 || phi2 == 0) {
    return {K::OnWall, phi1 == 0 && phi2 == 0 ? W::Both : (phi1 == 0 ? W::W1 : W::W2)};
  }
  if (phi1 > 0 && phi2 > 0) return {K::ChamberI, W::None};
  if (phi1 < 0 && phi2 > 0) return {K::ChamberII, W::None};
  if (phi1 < 0 && phi2 < 0) return {K::ChamberIII, W::None};
  // W1 above W2 forbids Phi1 > 0 > Phi2 near the hyperbola.
  throw std::logic_error("sign pattern (+,-) at (" + p.alpha().str() + ", " + p.beta().str() +
                         ") is outside the certified neighbourhood");
}

std::string decimal12(const Rational& value) { return format12(to_decimal(value)); }

namespace {

// Positive roots of A a^2 + B a + C = 0, decided exactly.
std::vector<Decimal> positive_roots(const Rational& A, const Rational& B, const Rational& C) {
  std::vector<Decimal> out;
  if (A.is_zero()) {
    if (B.is_zero()) return out;
    const Rational root = -C / B;
    if (root.sign() > 0) out.push_back(to_decimal(root));
    return out;
  }
  const Rational disc = B * B - 4 * A * C;
  if (disc.sign() < 0) return out;
  const Rational sum = -B / A;
  const Rational product = C / A;
  if (disc.is_zero()) {
    if (sum.sign() > 0) out.push_back(to_decimal(sum / 2));
    return out;
  }
  const Decimal root_disc = boost::multiprecision::sqrt(to_decimal(disc));
  const Decimal two_a = to_decimal(2 * A);
  const Decimal lo = A.sign() > 0 ? (to_decimal(-B) - root_disc) / two_a : (to_decimal(-B) + root_disc) / two_a;
  const Decimal hi = A.sign() > 0 ? (to_decimal(-B) + root_disc) / two_a : (to_decimal(-B) - root_disc) / two_a;
  if (product.sign() > 0) {
    if (sum.sign() > 0) {
      out.push_back(lo);
      out.push_back(hi);
    }
  } else if (product.sign() < 0) {
    out.push_back(hi);
  } else if (sum.sign() > 0) {
    out.push_back(hi);
  }
  return out;
}

}  // namespace

std::vector<WallSample> sample_wall(const WallPolynomial& w, const Rational& s, const Rational& beta_min,
                                    const Rational& beta_max, long long count) {
  if (count < 2) throw std::invalid_argument("need at least 2 samples");
  if (!(beta_min < beta_max)) throw std::invalid_argument("beta_min must be < beta_max");
  if (w.poly.is_zero()) throw std::invalid_argument("wall " + w.label + " is identically zero");
  const std::size_t a = lambda_ring().require("a");
  const std::size_t b = lambda_ring().require("b");
  const std::size_t s_index = lambda_ring().require("s");
  const Polynomial at_s = w.poly.substitute(s_index, s);
  if (at_s.degree_in(a) > 2) throw std::invalid_argument("wall " + w.label + " has degree > 2 in alpha^2");
  const auto coeffs = at_s.coefficients_in(a);

  std::vector<WallSample> out;
  const Rational step = (beta_max - beta_min) / Rational(count - 1);
  for (long long k = 0; k < count; ++k) {
    const Rational beta = beta_min + step * Rational(k);
    auto coeff = [&](std::size_t i) {
      return i < coeffs.size() ? coeffs[i].substitute(b, beta).constant_term() : Rational(0);
    };
    for (const Decimal& root : positive_roots(coeff(2), coeff(1), coeff(0))) {
      const Decimal alpha = boost::multiprecision::sqrt(root);
      out.push_back({beta, decimal12(beta), format12(alpha), alpha.convert_to<double>()});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const WallSample& x, const WallSample& y) {
    if (x.beta != y.beta) return x.beta < y.beta;
    return x.alpha < y.alpha;
  });
  return out;
}

std::vector<WallSample> sample_wall(const WallLocus& w, const Rational& s, const Rational& beta_min,
                                    const Rational& beta_max, long long count) {
  return sample_wall(WallPolynomial::from_locus(w, "W"), s, beta_min, beta_max, count);
}

}  // namespace wallcross
