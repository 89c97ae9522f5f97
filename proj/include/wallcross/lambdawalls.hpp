#pragma once

// Bridgeland stability Z_{alpha,beta,s} near the skew-lines hyperbola: the
// wall polynomial Phi, its derivatives and implicit slopes, chamber labels,
// and sampling of walls for plotting.

#include <stdexcept>
#include <string>
#include <vector>

#include "wallcross/chern.hpp"
#include "wallcross/polynomial.hpp"
#include "wallcross/tiltwalls.hpp"

namespace wallcross {

/// Raised for exact geometric preconditions that fail at a given point.
class WallError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ring Q[a, b, s] with a = alpha^2, b = beta.
const PolyRing& lambda_ring();

/// A polynomial in (a, b, s) cutting out a wall, with a label naming the
/// pair it came from.
struct WallPolynomial {
  Polynomial poly;
  std::string label;

  static WallPolynomial from_polynomial(const Polynomial& p, std::string label);
  static WallPolynomial from_zero_locus(const ZeroLocus& z, std::string label);
  static WallPolynomial from_locus(const WallLocus& w, std::string label);
};

/// Re Z(f) Im Z(g) - Re Z(g) Im Z(f) with Re Z = -ch3^b + a (1/6 + s) ch1^b
/// and Im Z = ch2^b - a/2 ch0.
WallPolynomial phi(const ChernCharacter& f, const ChernCharacter& g, std::string label = "phi");

/// The walls for v = (1,0,-2,2): W1 from (O(-1), I_{P/V}(-2)) and W2 from
/// (I_P(-1), O_V(-2)).
WallPolynomial wall_w1();
WallPolynomial wall_w2();
/// beta^2 - alpha^2 = 4 written as the zero locus of nu(v).
WallPolynomial hyperbola(const ChernCharacter& v = skew_lines_class());

/// Value of w at p (s is required iff w involves s).
Rational evaluate_wall(const WallPolynomial& w, const StabilityPoint& p);

/// d w / d alpha = 2 alpha dw/da at p.
Rational phi_alpha_derivative_at(const WallPolynomial& w, const StabilityPoint& p);
/// The same derivative at (alpha, beta) kept as a polynomial in s.
Polynomial phi_alpha_derivative_symbolic(const WallPolynomial& w, const Rational& alpha, const Rational& beta);

/// Implicit slope d alpha / d beta = -(dw/db) / (2 alpha dw/da) at p.
/// Throws WallError ("not on wall", "vertical tangent").
Rational wall_slope_at(const WallPolynomial& w, const StabilityPoint& p);

struct ChamberLabel {
  enum class Kind { ChamberI, ChamberII, ChamberIII, OnWall, OutsideRegion };
  enum class Which { None, W1, W2, Both };
  Kind kind = Kind::OutsideRegion;
  Which which = Which::None;

  std::string str() const;
  friend bool operator==(const ChamberLabel&, const ChamberLabel&) = default;
};

/// Chamber of p relative to W1 and W2 for v = (1,0,-2,2). Throws
/// std::invalid_argument for any other v or a point without s.
ChamberLabel classify_chamber(const ChernCharacter& v, const StabilityPoint& p);

struct WallSample {
  Rational beta;
  std::string beta_text;   ///< 12 significant digits
  std::string alpha_text;  ///< 12 significant digits
  double alpha = 0;
};

/// Solves w = 0 for a = alpha^2 at `count` evenly spaced beta values and
/// keeps the roots with a > 0 (decided exactly). Throws
/// std::invalid_argument for count < 2, beta_min >= beta_max, or w == 0.
std::vector<WallSample> sample_wall(const WallPolynomial& w, const Rational& s, const Rational& beta_min,
                                    const Rational& beta_max, long long count);
std::vector<WallSample> sample_wall(const WallLocus& w, const Rational& s, const Rational& beta_min,
                                    const Rational& beta_max, long long count);

/// Decimal text with 12 significant digits ("1.5", "-2.5").
std::string decimal12(const Rational& value);

}  // namespace wallcross
