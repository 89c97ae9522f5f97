#pragma once

// Chern characters on P^3 with polarization H (H^3 = 1), twisted
// characters, the slope functions of slope, tilt and Bridgeland stability,
// and Riemann-Roch.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wallcross/rational.hpp"

namespace wallcross {

/// (ch0, H^2 ch1, H ch2, ch3) of an object on P^3.
///
/// Characters of sheaves lie in the lattice Z + Z + 1/2 Z + 1/6 Z, which
/// `in_lattice` checks. Twisting by a non-integral beta leaves the lattice,
/// so the type itself accepts arbitrary rationals.
class ChernCharacter {
 public:
  ChernCharacter() = default;
  ChernCharacter(Rational ch0, Rational ch1, Rational ch2, Rational ch3)
      : ch_{std::move(ch0), std::move(ch1), std::move(ch2), std::move(ch3)} {}

  /// Parses "1,0,-2,2" style text. Throws std::invalid_argument.
  static ChernCharacter parse(std::string_view text);

  const Rational& ch0() const { return ch_[0]; }
  const Rational& ch1() const { return ch_[1]; }
  const Rational& ch2() const { return ch_[2]; }
  const Rational& ch3() const { return ch_[3]; }
  const Rational& operator[](std::size_t i) const { return ch_.at(i); }

  bool in_lattice() const;

  /// The dual character (ch0, -ch1, ch2, -ch3).
  ChernCharacter dual() const;

  /// Comma separated canonical text, e.g. "0,1,-5/2,13/6".
  std::string str() const;

  ChernCharacter& operator+=(const ChernCharacter& o);
  ChernCharacter& operator-=(const ChernCharacter& o);
  friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
  friend ChernCharacter operator-(ChernCharacter a, const ChernCharacter& b) { return a -= b; }
  friend ChernCharacter operator*(const Rational& k, const ChernCharacter& v);
  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;

 private:
  std::array<Rational, 4> ch_{};
};

/// Either a finite rational or +infinity. +infinity exceeds every finite value.
class ExtendedSlope {
 public:
  static ExtendedSlope infinity() { return ExtendedSlope(); }
  static ExtendedSlope finite(Rational value) { return ExtendedSlope(std::move(value)); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::domain_error for +infinity.
  const Rational& value() const;
  std::string str() const;

  friend bool operator==(const ExtendedSlope&, const ExtendedSlope&) = default;
  friend std::strong_ordering operator<=>(const ExtendedSlope& a, const ExtendedSlope& b);

 private:
  ExtendedSlope() = default;
  explicit ExtendedSlope(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

/// A point (alpha, beta) of the upper half plane, optionally with the
/// Bridgeland parameter s.
class StabilityPoint {
 public:
  /// Throws std::invalid_argument unless alpha > 0 and (if given) s > 0.
  StabilityPoint(Rational alpha, Rational beta, std::optional<Rational> s = std::nullopt);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  Rational alpha_sq() const { return alpha_ * alpha_; }
  /// Throws std::invalid_argument when the point carries no s.
  const Rational& s() const;
  bool has_s() const { return s_.has_value(); }

 private:
  Rational alpha_;
  Rational beta_;
  std::optional<Rational> s_;
};

ChernCharacter twist(const ChernCharacter& v, const Rational& beta);

ExtendedSlope mu_slope(const ChernCharacter& v, const Rational& beta);
ExtendedSlope nu_slope(const ChernCharacter& v, const StabilityPoint& p);
ExtendedSlope lambda_slope(const ChernCharacter& v, const StabilityPoint& p);

/// ch1^2 - 2 ch0 ch2.
Rational discriminant(const ChernCharacter& v);

// Sheaves that show up in the walls for pairs of skew lines.
namespace sheaf {
struct LineBundle { long long d; };              ///< O(d)
struct PlaneTwist { long long d; };              ///< O_V(d), V a plane
struct IdealPoints { long long d; long long n; };  ///< I_Z(d), Z of length n
struct PlaneIdealPoints { long long d; long long n; };  ///< I_{Z/V}(d)
struct CotangentPlane {};                        ///< Omega^1_V
struct SkewLinesIdeal {};                        ///< ideal of two skew lines
}  // namespace sheaf

using SheafSpec = std::variant<sheaf::LineBundle, sheaf::PlaneTwist, sheaf::IdealPoints,
                               sheaf::PlaneIdealPoints, sheaf::CotangentPlane, sheaf::SkewLinesIdeal>;

/// Throws std::invalid_argument for a negative number of points.
ChernCharacter sheaf_library(const SheafSpec& spec);

/// chi(F, G) = deg_3(ch(F)^dual * ch(G) * td(P^3)).
Rational euler_pairing(const ChernCharacter& f, const ChernCharacter& g);

/// (h^0, ..., h^n) of O(d) on P^n, 1 <= n <= 3.
std::vector<long long> bott_cohomology(int n, long long d);

/// The class (1, 0, -2, 2) of a pair of skew lines.
inline ChernCharacter skew_lines_class() { return sheaf_library(sheaf::SkewLinesIdeal{}); }

}  // namespace wallcross
