#pragma once

// Numerical walls for tilt stability in the (alpha, beta) half plane and
// the search for destabilizing characters along an integral beta ray.

#include <string>
#include <vector>

#include "wallcross/chern.hpp"
#include "wallcross/polynomial.hpp"

namespace wallcross {

/// Ring Q[a, b] with a = alpha^2 and b = beta.
const PolyRing& tilt_ring();

/// Locus of nu(f) = nu(g): a circle alpha^2 + (beta - c)^2 = r^2 centered
/// on the beta axis, a vertical line, everything or nothing.
class WallLocus {
 public:
  enum class Kind { Circle, VerticalLine, Everywhere, Empty };

  /// Throws std::invalid_argument unless radius_sq > 0.
  static WallLocus circle(Rational center_beta, Rational radius_sq);
  static WallLocus vertical_line(Rational beta);
  static WallLocus everywhere() { return WallLocus(Kind::Everywhere); }
  static WallLocus empty() { return WallLocus(Kind::Empty); }

  Kind kind() const { return kind_; }
  /// Circle center / radius squared; throw std::logic_error for other kinds.
  const Rational& center_beta() const;
  const Rational& radius_sq() const;
  /// Position of a vertical line; throws std::logic_error otherwise.
  const Rational& beta() const;

  bool contains(const StabilityPoint& p) const;

  /// {"kind":"circle","center_beta":"-5/2","radius_sq":"9/4"} and friends.
  std::string json() const;
  std::string str() const;

  friend bool operator==(const WallLocus&, const WallLocus&) = default;

 private:
  explicit WallLocus(Kind kind) : kind_(kind) {}
  Kind kind_;
  Rational first_;
  Rational second_;
};

/// Cross-multiplied nu(f) = nu(g) in Q[a, b]:
/// N(f) D(g) - N(g) D(f) with N = ch2^b - a/2 ch0 and D = ch1^b.
Polynomial nu_wall_polynomial(const ChernCharacter& f, const ChernCharacter& g);

/// Throws std::invalid_argument when both twisted ch1 vanish identically.
WallLocus nu_wall(const ChernCharacter& f, const ChernCharacter& g);

/// The conic ch2^beta - alpha^2/2 ch0 = 0, i.e.
/// a_coeff*a + bb_coeff*b^2 + b_coeff*b + constant = 0.
struct ZeroLocus {
  Rational a_coeff;
  Rational bb_coeff;
  Rational b_coeff;
  Rational constant;

  Polynomial polynomial() const;  ///< in tilt_ring()
  std::string str() const;
  friend bool operator==(const ZeroLocus&, const ZeroLocus&) = default;
};

ZeroLocus nu_zero_locus(const ChernCharacter& v);

/// Degree <= 2 part (ch0, ch1, ch2) of a twisted character.
struct TruncatedCharacter {
  Rational rank;
  Rational c;
  Rational d;

  /// Untwisted character with ch3 = 0 (nu does not see ch3).
  ChernCharacter untwisted(long long beta0) const;
  Rational discriminant() const { return c * c - 2 * rank * d; }
  std::string str() const;
  friend bool operator==(const TruncatedCharacter&, const TruncatedCharacter&) = default;
};

/// A twisted sub-character (r, c, d) at beta0 together with its complement
/// ch^{beta0}(E) - (r, c, d). Pairs are unordered; the member with the
/// larger rank (then smaller (c, d)) is the representative.
struct DestabilizerCandidate {
  long long r = 0;
  long long c = 0;
  Rational d;
  TruncatedCharacter complement;
  Rational alpha_sq;  ///< where the two nu slopes agree on the ray

  TruncatedCharacter sub() const { return {Rational(r), Rational(c), d}; }
  /// The numerical wall through the pair, computed from the untwisted classes.
  WallLocus wall(long long beta0) const;
  std::string str() const;
  friend bool operator==(const DestabilizerCandidate&, const DestabilizerCandidate&) = default;
};

/// All unordered pairs of twisted characters on the ray beta = beta0 with
/// 0 < c < ch1^{beta0}(v), |r| <= rank_bound, 2d integral, a positive
/// solution alpha^2 of nu(F) = nu(G), and nonnegative discriminant on both
/// sides. Results are complete up to rank_bound and sorted canonically.
///
/// Throws std::invalid_argument for rank_bound == 0, a non-lattice v or
/// ch1^{beta0}(v) <= 0, and std::domain_error when the d-range is unbounded.
std::vector<DestabilizerCandidate> enumerate_destabilizers(const ChernCharacter& v, long long beta0,
                                                           long long rank_bound = 10);

/// Pairs (n, n') >= 0 with (f3_base - n) + (g3_base - n') = e3.
std::vector<std::pair<long long, long long>> refine_point_lengths(const Rational& e3, const Rational& f3_base,
                                                                  const Rational& g3_base);

}  // namespace wallcross
