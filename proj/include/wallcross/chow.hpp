#pragma once

// Truncated intersection ring of P^3 x dual P^3, Todd class and GRR for the
// bundle of conics, and the divisor/curve lattices of the component of
// skew-line schemes with their pairing.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "wallcross/rational.hpp"

namespace wallcross {

/// sum c[i][j] H^i H'^j in Q[H, H'] / (H^4, H'^4).
class BigradedClass {
 public:
  BigradedClass() = default;
  static BigradedClass one() { return monomial(0, 0); }
  static BigradedClass H() { return monomial(1, 0); }
  static BigradedClass Hp() { return monomial(0, 1); }
  static BigradedClass monomial(int i, int j, Rational c = Rational(1));

  const Rational& coeff(int i, int j) const { return c_.at(i).at(j); }
  Rational& coeff(int i, int j) { return c_.at(i).at(j); }

  /// Homogeneous part of total degree k.
  BigradedClass degree_part(int k) const;
  bool is_zero() const;

  /// e^x, a finite sum since x is nilpotent when x has no constant term.
  /// Throws std::invalid_argument otherwise.
  BigradedClass exp() const;

  /// "1 + 2H + 11/6H^2 + H^3", "4H'", "0".
  std::string str() const;

  BigradedClass& operator+=(const BigradedClass& o);
  BigradedClass& operator-=(const BigradedClass& o);
  friend BigradedClass operator+(BigradedClass a, const BigradedClass& b) { return a += b; }
  friend BigradedClass operator-(BigradedClass a, const BigradedClass& b) { return a -= b; }
  friend BigradedClass operator-(const BigradedClass& a) { return BigradedClass() - a; }
  friend BigradedClass operator*(const BigradedClass& a, const BigradedClass& b);
  friend BigradedClass operator*(const Rational& k, const BigradedClass& a);
  friend bool operator==(const BigradedClass&, const BigradedClass&) = default;

 private:
  std::array<std::array<Rational, 4>, 4> c_{};
};

/// (H / (1 - e^{-H}))^4 truncated at H^4.
BigradedClass todd_p3();

/// pr2_*(H^i H'^j) = H'^j when i = 3, zero otherwise.
BigradedClass pushforward_pr2(const BigradedClass& x);

/// Degree-4 part of e^{tH} (1 - e^{-H-H'}) td(P^3).
BigradedClass grr_degree4_integrand(long long twist = 2);

/// c1 of pr2_* O(twist)|_I via GRR; 4H' for twist = 2.
BigradedClass grr_c1_pushforward(long long twist = 2);

/// Coordinates in the basis (H, H', A, E').
struct DivisorClass {
  std::array<Rational, 4> v{};

  std::string str() const;
  DivisorClass& operator+=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator*(const Rational& k, const DivisorClass& a);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Coordinates in the basis (alpha, beta, gamma, delta).
struct CurveClass {
  std::array<Rational, 4> v{};

  std::string str() const;
  friend CurveClass operator+(const CurveClass& a, const CurveClass& b);
  friend CurveClass operator*(const Rational& k, const CurveClass& a);
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// h c_alpha + h' c_beta + a c_gamma - e' c_delta.
Rational pair(const DivisorClass& d, const CurveClass& c);

/// H, H', A, E', D, D', E and the canonical class K.
const std::map<std::string, DivisorClass>& named_divisors();
/// Throws std::out_of_range for an unknown name.
const DivisorClass& named_divisor(const std::string& name);

/// Curves c_j with pair(divs[i], c_j) = [i == j]. Throws std::domain_error
/// ("degenerate basis") when the divisors are dependent.
std::array<CurveClass, 4> dual_curve_basis(const std::array<DivisorClass, 4>& divs);

struct MoriReport {
  DivisorClass K;
  /// epsilon, eta, zeta, delta: the dual basis of (H, H', D, D' + H').
  std::array<CurveClass, 4> rays;
  std::array<Rational, 4> pairings;
  std::vector<std::string> negative_rays;
  std::vector<std::string> positive_rays;
  std::string contraction_of_zeta;

  static const std::array<std::string, 4>& ray_names();
  std::string json() const;
  std::string text() const;
};

MoriReport mori_report();

}  // namespace wallcross
