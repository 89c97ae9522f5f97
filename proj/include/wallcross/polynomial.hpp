#pragma once

// Exact multivariate polynomials over Q.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wallcross/rational.hpp"

namespace wallcross {

inline constexpr std::size_t kMaxVariables = 8;

/// An ordered list of variable names. Cheap to copy; two rings are equal
/// when their name lists are equal.
class PolyRing {
 public:
  /// Throws std::invalid_argument on duplicate/empty names or more than
  /// kMaxVariables variables.
  explicit PolyRing(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::vector<std::string>& names() const { return *names_; }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws std::invalid_argument for an unknown name.
  std::size_t require(std::string_view name) const;

  /// This ring with `name` appended as the last variable.
  PolyRing extended(const std::string& name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector. Entries past the ring size are always zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};

  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// A total monomial order compatible with multiplication.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Block };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, {}); }
  /// Lexicographic order; `priority` lists variable indices from the
  /// largest to the smallest. Unlisted variables follow in index order.
  static MonomialOrder lex(std::vector<std::size_t> priority = {});
  /// Elimination order: degrevlex on the `eliminate` block first, ties
  /// broken by degrevlex on the remaining variables.
  static MonomialOrder block(std::vector<std::size_t> eliminate);

  Kind kind() const { return kind_; }
  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  std::string str() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> data) : kind_(kind), data_(std::move(data)) {}
  Kind kind_;
  std::vector<std::size_t> data_;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}
  Polynomial(PolyRing ring, const Rational& constant);

  static Polynomial variable(const PolyRing& ring, std::string_view name);
  static Polynomial monomial(const PolyRing& ring, const Monomial& m, const Rational& c = Rational(1));

  /// Parses `x*y^2 - 3/2*z` style text. Identifiers resolve to ring
  /// variables first and then to `macros`. Throws std::invalid_argument.
  static Polynomial parse(const PolyRing& ring, std::string_view text,
                          const std::map<std::string, Polynomial>& macros = {});

  const PolyRing& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant term.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;

  /// Leading term data under `order`; throws std::domain_error for zero.
  const Monomial& leading_monomial(const MonomialOrder& order) const;
  const Rational& leading_coefficient(const MonomialOrder& order) const;

  /// Evaluates every variable. Missing entries count as 0.
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Substitutes a constant for one variable.
  Polynomial substitute(std::size_t var, const Rational& value) const;
  /// Substitutes polynomials for several variables (by index).
  Polynomial substitute(const std::map<std::size_t, Polynomial>& values) const;
  Polynomial derivative(std::size_t var) const;
  /// Coefficients c_k with this = sum c_k * var^k; c_k do not involve var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  /// Maps the polynomial into `target` by variable name. Throws
  /// std::invalid_argument if a used variable is missing from `target`.
  Polynomial in_ring(const PolyRing& target) const;

  Polynomial monic(const MonomialOrder& order) const;

  /// Canonical text with terms descending in degrevlex.
  std::string str() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  Polynomial pow(unsigned exponent) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

 private:
  void check_ring(const Polynomial& o) const;

  PolyRing ring_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace wallcross
