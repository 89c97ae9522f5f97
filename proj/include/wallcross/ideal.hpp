#pragma once

// Ideals in Q[x_1..x_n] and the Groebner-basis calculus on them.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wallcross/polynomial.hpp"

namespace wallcross {

/// A finitely generated ideal, optionally carrying its reduced Groebner
/// basis for one monomial order. Values are immutable; `groebner` returns a
/// new Ideal with the basis attached.
class Ideal {
 public:
  explicit Ideal(PolyRing ring, std::vector<Polynomial> generators = {});

  /// Parses "(g1, g2, ...)" where each g is polynomial text.
  static Ideal parse(const PolyRing& ring, std::string_view text,
                     const std::map<std::string, Polynomial>& macros = {});
  static Ideal unit(const PolyRing& ring);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  bool has_basis() const { return basis_ != nullptr; }
  /// Cached reduced basis; throws std::logic_error if none is attached.
  const std::vector<Polynomial>& basis() const;
  const MonomialOrder& basis_order() const;

  /// Reduced degrevlex basis rendered as "(b1, b2, ...)".
  std::string str() const;

  /// Same ideal in a ring with (at least) the used variables.
  Ideal in_ring(const PolyRing& target) const;

 private:
  friend Ideal groebner(const Ideal&, const MonomialOrder&);

  struct Basis {
    MonomialOrder order;
    std::vector<Polynomial> elements;
  };

  PolyRing ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<const Basis> basis_;
};

/// Reduced Groebner basis (monic, inter-reduced, sorted by decreasing
/// leading monomial) via Buchberger's algorithm with the coprime and chain
/// criteria. Idempotent.
Ideal groebner(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::degrevlex());

/// Reduced basis of `ideal` for `order`, reusing a cached one when possible.
std::vector<Polynomial> basis_for(const Ideal& ideal, const MonomialOrder& order);

/// Full normal form of p modulo a Groebner basis for `order`.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& order);

bool member(const Polynomial& p, const Ideal& ideal);
/// J subset of I, witnessed by membership of every generator of J.
bool contains(const Ideal& ideal, const Ideal& sub);
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned exponent);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// (I : f). Throws std::invalid_argument for f = 0.
Ideal ideal_colon(const Ideal& ideal, const Polynomial& f);
/// I intersected with Q[remaining variables]; the result stays in the
/// ring of I and its generators avoid the eliminated variables.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& variables);
/// Generators with `variable` replaced by `value`.
Ideal specialize(const Ideal& ideal, const std::string& variable, const Rational& value);

/// Exact quotient p / f. Throws std::domain_error if f does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& f);

}  // namespace wallcross
