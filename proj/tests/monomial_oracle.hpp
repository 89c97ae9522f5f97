#pragma once

// Brute-force reference for intersections and colons of monomial ideals in
// Q[x,y,z]: a monomial ideal is pinned down by which monomials of bounded
// degree it contains, and membership of a monomial in (m1, ..., mk) is plain
// divisibility.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "wallcross/ideal.hpp"

namespace monomial_oracle {

using wallcross::Ideal;
using wallcross::Monomial;
using wallcross::Polynomial;
using wallcross::PolyRing;

struct Case {
  std::vector<Monomial> a;
  std::vector<Monomial> b;
  Monomial f;
};

inline const PolyRing& ring() {
  static const PolyRing r({"x", "y", "z"});
  return r;
}

inline Monomial make(unsigned i, unsigned j, unsigned k) {
  Monomial m;
  m.exp[0] = static_cast<std::uint16_t>(i);
  m.exp[1] = static_cast<std::uint16_t>(j);
  m.exp[2] = static_cast<std::uint16_t>(k);
  return m;
}

inline Case random_case(std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> e(0, 3), count(1, 4);
  auto gens = [&] {
    std::vector<Monomial> out;
    for (unsigned n = count(rng); n > 0; --n) {
      Monomial m = make(e(rng), e(rng), e(rng));
      if (m.is_one()) m = make(1, 0, 0);
      out.push_back(m);
    }
    return out;
  };
  Case c{gens(), gens(), make(e(rng), e(rng), e(rng))};
  return c;
}

inline bool divisible(const Monomial& u, const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.divides(u)) return true;
  return false;
}

inline Ideal to_ideal(const std::vector<Monomial>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(Polynomial::monomial(ring(), g));
  return Ideal(ring(), ps);
}

/// Leading monomials of a reduced basis, or nothing if some element is not
/// a single term (then the ideal is not monomial).
inline std::optional<std::vector<Monomial>> monomial_basis(const Ideal& ideal) {
  std::vector<Monomial> out;
  for (const auto& p : wallcross::groebner(ideal).basis()) {
    if (p.terms().size() != 1) return std::nullopt;
    out.push_back(p.terms().begin()->first);
  }
  return out;
}

/// Both ideals are generated in degree <= bound; compare them on every
/// monomial up to that degree.
template <class Pred>
bool agrees_up_to(const std::vector<Monomial>& computed, Pred expected, unsigned bound) {
  for (unsigned i = 0; i <= bound; ++i)
    for (unsigned j = 0; i + j <= bound; ++j)
      for (unsigned k = 0; i + j + k <= bound; ++k) {
        const Monomial u = make(i, j, k);
        if (divisible(u, computed) != expected(u)) return false;
      }
  return true;
}

inline unsigned max_degree(const std::vector<Monomial>& gens) {
  unsigned d = 0;
  for (const auto& g : gens) d = std::max(d, g.degree());
  return d;
}

inline bool intersect_matches(const Case& c) {
  const auto computed = monomial_basis(wallcross::ideal_intersect(to_ideal(c.a), to_ideal(c.b)));
  if (!computed) return false;
  const unsigned bound = std::max({max_degree(c.a) + max_degree(c.b), max_degree(*computed)});
  return agrees_up_to(
      *computed, [&](const Monomial& u) { return divisible(u, c.a) && divisible(u, c.b); }, bound);
}

inline bool colon_matches(const Case& c) {
  const auto computed =
      monomial_basis(wallcross::ideal_colon(to_ideal(c.a), Polynomial::monomial(ring(), c.f)));
  if (!computed) return false;
  const unsigned bound = std::max(max_degree(c.a), max_degree(*computed));
  return agrees_up_to(*computed, [&](const Monomial& u) { return divisible(u * c.f, c.a); }, bound);
}

}  // namespace monomial_oracle
