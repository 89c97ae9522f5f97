#include "wallcross/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <utility>

namespace wallcross {

namespace {

// Polynomial as terms sorted by decreasing monomial under a fixed order.
using Term = std::pair<Monomial, Rational>;
using SortedPoly = std::vector<Term>;

SortedPoly to_sorted(const Polynomial& p, const MonomialOrder& order) {
  SortedPoly out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.compare(a.first, b.first) > 0; });
  return out;
}

Polynomial from_sorted(const SortedPoly& p, const PolyRing& ring) {
  Polynomial out(ring);
  for (const auto& [m, c] : p) out.add_term(m, c);
  return out;
}

void make_monic(SortedPoly& p) {
  if (p.empty() || p.front().second == Rational(1)) return;
  const Rational inv = p.front().second.inverse();
  for (auto& t : p) t.second *= inv;
}

// p - c * m * q, both sorted.
SortedPoly sub_multiple(const SortedPoly& p, const Rational& c, const Monomial& m, const SortedPoly& q,
                        const MonomialOrder& order) {
  SortedPoly out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    if (j == q.size()) {
      out.push_back(p[i++]);
      continue;
    }
    const Monomial qm = m * q[j].first;
    if (i == p.size()) {
      out.emplace_back(qm, -(c * q[j].second));
      ++j;
      continue;
    }
    const int cmp = order.compare(p[i].first, qm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.emplace_back(qm, -(c * q[j].second));
      ++j;
    } else {
      Rational v = p[i].second - c * q[j].second;
      if (!v.is_zero()) out.emplace_back(qm, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of p by the (monic) polynomials in `basis`, skipping index `skip`.
SortedPoly reduce(SortedPoly p, const std::vector<SortedPoly>& basis, const MonomialOrder& order,
                  std::size_t skip = static_cast<std::size_t>(-1)) {
  SortedPoly remainder;
  while (!p.empty()) {
    const Monomial& lead = p.front().first;
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      const Monomial& g = basis[k].front().first;
      if (!g.divides(lead)) continue;
      const Rational c = p.front().second / basis[k].front().second;
      p = sub_multiple(p, c, lead.quotient(g), basis[k], order);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(std::move(p.front()));
      p.erase(p.begin());
    }
  }
  return remainder;
}

SortedPoly s_polynomial(const SortedPoly& f, const SortedPoly& g, const MonomialOrder& order) {
  const Monomial l = f.front().first.lcm(g.front().first);
  // f, g are monic.
  SortedPoly left;
  const Monomial mf = l.quotient(f.front().first);
  left.reserve(f.size());
  for (const auto& [m, c] : f) left.emplace_back(mf * m, c);
  return sub_multiple(left, Rational(1), l.quotient(g.front().first), g, order);
}

std::vector<SortedPoly> buchberger(std::vector<SortedPoly> basis, const MonomialOrder& order) {
  basis.erase(std::remove_if(basis.begin(), basis.end(), [](const SortedPoly& p) { return p.empty(); }),
              basis.end());
  for (auto& g : basis) make_monic(g);

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  }
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = pending.begin();
    Monomial best_lcm = basis[best->first].front().first.lcm(basis[best->second].front().first);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = basis[it->first].front().first.lcm(basis[it->second].front().first);
      if (order.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = basis[i].front().first;
    const Monomial& lj = basis[j].front().first;
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = basis[k].front().first.divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;

    SortedPoly r = reduce(s_polynomial(basis[i], basis[j], order), basis, order);
    if (r.empty()) continue;
    make_monic(r);
    const std::size_t n = basis.size();
    basis.push_back(std::move(r));
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<SortedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& lk = basis[k].front().first;
      const Monomial& li = basis[i].front().first;
      redundant = lk.divides(li) && (lk != li || k < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Inter-reduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    SortedPoly head{minimal[i].front()};
    SortedPoly tail(minimal[i].begin() + 1, minimal[i].end());
    SortedPoly reduced_tail = reduce(std::move(tail), minimal, order, i);
    head.insert(head.end(), reduced_tail.begin(), reduced_tail.end());
    minimal[i] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const SortedPoly& a, const SortedPoly& b) {
    return order.compare(a.front().first, b.front().first) > 0;
  });
  return minimal;
}

std::string auxiliary_name(const PolyRing& ring) {
  std::string name = "aux_w";
  while (ring.index_of(name)) name += "_";
  return name;
}

}  // namespace

// ---- Ideal ----------------------------------------------------------------------

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (auto& g : generators_) g = g.in_ring(ring_);
}

Ideal Ideal::parse(const PolyRing& ring, std::string_view text, const std::map<std::string, Polynomial>& macros) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw std::invalid_argument("ideal must be written as '(g1, ..., gk)': '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<Polynomial> gens;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      const std::string_view piece = s.substr(start, i - start);
      if (piece.find_first_not_of(" \t") != std::string_view::npos) {
        gens.push_back(Polynomial::parse(ring, piece, macros));
      } else if (i != s.size() || !gens.empty()) {
        throw std::invalid_argument("empty generator in '" + std::string(text) + "'");
      }
      start = i + 1;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
  return Ideal(ring, std::move(gens));
}

Ideal Ideal::unit(const PolyRing& ring) { return Ideal(ring, {Polynomial(ring, Rational(1))}); }

const std::vector<Polynomial>& Ideal::basis() const {
  if (!basis_) throw std::logic_error("ideal has no cached Groebner basis");
  return basis_->elements;
}

const MonomialOrder& Ideal::basis_order() const {
  if (!basis_) throw std::logic_error("ideal has no cached Groebner basis");
  return basis_->order;
}

std::string Ideal::str() const {
  const auto b = basis_for(*this, MonomialOrder::degrevlex());
  std::string out = "(";
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? ", " : "") + b[i].str();
  return out + (b.empty() ? "0)" : ")");
}

Ideal Ideal::in_ring(const PolyRing& target) const {
  std::vector<Polynomial> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(g.in_ring(target));
  return Ideal(target, std::move(gens));
}

Ideal groebner(const Ideal& ideal, const MonomialOrder& order) {
  if (ideal.basis_ && ideal.basis_->order == order) return ideal;
  std::vector<SortedPoly> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(to_sorted(g, order));
  std::vector<Polynomial> elements;
  for (const auto& b : buchberger(std::move(gens), order)) elements.push_back(from_sorted(b, ideal.ring()));
  Ideal out = ideal;
  out.basis_ = std::make_shared<const Ideal::Basis>(Ideal::Basis{order, std::move(elements)});
  return out;
}

std::vector<Polynomial> basis_for(const Ideal& ideal, const MonomialOrder& order) {
  if (ideal.has_basis() && ideal.basis_order() == order) return ideal.basis();
  return groebner(ideal, order).basis();
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<SortedPoly> sorted;
  sorted.reserve(basis.size());
  for (const auto& b : basis) sorted.push_back(to_sorted(b.in_ring(p.ring()), order));
  return from_sorted(reduce(to_sorted(p, order), sorted, order), p.ring());
}

bool member(const Polynomial& p, const Ideal& ideal) {
  if (p.is_zero()) return true;
  const auto order = ideal.has_basis() ? ideal.basis_order() : MonomialOrder::degrevlex();
  return normal_form(p.in_ring(ideal.ring()), basis_for(ideal, order), order).is_zero();
}

bool contains(const Ideal& ideal, const Ideal& sub) {
  const Ideal g = groebner(ideal, ideal.has_basis() ? ideal.basis_order() : MonomialOrder::degrevlex());
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Polynomial& p) { return member(p, g); });
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("ideals from different rings");
  const auto order = MonomialOrder::degrevlex();
  return basis_for(a, order) == basis_for(b, order);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("ideals from different rings");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("ideals from different rings");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) {
      Polynomial p = f * g;
      if (!p.is_zero() && std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    }
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned exponent) {
  Ideal result = Ideal::unit(a.ring());
  for (unsigned i = 0; i < exponent; ++i) result = ideal_product(result, a);
  return result;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("ideals from different rings");
  const PolyRing& ring = a.ring();
  const std::string aux = auxiliary_name(ring);
  const PolyRing big = ring.extended(aux);
  const Polynomial w = Polynomial::variable(big, aux);
  const Polynomial one_minus_w = Polynomial(big, Rational(1)) - w;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(w * f.in_ring(big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_w * g.in_ring(big));
  const Ideal eliminated = eliminate(Ideal(big, std::move(gens)), {aux});
  return eliminated.in_ring(ring);
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const auto order = MonomialOrder::degrevlex();
  const SortedPoly divisor = to_sorted(f, order);
  SortedPoly rest = to_sorted(p.in_ring(f.ring()), order);
  Polynomial quotient(f.ring());
  while (!rest.empty()) {
    const Monomial& lead = rest.front().first;
    if (!divisor.front().first.divides(lead)) {
      throw std::domain_error(f.str() + " does not divide " + p.str());
    }
    const Monomial m = lead.quotient(divisor.front().first);
    const Rational c = rest.front().second / divisor.front().second;
    quotient.add_term(m, c);
    rest = sub_multiple(rest, c, m, divisor, order);
  }
  return quotient;
}

Ideal ideal_colon(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  const Polynomial g = f.in_ring(ideal.ring());
  const Ideal inter = ideal_intersect(ideal, Ideal(ideal.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : inter.generators()) gens.push_back(exact_divide(h, g));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& variables) {
  std::vector<std::size_t> indices;
  for (const auto& v : variables) indices.push_back(ideal.ring().require(v));
  const Ideal g = groebner(ideal, MonomialOrder::block(indices));
  std::vector<Polynomial> kept;
  for (const auto& b : g.basis()) {
    if (std::none_of(indices.begin(), indices.end(), [&](std::size_t i) { return b.involves(i); })) {
      kept.push_back(b);
    }
  }
  return Ideal(ideal.ring(), std::move(kept));
}

Ideal specialize(const Ideal& ideal, const std::string& variable, const Rational& value) {
  const std::size_t var = ideal.ring().require(variable);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    Polynomial s = g.substitute(var, value);
    if (!s.is_zero()) gens.push_back(std::move(s));
  }
  return Ideal(ideal.ring(), std::move(gens));
}

}  // namespace wallcross
