#include "wallcross/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <stdexcept>

namespace wallcross {

// ---- PolyRing ---------------------------------------------------------------

PolyRing::PolyRing(std::vector<std::string> names) {
  if (names.size() > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t PolyRing::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

PolyRing PolyRing::extended(const std::string& name) const {
  auto names = *names_;
  names.push_back(name);
  return PolyRing(std::move(names));
}

// ---- Monomial -----------------------------------------------------------------

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVariables; ++i) q.exp[i] = static_cast<std::uint16_t>(exp[i] - other.exp[i]);
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l;
  for (std::size_t i = 0; i < kMaxVariables; ++i) l.exp[i] = std::max(exp[i], other.exp[i]);
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp[i] != 0 && other.exp[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  return m;
}

// ---- MonomialOrder ------------------------------------------------------------

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (std::find(priority.begin(), priority.end(), i) == priority.end()) priority.push_back(i);
  }
  return MonomialOrder(Kind::Lex, std::move(priority));
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> eliminate) {
  std::sort(eliminate.begin(), eliminate.end());
  eliminate.erase(std::unique(eliminate.begin(), eliminate.end()), eliminate.end());
  return MonomialOrder(Kind::Block, std::move(eliminate));
}

namespace {

// degrevlex restricted to the variables where mask[i] == want.
int degrevlex_compare(const Monomial& a, const Monomial& b, const std::array<bool, kMaxVariables>& mask, bool want) {
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (mask[i] == want) {
      da += a.exp[i];
      db += b.exp[i];
    }
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (mask[i] != want || a.exp[i] == b.exp[i]) continue;
    return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::DegRevLex: {
      static const std::array<bool, kMaxVariables> all{};
      return degrevlex_compare(a, b, all, false);
    }
    case Kind::Lex:
      for (std::size_t v : data_) {
        if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? -1 : 1;
      }
      return 0;
    case Kind::Block: {
      std::array<bool, kMaxVariables> mask{};
      for (std::size_t v : data_) mask[v] = true;
      if (int c = degrevlex_compare(a, b, mask, true); c != 0) return c;
      return degrevlex_compare(a, b, mask, false);
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  auto list = [this] {
    std::string s;
    for (std::size_t i = 0; i < data_.size(); ++i) s += (i ? "," : "") + std::to_string(data_[i]);
    return s;
  };
  switch (kind_) {
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Lex: return "lex(" + list() + ")";
    case Kind::Block: return "block(" + list() + ")";
  }
  return "?";
}

// ---- Polynomial ---------------------------------------------------------------

Polynomial::Polynomial(PolyRing ring, const Rational& constant) : ring_(std::move(ring)) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(const PolyRing& ring, std::string_view name) {
  Monomial m;
  m.exp[ring.require(name)] = 1;
  return monomial(ring, m);
}

Polynomial Polynomial::monomial(const PolyRing& ring, const Monomial& m, const Rational& c) {
  Polynomial p(ring);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m.exp.at(var));
  return d;
}

bool Polynomial::involves(std::size_t var) const { return degree_in(var) > 0; }

const Monomial& Polynomial::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (order.compare(it->first, best->first) > 0) best = it;
  }
  return best->first;
}

const Rational& Polynomial::leading_coefficient(const MonomialOrder& order) const {
  return terms_.at(leading_monomial(order));
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < kMaxVariables && !term.is_zero(); ++i) {
      if (m.exp[i] == 0) continue;
      term *= i < point.size() ? point[i].pow(m.exp[i]) : Rational(0);
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    const unsigned e = rest.exp.at(var);
    rest.exp[var] = 0;
    out.add_term(rest, e == 0 ? c : c * value.pow(e));
  }
  return out;
}

Polynomial Polynomial::substitute(const std::map<std::size_t, Polynomial>& values) const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    Polynomial factor(ring_, c);
    for (const auto& [var, value] : values) {
      const unsigned e = rest.exp.at(var);
      if (e == 0) continue;
      rest.exp[var] = 0;
      factor *= value.pow(e);
    }
    out += factor * monomial(ring_, rest);
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exp.at(var);
    if (e == 0) continue;
    Monomial d = m;
    d.exp[var] = static_cast<std::uint16_t>(e - 1);
    out.add_term(d, c * Rational(static_cast<long>(e)));
  }
  return out;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out(degree_in(var) + 1, Polynomial(ring_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    const unsigned e = rest.exp[var];
    rest.exp[var] = 0;
    out[e].add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::in_ring(const PolyRing& target) const {
  if (target == ring_) return *this;
  std::array<std::size_t, kMaxVariables> map{};
  std::array<bool, kMaxVariables> used{};
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < ring_.size(); ++i) used[i] = used[i] || m.exp[i] != 0;
  }
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    auto j = target.index_of(ring_.name(i));
    if (!j) {
      if (used[i]) throw std::invalid_argument("variable '" + ring_.name(i) + "' not present in target ring");
      continue;
    }
    map[i] = *j;
  }
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Monomial mm;
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (m.exp[i] != 0) mm.exp[map[i]] = m.exp[i];
    }
    out.add_term(mm, c);
  }
  return out;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return *this * leading_coefficient(order).inverse();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!(ring_ == o.ring_)) throw std::invalid_argument("polynomials from different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial out(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(ring_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  const auto order = MonomialOrder::degrevlex();
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& l, const auto& r) { return order.compare(l.first, r.first) > 0; });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = c.abs();
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (m.exp[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += ring_.name(i);
      if (m.exp[i] > 1) factors += "^" + std::to_string(m.exp[i]);
    }
    if (factors.empty()) {
      out += magnitude.str();
    } else if (magnitude == Rational(1)) {
      out += factors;
    } else {
      out += magnitude.str() + "*" + factors;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

// ---- parser -------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(const PolyRing& ring, std::string_view text, const std::map<std::string, Polynomial>& macros)
      : ring_(ring), text_(text), macros_(macros) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) + "': " + what +
                                " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial p = term();
    while (true) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    while (true) {
      if (accept('*')) {
        p *= unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        p *= d.constant_term().inverse();
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 64) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial(ring_, Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\'')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (ring_.index_of(name)) return Polynomial::variable(ring_, name);
      if (auto it = macros_.find(name); it != macros_.end()) return it->second.in_ring(ring_);
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const PolyRing& ring_;
  std::string_view text_;
  const std::map<std::string, Polynomial>& macros_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const PolyRing& ring, std::string_view text,
                             const std::map<std::string, Polynomial>& macros) {
  return Parser(ring, text, macros).parse();
}

}  // namespace wallcross
