#include "wallcross/tiltwalls.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace wallcross {

const PolyRing& tilt_ring() {
  static const PolyRing ring({"a", "b"});
  return ring;
}

// ---- WallLocus ------------------------------------------------------------------

WallLocus WallLocus::circle(Rational center_beta, Rational radius_sq) {
  if (radius_sq.sign() <= 0) throw std::invalid_argument("circle wall needs radius_sq > 0");
  WallLocus w(Kind::Circle);
  w.first_ = std::move(center_beta);
  w.second_ = std::move(radius_sq);
  return w;
}

WallLocus WallLocus::vertical_line(Rational beta) {
  WallLocus w(Kind::VerticalLine);
  w.first_ = std::move(beta);
  return w;
}

const Rational& WallLocus::center_beta() const {
  if (kind_ != Kind::Circle) throw std::logic_error("wall is not a circle");
  return first_;
}

const Rational& WallLocus::radius_sq() const {
  if (kind_ != Kind::Circle) throw std::logic_error("wall is not a circle");
  return second_;
}

const Rational& WallLocus::beta() const {
  if (kind_ != Kind::VerticalLine) throw std::logic_error("wall is not a vertical line");
  return first_;
}

bool WallLocus::contains(const StabilityPoint& p) const {
  switch (kind_) {
    case Kind::Circle: {
      const Rational db = p.beta() - first_;
      return p.alpha_sq() + db * db == second_;
    }
    case Kind::VerticalLine: return p.beta() == first_;
    case Kind::Everywhere: return true;
    case Kind::Empty: return false;
  }
  return false;
}

std::string WallLocus::json() const {
  switch (kind_) {
    case Kind::Circle:
      return R"({"kind":"circle","center_beta":")" + first_.str() + R"(","radius_sq":")" + second_.str() + "\"}";
    case Kind::VerticalLine: return R"({"kind":"vline","beta":")" + first_.str() + "\"}";
    case Kind::Everywhere: return R"({"kind":"everywhere"})";
    case Kind::Empty: return R"({"kind":"empty"})";
  }
  return "{}";
}

std::string WallLocus::str() const {
  switch (kind_) {
    case Kind::Circle: return "circle alpha^2 + (beta - (" + first_.str() + "))^2 = " + second_.str();
    case Kind::VerticalLine: return "vertical line beta = " + first_.str();
    case Kind::Everywhere: return "everywhere";
    case Kind::Empty: return "empty";
  }
  return "?";
}

// ---- walls ----------------------------------------------------------------------

namespace {

struct TiltParts {
  Polynomial numerator;    // ch2^b - a/2 ch0
  Polynomial denominator;  // ch1^b
};

TiltParts tilt_parts(const ChernCharacter& v) {
  const PolyRing& r = tilt_ring();
  const Polynomial a = Polynomial::variable(r, "a");
  const Polynomial b = Polynomial::variable(r, "b");
  const Polynomial c0(r, v.ch0()), c1(r, v.ch1()), c2(r, v.ch2());
  return {c2 - b * c1 + Rational(1, 2) * b * b * c0 - Rational(1, 2) * a * c0, c1 - b * c0};
}

}  // namespace

Polynomial nu_wall_polynomial(const ChernCharacter& f, const ChernCharacter& g) {
  const TiltParts pf = tilt_parts(f);
  const TiltParts pg = tilt_parts(g);
  return pf.numerator * pg.denominator - pg.numerator * pf.denominator;
}

WallLocus nu_wall(const ChernCharacter& f, const ChernCharacter& g) {
  const bool f_infinite = f.ch0().is_zero() && f.ch1().is_zero();
  const bool g_infinite = g.ch0().is_zero() && g.ch1().is_zero();
  if (f_infinite && g_infinite) {
    throw std::invalid_argument("both nu slopes are identically +infinity");
  }
  const Polynomial w = nu_wall_polynomial(f, g);
  const std::size_t a = tilt_ring().require("a");
  const std::size_t b = tilt_ring().require("b");
  const auto in_a = w.coefficients_in(a);
  if (in_a.size() > 2 || (in_a.size() == 2 && !in_a[1].is_constant())) {
    throw std::logic_error("nu wall is not affine in alpha^2 with constant coefficient");
  }
  const Rational lead = in_a.size() == 2 ? in_a[1].constant_term() : Rational(0);
  const auto in_b = in_a.empty() ? std::vector<Polynomial>{} : in_a[0].coefficients_in(b);
  auto coeff = [&](std::size_t k) { return k < in_b.size() ? in_b[k].constant_term() : Rational(0); };
  if (in_b.size() > 3 || coeff(2) != lead) throw std::logic_error("nu wall is not of circle form");

  if (!lead.is_zero()) {
    // a + b^2 + p b + q = 0  <=>  a + (b + p/2)^2 = p^2/4 - q
    const Rational p = coeff(1) / lead;
    const Rational q = coeff(0) / lead;
    const Rational center = -p / 2;
    const Rational radius_sq = p * p / 4 - q;
    if (radius_sq.sign() <= 0) return WallLocus::empty();
    return WallLocus::circle(center, radius_sq);
  }
  if (!coeff(1).is_zero()) return WallLocus::vertical_line(-coeff(0) / coeff(1));
  return coeff(0).is_zero() ? WallLocus::everywhere() : WallLocus::empty();
}

Polynomial ZeroLocus::polynomial() const {
  const PolyRing& r = tilt_ring();
  const Polynomial a = Polynomial::variable(r, "a");
  const Polynomial b = Polynomial::variable(r, "b");
  return a_coeff * a + bb_coeff * b * b + b_coeff * b + Polynomial(r, constant);
}

std::string ZeroLocus::str() const { return polynomial().str() + " = 0"; }

ZeroLocus nu_zero_locus(const ChernCharacter& v) {
  return {-v.ch0() / 2, v.ch0() / 2, -v.ch1(), v.ch2()};
}

// ---- destabilizers --------------------------------------------------------------

ChernCharacter TruncatedCharacter::untwisted(long long beta0) const {
  return twist(ChernCharacter(rank, c, d, Rational(0)), Rational(-beta0));
}

std::string TruncatedCharacter::str() const { return "(" + rank.str() + "," + c.str() + "," + d.str() + ")"; }

WallLocus DestabilizerCandidate::wall(long long beta0) const {
  return nu_wall(sub().untwisted(beta0), complement.untwisted(beta0));
}

std::string DestabilizerCandidate::str() const { return "{" + sub().str() + ", " + complement.str() + "}"; }

namespace {

struct Interval {
  std::optional<Rational> lo;  // inclusive unless lo_strict
  std::optional<Rational> hi;
  bool lo_strict = false;
  bool hi_strict = false;

  void at_least(const Rational& v, bool strict) {
    if (!lo || v > *lo || (v == *lo && strict)) {
      lo = v;
      lo_strict = strict;
    }
  }
  void at_most(const Rational& v, bool strict) {
    if (!hi || v < *hi || (v == *hi && strict)) {
      hi = v;
      hi_strict = strict;
    }
  }
};

// (d*e1 - c*e2) / (r*e1 - c*e0) * 2, the alpha^2 where nu(F) = nu(G) on the ray.
std::optional<Rational> solve_alpha_sq(const Rational& r, const Rational& c, const Rational& d,
                                       const TruncatedCharacter& e) {
  const Rational denom = r * e.c - c * e.rank;
  if (denom.is_zero()) return std::nullopt;
  return 2 * (d * e.c - c * e.d) / denom;
}

}  // namespace

std::vector<DestabilizerCandidate> enumerate_destabilizers(const ChernCharacter& v, long long beta0,
                                                           long long rank_bound) {
  if (rank_bound == 0) throw std::invalid_argument("rank_bound must be nonzero");
  if (!v.in_lattice()) throw std::invalid_argument("Chern character " + v.str() + " is not in the lattice");
  const long long bound = rank_bound < 0 ? -rank_bound : rank_bound;
  const ChernCharacter t = twist(v, Rational(beta0));
  const TruncatedCharacter e{t.ch0(), t.ch1(), t.ch2()};
  if (e.c.sign() <= 0) {
    throw std::invalid_argument("twisted ch1 at beta0 = " + std::to_string(beta0) + " must be positive, got " +
                                e.c.str());
  }
  const long long e1 = e.c.to_int64();

  std::vector<DestabilizerCandidate> found;
  for (long long r = -bound; r <= bound; ++r) {
    for (long long c = 1; c < e1; ++c) {
      const Rational rr(r), cc(c);
      const Rational gr = e.rank - rr;
      const Rational gc = e.c - cc;
      const Rational denom = rr * e.c - cc * e.rank;
      if (denom.is_zero()) continue;  // proportional classes: no wall on this ray

      Interval range;
      // Bogomolov on F: c^2 - 2 r d >= 0.
      if (r > 0) range.at_most(cc * cc / (2 * rr), false);
      if (r < 0) range.at_least(cc * cc / (2 * rr), false);
      // Bogomolov on G: gc^2 - 2 gr (e2 - d) >= 0.
      if (gr.sign() > 0) range.at_least(e.d - gc * gc / (2 * gr), false);
      if (gr.sign() < 0) range.at_most(e.d - gc * gc / (2 * gr), false);
      // alpha^2 > 0.
      const Rational pivot = cc * e.d / e.c;
      if (denom.sign() > 0) {
        range.at_least(pivot, true);
      } else {
        range.at_most(pivot, true);
      }
      if (!range.lo || !range.hi) {
        throw std::domain_error("d-range unbounded for r = " + std::to_string(r) + ", c = " + std::to_string(c));
      }
      for (mpz_class k = (2 * *range.lo).ceil(); k <= (2 * *range.hi).floor(); ++k) {
        const Rational d = Rational(k) / 2;
        const TruncatedCharacter sub{rr, cc, d};
        const TruncatedCharacter comp{gr, gc, e.d - d};
        const auto a = solve_alpha_sq(rr, cc, d, e);
        if (!a || a->sign() <= 0) continue;
        if (sub.discriminant().sign() < 0 || comp.discriminant().sign() < 0) continue;

        DestabilizerCandidate cand{r, c, d, comp, *a};
        // Canonical representative of the unordered pair.
        const bool swap = comp.rank > rr || (comp.rank == rr && (comp.c < cc || (comp.c == cc && comp.d < d)));
        if (swap) {
          cand = DestabilizerCandidate{comp.rank.to_int64(), comp.c.to_int64(), comp.d, sub, *a};
        }
        if (std::find(found.begin(), found.end(), cand) == found.end()) found.push_back(std::move(cand));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const DestabilizerCandidate& x, const DestabilizerCandidate& y) {
    if (x.r != y.r) return x.r > y.r;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
  });
  return found;
}

std::vector<std::pair<long long, long long>> refine_point_lengths(const Rational& e3, const Rational& f3_base,
                                                                  const Rational& g3_base) {
  const Rational total = f3_base + g3_base - e3;
  std::vector<std::pair<long long, long long>> out;
  if (!total.is_integer() || total.sign() < 0) return out;
  const long long n_total = total.to_int64();
  for (long long n = 0; n <= n_total; ++n) out.emplace_back(n, n_total - n);
  return out;
}

}  // namespace wallcross
