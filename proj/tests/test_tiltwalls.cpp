#include <doctest.h>

#include <random>

#include "wallcross/tiltwalls.hpp"

using namespace wallcross;

namespace {

ChernCharacter CC(const char* text) { return ChernCharacter::parse(text); }
Rational Q(long long p, long long q = 1) { return Rational(p, q); }

// Independent scan: every (r, c, d) with the stated inequalities, checked
// directly through nu slopes of the untwisted classes.
std::vector<std::pair<TruncatedCharacter, TruncatedCharacter>> brute_pairs(const ChernCharacter& v, long long beta0,
                                                                           long long bound, long long d_span) {
  const ChernCharacter t = twist(v, Q(beta0));
  std::vector<std::pair<TruncatedCharacter, TruncatedCharacter>> out;
  for (long long r = -bound; r <= bound; ++r) {
    for (long long c = 1; Q(c) < t.ch1(); ++c) {
      for (long long k = -2 * d_span; k <= 2 * d_span; ++k) {
        const TruncatedCharacter f{Q(r), Q(c), Q(k, 2)};
        const TruncatedCharacter g{t.ch0() - Q(r), t.ch1() - Q(c), t.ch2() - Q(k, 2)};
        if (f.discriminant().sign() < 0 || g.discriminant().sign() < 0) continue;
        // nu_{alpha,0}(F) = nu_{alpha,0}(G) on the twisted ray: (d - a r/2)/c = (g2 - a g0/2)/g1.
        const Rational lhs_a = -Q(r) * g.c / 2 + g.rank * Q(c) / 2;
        const Rational rhs = g.d * Q(c) - f.d * g.c;
        if (lhs_a.is_zero()) continue;
        const Rational a = rhs / lhs_a;
        if (a.sign() <= 0) continue;
        const bool first = f.rank > g.rank || (f.rank == g.rank && (f.c < g.c || (f.c == g.c && f.d <= g.d)));
        if (first) out.emplace_back(f, g);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("nu walls") {
  CHECK(nu_wall(sheaf_library(sheaf::IdealPoints{-1, 1}), sheaf_library(sheaf::PlaneTwist{-2})) ==
        WallLocus::circle(Q(-5, 2), Q(9, 4)));
  CHECK(nu_wall(sheaf_library(sheaf::LineBundle{-2}), sheaf_library(sheaf::PlaneTwist{-2})) ==
        WallLocus::circle(Q(-5, 2), Q(1, 4)));
  CHECK(nu_wall(sheaf_library(sheaf::LineBundle{-1}), sheaf_library(sheaf::LineBundle{-3})) ==
        WallLocus::circle(Q(-2), Q(1)));
  CHECK(nu_wall(sheaf_library(sheaf::LineBundle{-1}), sheaf_library(sheaf::PlaneIdealPoints{-2, 1})) ==
        WallLocus::circle(Q(-5, 2), Q(9, 4)));
  CHECK(nu_wall(CC("1,0,0,0"), CC("2,0,0,0")).kind() == WallLocus::Kind::Everywhere);
  CHECK(nu_wall(CC("1,0,0,0"), CC("1,0,-1,0")) == WallLocus::vertical_line(Q(0)));
  CHECK(nu_wall(CC("0,1,0,0"), CC("0,2,1,0")).kind() == WallLocus::Kind::Empty);
  CHECK_THROWS_AS(nu_wall(CC("0,0,1,0"), CC("0,0,0,1")), std::invalid_argument);
  CHECK_THROWS_AS(WallLocus::circle(Q(0), Q(0)), std::invalid_argument);
}

TEST_CASE("wall locus json") {
  CHECK(WallLocus::circle(Q(-5, 2), Q(9, 4)).json() == R"({"kind":"circle","center_beta":"-5/2","radius_sq":"9/4"})");
  CHECK(WallLocus::vertical_line(Q(-5, 2)).json() == R"({"kind":"vline","beta":"-5/2"})");
}

TEST_CASE("zero loci") {
  const ZeroLocus hyper = nu_zero_locus(skew_lines_class());
  CHECK(hyper == ZeroLocus{Q(-1, 2), Q(1, 2), Q(0), Q(-2)});
  CHECK(hyper.polynomial().evaluate({Q(9, 4), Q(-5, 2)}).is_zero());

  const ZeroLocus line = nu_zero_locus(CC("0,1,-5/2,0"));
  CHECK(line.a_coeff.is_zero());
  CHECK(line.bb_coeff.is_zero());
  CHECK(-line.constant / line.b_coeff == Q(-5, 2));

  const ZeroLocus f = nu_zero_locus(CC("1,-1,1/2,0"));
  // (beta + 1)^2 = alpha^2: passes through (3/2, -5/2).
  CHECK(f.polynomial().evaluate({Q(9, 4), Q(-5, 2)}).is_zero());
  CHECK(Rational(2) * f.polynomial() == Polynomial::parse(tilt_ring(), "b^2 + 2*b + 1 - a"));

  // The top of the unique wall lies on the hyperbola.
  const WallLocus w = WallLocus::circle(Q(-5, 2), Q(9, 4));
  CHECK(hyper.polynomial().evaluate({w.radius_sq(), w.center_beta()}).is_zero());
}

TEST_CASE("destabilizers for skew lines") {
  const auto found = enumerate_destabilizers(skew_lines_class(), -2, 10);
  REQUIRE(found.size() == 1);
  CHECK(found[0].sub() == TruncatedCharacter{Q(1), Q(1), Q(1, 2)});
  CHECK(found[0].complement == TruncatedCharacter{Q(0), Q(1), Q(-1, 2)});
  CHECK(found[0].alpha_sq == Q(2));
  CHECK(found[0].wall(-2) == WallLocus::circle(Q(-5, 2), Q(9, 4)));
  CHECK(enumerate_destabilizers(skew_lines_class(), -2, 1) == found);
  CHECK(enumerate_destabilizers(CC("1,0,0,-1"), -1, 10).empty());

  CHECK_THROWS_AS(enumerate_destabilizers(skew_lines_class(), -2, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_destabilizers(skew_lines_class(), 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_destabilizers(CC("1,0,1/3,0"), -2, 10), std::invalid_argument);
}

TEST_CASE("destabilizer search agrees with a brute force scan") {
  const std::vector<std::pair<ChernCharacter, long long>> inputs = {
      {skew_lines_class(), -2}, {skew_lines_class(), -3}, {CC("1,0,-1,1/2"), -2},
      {CC("2,-1,-3/2,1/6"), -2}, {CC("1,0,-3,5"), -3}, {CC("3,1,-1/2,0"), -1}};
  for (const auto& [v, beta0] : inputs) {
    CAPTURE(v.str());
    CAPTURE(beta0);
    std::vector<DestabilizerCandidate> found;
    try {
      found = enumerate_destabilizers(v, beta0, 4);
    } catch (const std::domain_error&) {
      continue;
    }
    const auto brute = brute_pairs(v, beta0, 4, 60);
    CHECK(found.size() == brute.size());
    for (const auto& cand : found) {
      const bool present = std::any_of(brute.begin(), brute.end(), [&](const auto& p) {
        return p.first == cand.sub() && p.second == cand.complement;
      });
      CHECK(present);
      CHECK(cand.sub().discriminant().sign() >= 0);
      CHECK(cand.complement.discriminant().sign() >= 0);
      CHECK(cand.alpha_sq.sign() > 0);
    }
  }
}

TEST_CASE("point length refinement") {
  using Pairs = std::vector<std::pair<long long, long long>>;
  CHECK(refine_point_lengths(Q(-2, 3), Q(1, 6), Q(1, 6)) == Pairs{{0, 1}, {1, 0}});
  CHECK(refine_point_lengths(Q(1, 3), Q(1, 6), Q(1, 6)) == Pairs{{0, 0}});
  CHECK(refine_point_lengths(Q(-1, 6), Q(1, 6), Q(1, 6)).empty());
}

TEST_CASE("circle form and point-on-wall consistency for random pairs") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> d(-6, 6);
  const PolyRing direct({"al", "b"});
  const Polynomial al = Polynomial::variable(direct, "al");
  const Polynomial b = Polynomial::variable(direct, "b");
  const std::size_t a_index = tilt_ring().require("a");
  int circles = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const ChernCharacter f{Q(d(rng)), Q(d(rng)), Q(d(rng), 2), Q(d(rng), 6)};
    const ChernCharacter g{Q(d(rng)), Q(d(rng)), Q(d(rng), 2), Q(d(rng), 6)};
    if (f.ch0().is_zero() && f.ch1().is_zero() && g.ch0().is_zero() && g.ch1().is_zero()) continue;
    // Expansion with alpha itself as the variable.
    auto parts = [&](const ChernCharacter& v) {
      const Polynomial c0(direct, v.ch0()), c1(direct, v.ch1()), c2(direct, v.ch2());
      return std::pair{c2 - b * c1 + Q(1, 2) * b * b * c0 - Q(1, 2) * al * al * c0, c1 - b * c0};
    };
    const auto [nf, df] = parts(f);
    const auto [ng, dg] = parts(g);
    const Polynomial eq = nf * dg - ng * df;
    CHECK(eq.coefficient(Monomial{{2, 0}}) == eq.coefficient(Monomial{{0, 2}}));
    for (const auto& [mono, coeff] : eq.terms()) CHECK(mono.exp[0] % 2 == 0);
    CHECK(eq.degree_in(0) <= 2);

    const WallLocus w = nu_wall(f, g);
    if (w.kind() != WallLocus::Kind::Circle) continue;
    ++circles;
    // The wall polynomial vanishes identically along the circle a = rho - (b - c)^2.
    const Polynomial bb = Polynomial::variable(tilt_ring(), "b");
    const Polynomial shifted = bb - Polynomial(tilt_ring(), w.center_beta());
    const Polynomial on_circle = Polynomial(tilt_ring(), w.radius_sq()) - shifted * shifted;
    std::map<std::size_t, Polynomial> sub{{a_index, on_circle}};
    CHECK(nu_wall_polynomial(f, g).substitute(sub).is_zero());
    // Exact slope equality at the top point when its alpha is rational.
    const auto num = w.radius_sq().numerator();
    const auto den = w.radius_sq().denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      const StabilityPoint top(Rational(mpq_class(rn, rd)), w.center_beta());
      const auto sf = nu_slope(f, top);
      const auto sg = nu_slope(g, top);
      if (!sf.is_infinite() && !sg.is_infinite()) CHECK(sf == sg);
    }
  }
  CHECK(circles > 20);
}

TEST_CASE("point on wall consistency at rational points") {
  // Walls through a chosen rational point: pick (alpha, beta) and f, then
  // the wall of f and g contains the point whenever nu slopes agree there.
  const ChernCharacter f = sheaf_library(sheaf::IdealPoints{-1, 1});
  const ChernCharacter g = sheaf_library(sheaf::PlaneTwist{-2});
  const WallLocus w = nu_wall(f, g);
  for (const auto& [alpha, beta] : std::vector<std::pair<Rational, Rational>>{
           {Q(3, 2), Q(-5, 2)}, {Q(6, 5), Q(-5, 2) + Q(9, 10)}, {Q(6, 5), Q(-5, 2) - Q(9, 10)}}) {
    const StabilityPoint p(alpha, beta);
    CHECK(w.contains(p));
    CHECK(nu_slope(f, p) == nu_slope(g, p));
  }
}
