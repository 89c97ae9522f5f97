#include <doctest.h>

#include <random>

#include "wallcross/lambdawalls.hpp"

using namespace wallcross;

namespace {

ChernCharacter CC(const char* text) { return ChernCharacter::parse(text); }
Rational Q(long long p, long long q = 1) { return Rational(p, q); }

const Rational kAlpha0 = Q(3, 2);
const Rational kBeta0 = Q(-5, 2);

ChernCharacter o_minus_1() { return sheaf_library(sheaf::LineBundle{-1}); }
ChernCharacter plane_point() { return sheaf_library(sheaf::PlaneIdealPoints{-2, 1}); }
ChernCharacter point_ideal() { return sheaf_library(sheaf::IdealPoints{-1, 1}); }
ChernCharacter plane() { return sheaf_library(sheaf::PlaneTwist{-2}); }

// Re Z and Im Z from the twisted character, no polynomials involved.
std::pair<Rational, Rational> z_direct(const ChernCharacter& v, const StabilityPoint& p) {
  const ChernCharacter t = twist(v, p.beta());
  const Rational a = p.alpha_sq();
  return {-t.ch3() + a * (Q(1, 6) + p.s()) * t.ch1(), t.ch2() - a / 2 * t.ch0()};
}

Rational phi_direct(const ChernCharacter& f, const ChernCharacter& g, const StabilityPoint& p) {
  const auto [rf, imf] = z_direct(f, p);
  const auto [rg, img] = z_direct(g, p);
  return rf * img - rg * imf;
}

std::string chamber_oracle(const StabilityPoint& p) {
  const ChernCharacter t = twist(skew_lines_class(), p.beta());
  if (p.beta().sign() >= 0 || (t.ch2() - p.alpha_sq() / 2).sign() <= 0) return "outside";
  const int s1 = phi_direct(o_minus_1(), plane_point(), p).sign();
  const int s2 = phi_direct(point_ideal(), plane(), p).sign();
  if (s1 == 0 && s2 == 0) return "on W1 and W2";
  if (s1 == 0) return "on W1";
  if (s2 == 0) return "on W2";
  if (s1 > 0 && s2 > 0) return "I";
  if (s1 < 0 && s2 > 0) return "II";
  if (s1 < 0 && s2 < 0) return "III";
  return "(+,-)";
}

}  // namespace

TEST_CASE("phi basics") {
  const WallPolynomial w1 = wall_w1();
  const WallPolynomial w2 = wall_w2();
  CHECK(w1.label == "W1");
  CHECK(w1.poly.degree_in(lambda_ring().require("a")) <= 2);
  CHECK(phi(point_ideal(), point_ideal()).poly.is_zero());
  CHECK((phi(o_minus_1(), plane_point()).poly + phi(plane_point(), o_minus_1()).poly).is_zero());
  for (const Rational& s : {Q(1, 6), Q(1, 3), Q(1), Q(7, 2)}) {
    const StabilityPoint p(kAlpha0, kBeta0, s);
    CHECK(evaluate_wall(w1, p).is_zero());
    CHECK(evaluate_wall(w2, p).is_zero());
  }
  // Symbolic values agree with the direct formula off the wall too.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> n(1, 20);
  for (int i = 0; i < 50; ++i) {
    const StabilityPoint p(Q(n(rng), 4), Q(-n(rng), 4), Q(n(rng), 6));
    CHECK(evaluate_wall(w1, p) == phi_direct(o_minus_1(), plane_point(), p));
    CHECK(evaluate_wall(w2, p) == phi_direct(point_ideal(), plane(), p));
  }
}

TEST_CASE("alpha derivatives") {
  const Polynomial d1 = phi_alpha_derivative_symbolic(wall_w1(), kAlpha0, kBeta0);
  const Polynomial d2 = phi_alpha_derivative_symbolic(wall_w2(), kAlpha0, kBeta0);
  CHECK(d1 == Polynomial::parse(lambda_ring(), "2 + 27/8*s"));
  CHECK(d2 == Polynomial::parse(lambda_ring(), "1/2 + 27/8*s"));
  const StabilityPoint p(kAlpha0, kBeta0, Q(1, 3));
  CHECK(phi_alpha_derivative_at(wall_w1(), p) == Q(25, 8));
  CHECK(phi_alpha_derivative_at(wall_w2(), p) == Q(13, 8));
  CHECK(phi_alpha_derivative_at(phi(plane(), plane()), p).is_zero());
}

TEST_CASE("wall slopes") {
  for (const Rational& s : {Q(1, 6), Q(1, 3), Q(1), Q(7, 2)}) {
    CAPTURE(s.str());
    const StabilityPoint p(kAlpha0, kBeta0, s);
    const Rational slope1 = wall_slope_at(wall_w1(), p);
    const Rational slope2 = wall_slope_at(wall_w2(), p);
    CHECK(slope1 == -(Q(27) * s / 16 + 1).inverse());
    CHECK(slope2 == (Q(27) * s / 4 + 1).inverse());
  }
  const StabilityPoint p(kAlpha0, kBeta0, Q(1, 3));
  CHECK(wall_slope_at(wall_w1(), p) == Q(-16, 25));
  CHECK(wall_slope_at(wall_w2(), p) == Q(4, 13));
  CHECK(wall_slope_at(hyperbola(), StabilityPoint(kAlpha0, kBeta0)) == Q(-5, 3));

  CHECK_THROWS_WITH_AS(wall_slope_at(wall_w1(), StabilityPoint(Q(1), kBeta0, Q(1, 3))), doctest::Contains("not on wall"),
                       WallError);
  // b - 1 vanishes at beta = 1 and has no a-dependence.
  const WallPolynomial vertical = WallPolynomial::from_locus(WallLocus::vertical_line(Q(1)), "line");
  CHECK_THROWS_WITH_AS(wall_slope_at(vertical, StabilityPoint(Q(1), Q(1))), doctest::Contains("vertical tangent"),
                       WallError);
}

TEST_CASE("slope window") {
  for (const Rational& s : {Q(1, 6), Q(1, 3), Q(1)}) {
    const StabilityPoint p(kAlpha0, kBeta0, s);
    const Rational s1 = wall_slope_at(wall_w1(), p);
    const Rational s2 = wall_slope_at(wall_w2(), p);
    CHECK(s1 > Q(-1));
    CHECK(s1 < Q(0));
    CHECK(s2 > Q(0));
    CHECK(s2 < Q(1));
  }
}

TEST_CASE("lambda slopes agree at rational points of the walls") {
  // Phi is affine in s, so fixing (alpha, beta) gives a rational s on the wall.
  const std::size_t s_index = lambda_ring().require("s");
  int checked = 0;
  for (int i = 1; i <= 12; ++i) {
    for (int j = 1; j <= 12; ++j) {
      const Rational alpha = kAlpha0 + Q(i - 6, 20);
      const Rational beta = kBeta0 + Q(j - 6, 20);
      for (const auto& [w, f, g] : {std::tuple{wall_w1(), o_minus_1(), plane_point()},
                                    std::tuple{wall_w2(), point_ideal(), plane()}}) {
        const Polynomial in_s = w.poly.substitute(lambda_ring().require("a"), alpha * alpha)
                                    .substitute(lambda_ring().require("b"), beta);
        if (in_s.degree_in(s_index) != 1) continue;
        const auto c = in_s.coefficients_in(s_index);
        const Rational s = -c[0].constant_term() / c[1].constant_term();
        if (s.sign() <= 0) continue;
        const StabilityPoint p(alpha, beta, s);
        CHECK(evaluate_wall(w, p).is_zero());
        const auto lf = lambda_slope(f, p);
        const auto lg = lambda_slope(g, p);
        if (lf.is_infinite() || lg.is_infinite()) continue;
        CHECK(lf == lg);
        ++checked;
      }
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("chamber classification") {
  const ChernCharacter v = skew_lines_class();
  CHECK(classify_chamber(v, StabilityPoint(Q(2), kBeta0, Q(1, 3))).kind == ChamberLabel::Kind::OutsideRegion);
  CHECK(classify_chamber(v, StabilityPoint(kAlpha0, kBeta0, Q(1, 3))).kind == ChamberLabel::Kind::OutsideRegion);
  CHECK(classify_chamber(v, StabilityPoint(Q(1), Q(1), Q(1, 3))).kind == ChamberLabel::Kind::OutsideRegion);

  const StabilityPoint inside(Q(1), kBeta0, Q(1, 3));
  const ChamberLabel label = classify_chamber(v, inside);
  CHECK((label.kind == ChamberLabel::Kind::ChamberII || label.kind == ChamberLabel::Kind::ChamberIII));
  CHECK(label.str() == chamber_oracle(inside));
  CHECK(label.kind == ChamberLabel::Kind::ChamberIII);

  CHECK_THROWS_AS(classify_chamber(CC("1,0,-1,0"), inside), std::invalid_argument);
  CHECK_THROWS_AS(classify_chamber(v, StabilityPoint(Q(1), kBeta0)), std::invalid_argument);
}

TEST_CASE("chamber labels match the sign oracle on a grid") {
  int seen_i = 0, seen_ii = 0, seen_iii = 0;
  for (const Rational& s : {Q(1, 6), Q(1, 3), Q(1)}) {
    for (int i = 1; i <= 40; ++i) {
      for (int j = 0; j <= 30; ++j) {
        const StabilityPoint p(Q(i, 20), Q(-3) + Q(j, 60), s);
        const std::string expected = chamber_oracle(p);
        REQUIRE(expected != "(+,-)");
        const ChamberLabel got = classify_chamber(skew_lines_class(), p);
        CHECK(got.str() == expected);
        seen_i += got.kind == ChamberLabel::Kind::ChamberI;
        seen_ii += got.kind == ChamberLabel::Kind::ChamberII;
        seen_iii += got.kind == ChamberLabel::Kind::ChamberIII;
      }
    }
  }
  CHECK(seen_i > 0);
  CHECK(seen_ii > 0);
  CHECK(seen_iii > 0);
}

TEST_CASE("chambers descend with alpha") {
  // Walking down from the hyperbola on a vertical line left of beta0,
  // staying near (3/2, -5/2): labels only move I -> II -> III.
  const Rational beta = Q(-27, 10);
  const Rational s = Q(1, 3);
  int last = 0;
  for (int i = 200; i >= 100; --i) {
    const StabilityPoint p(Q(i, 100), beta, s);
    const ChamberLabel label = classify_chamber(skew_lines_class(), p);
    int rank = 0;
    switch (label.kind) {
      case ChamberLabel::Kind::ChamberI: rank = 1; break;
      case ChamberLabel::Kind::ChamberII: rank = 2; break;
      case ChamberLabel::Kind::ChamberIII: rank = 3; break;
      default: continue;
    }
    CHECK(rank >= last);
    last = rank;
  }
  CHECK(last == 3);
}

TEST_CASE("sampling walls") {
  const WallLocus tilt = WallLocus::circle(Q(-5, 2), Q(9, 4));
  const auto rows = sample_wall(tilt, Q(1, 3), Q(-4), Q(-1), 61);
  const auto at = [&](const std::vector<WallSample>& r, const Rational& beta) {
    std::vector<std::string> out;
    for (const auto& row : r)
      if (row.beta == beta) out.push_back(row.alpha_text);
    return out;
  };
  CHECK(at(rows, Q(-5, 2)) == std::vector<std::string>{"1.5"});
  CHECK(at(rows, Q(-4)).empty());
  CHECK(at(rows, Q(-1)).empty());
  CHECK(at(rows, Q(-2)) == std::vector<std::string>{"1.41421356237"});

  const auto hyper = sample_wall(hyperbola(), Q(1, 3), Q(-4), Q(-1), 61);
  CHECK(at(hyper, Q(-5, 2)) == std::vector<std::string>{"1.5"});
  CHECK(at(hyper, Q(-2)).empty());
  for (std::size_t i = 1; i < hyper.size(); ++i) CHECK(hyper[i - 1].beta <= hyper[i].beta);

  const auto w1 = sample_wall(wall_w1(), Q(1, 3), Q(-4), Q(-1), 61);
  const auto w2 = sample_wall(wall_w2(), Q(1, 3), Q(-4), Q(-1), 61);
  for (const auto& samples : {w1, w2}) {
    const auto top = at(samples, Q(-5, 2));
    CHECK(std::count(top.begin(), top.end(), "1.5") == 1);
  }

  // Just left of beta0 W1 sits above W2.
  for (const Rational& beta : {Q(-13, 5), Q(-51, 20)}) {
    const auto beta_rows = [&](const std::vector<WallSample>& r) {
      std::vector<double> out;
      for (const auto& row : r)
        if (row.beta == beta) out.push_back(row.alpha);
      return out;
    };
    const auto a1 = beta_rows(w1);
    const auto a2 = beta_rows(w2);
    REQUIRE_FALSE(a1.empty());
    REQUIRE_FALSE(a2.empty());
    const double near1 = *std::min_element(a1.begin(), a1.end(), [](double x, double y) {
      return std::abs(x - 1.5) < std::abs(y - 1.5);
    });
    const double near2 = *std::min_element(a2.begin(), a2.end(), [](double x, double y) {
      return std::abs(x - 1.5) < std::abs(y - 1.5);
    });
    CHECK(near1 > near2);
  }

  CHECK_THROWS_AS(sample_wall(tilt, Q(1, 3), Q(-4), Q(-1), 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_wall(tilt, Q(1, 3), Q(-1), Q(-4), 5), std::invalid_argument);
  CHECK_THROWS_AS(sample_wall(phi(plane(), plane()), Q(1, 3), Q(-4), Q(-1), 5), std::invalid_argument);
  CHECK(sample_wall(WallLocus::empty(), Q(1, 3), Q(-4), Q(-1), 5).empty());
}

TEST_CASE("decimal formatting") {
  CHECK(decimal12(Q(-5, 2)) == "-2.5");
  CHECK(decimal12(Q(1, 3)) == "0.333333333333");
  CHECK(decimal12(Q(0)) == "0");
  CHECK(decimal12(Q(-4)) == "-4");
}
