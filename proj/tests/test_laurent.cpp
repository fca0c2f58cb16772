#include "twobridge/laurent.hpp"
#include "twobridge/random.hpp"

#include <gtest/gtest.h>

using namespace twobridge;

namespace {

LaurentPoly random_poly(PresentationSampler &g) {
  LaurentPoly p;
  long k = g.uniform(0, 4);
  for (long i = 0; i < k; ++i) p.add_term(g.uniform(-4, 4), Int(g.uniform(-5, 5)));
  return p;
}

LaurentPoly P(const char *s) { return LaurentPoly::parse(s); }

} // namespace

TEST(Laurent, RingAxiomsOnRandomPolys) {
  PresentationSampler g(11);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_poly(g), b = random_poly(g), c = random_poly(g);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentPoly());
    EXPECT_EQ(a * LaurentPoly(1), a);
    EXPECT_EQ((a * b).at_one(), a.at_one() * b.at_one());
    EXPECT_EQ((a * b).inverted(), a.inverted() * b.inverted());
  }
}

TEST(Laurent, NoZeroCoefficientsStored) {
  LaurentPoly a = P("t - 1");
  LaurentPoly b = a - P("t");
  EXPECT_EQ(b, LaurentPoly(-1));
  EXPECT_EQ(b.terms().size(), 1u);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Laurent, PrintFormat) {
  EXPECT_EQ(P("t + t^-1 - 2").str(), "t^-1 - 2 + t");
  EXPECT_EQ(LaurentPoly::monomial(Int(3), 2).str(), "3*t^2");
  EXPECT_EQ(LaurentPoly().str(), "0");
  EXPECT_EQ(LaurentPoly::monomial(Int(-1), -3).str(), "-t^-3");
}

TEST(Laurent, ParseRoundTrip) {
  PresentationSampler g(5);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_poly(g);
    EXPECT_EQ(LaurentPoly::parse(a.str()), a) << a.str();
  }
}

TEST(Laurent, ParseRejectsGarbage) {
  EXPECT_THROW(LaurentPoly::parse("t^"), domain_error);
  EXPECT_THROW(LaurentPoly::parse("3x"), domain_error);
  EXPECT_THROW(LaurentPoly::parse(""), domain_error);
}

TEST(Laurent, PowAndShift) {
  LaurentPoly x = P("t - 1");
  EXPECT_EQ(x.pow(3), P("t^3 - 3*t^2 + 3*t - 1"));
  EXPECT_EQ(x.pow(0), LaurentPoly(1));
  EXPECT_EQ(x.shifted(-1), P("1 - t^-1"));
}

TEST(Laurent, Evaluation) {
  LaurentPoly f = P("t^-1 - 2 + t");
  EXPECT_EQ(f.at_one(), 0);
  EXPECT_EQ(f.eval(Rational(2)), Rational(1, 2));
  EXPECT_THROW(f.eval(Rational(0)), domain_error);
}

TEST(Laurent, SymmetryAndAdmissibility) {
  EXPECT_TRUE(is_symmetric(P("t^-2 + 5 + t^2")));
  EXPECT_FALSE(is_symmetric(P("t - 1")));
  EXPECT_TRUE(lp_is_eta_admissible(P("t^-3 - 2 + t^3")));
  EXPECT_FALSE(lp_is_eta_admissible(P("t^-1 + t")));
  EXPECT_TRUE(lp_is_eta_admissible(LaurentPoly()));
}

TEST(Laurent, BigCoefficientsStayExact) {
  LaurentPoly a = LaurentPoly::monomial(Int(1) << 100, 1);
  LaurentPoly sq = a * a;
  EXPECT_EQ(sq.coeff(2), Int(1) << 200);
}

TEST(ZPoly, NonNegativeExponentsOnly) {
  EXPECT_THROW(ZPoly(P("t^-1")), domain_error);
  ZPoly z = ZPoly::parse("1 + z^2");
  EXPECT_TRUE(z.only_even());
  EXPECT_FALSE(z.only_odd());
  EXPECT_EQ(z.str(), "1 + z^2");
  EXPECT_TRUE(ZPoly::parse("-z^3 + 2*z").only_odd());
}

TEST(ZPoly, SubstitutionToT) {
  EXPECT_EQ(z_to_t(ZPoly::parse("z^2")), P("2 - t - t^-1"));
  EXPECT_EQ(z_to_t(ZPoly::parse("1 + z^2")), P("3 - t - t^-1"));
  EXPECT_THROW(z_to_t(ZPoly::parse("z")), domain_error);
}

TEST(RationalFn, CancelsCommonFactors) {
  RationalFn r = rf_make(P("t^2 - 1"), P("t - 1"));
  EXPECT_EQ(r.num(), P("1 + t"));
  EXPECT_EQ(r.den(), LaurentPoly(1));
  EXPECT_EQ(r, rf_make(P("t + 1"), LaurentPoly(1)));
}

TEST(RationalFn, CanonicalFormIgnoresScalingAndShift) {
  RationalFn a = rf_make(P("t^-1 - 2 + t"), P("t^-1 - 3 + t"));
  RationalFn b = rf_make(P("-2*t^2 + 4*t - 2") * LaurentPoly::var(3), P("-2*t^2 + 6*t - 2") * LaurentPoly::var(3));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.den().coeff(a.den().max_exp()) > 0, true);
  EXPECT_EQ(a.at_one(), Rational(0));
}

TEST(RationalFn, ZeroAndErrors) {
  RationalFn z = rf_make(LaurentPoly(), P("t + 3"));
  EXPECT_EQ(z.den(), LaurentPoly(1));
  EXPECT_THROW(rf_make(P("t"), LaurentPoly()), domain_error);
  EXPECT_THROW(rf_make(P("t"), P("t - 1")).at_one(), domain_error);
}

TEST(RationalFn, StringForm) {
  EXPECT_EQ(rf_make(P("t^-1 - 2 + t"), P("t^-1 - 3 + t")).str(), "(t^-1 - 2 + t)/(t^-1 - 3 + t)");
  EXPECT_EQ(rf_make(P("t^-1 - 2 + t"), P("-t^-1 + 3 - t")).str(), "(-t^-1 + 2 - t)/(t^-1 - 3 + t)");
  EXPECT_EQ(rf_make(P("2*t"), P("2")).str(), "t");
}

TEST(Laurent, SmallIdentities) {
  EXPECT_TRUE((P("t - 1") + P("1 - t")).is_zero());
  EXPECT_EQ(P("t + t^-1") * P("t"), P("t^2 + 1"));
  EXPECT_EQ(P("t + t^-1 - 2").at_one(), 0);
  EXPECT_EQ(z_to_t(ZPoly::parse("1")), LaurentPoly(1));
  EXPECT_EQ(z_to_t(ZPoly::parse("z^4")), P("2 - t - t^-1").pow(2));
}

TEST(RationalFn, AlreadyReducedPairKeepsItsFactors) {
  RationalFn r = rf_make(P("2 - t - t^-1"), P("3 - t - t^-1"));
  EXPECT_EQ(r.num(), P("t^-1 - 2 + t"));
  EXPECT_EQ(r.den(), P("t^-1 - 3 + t"));
  EXPECT_EQ(rf_make(P("t - 1"), P("t - 1")), rf_make(LaurentPoly(1), LaurentPoly(1)));
}
