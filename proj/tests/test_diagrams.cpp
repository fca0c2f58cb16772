#include "skein_oracle.hpp"
#include "twobridge/diagrams.hpp"
#include "twobridge/random.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace twobridge;

namespace {

std::vector<Int> V(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

LaurentPoly P(const char *s) { return LaurentPoly::parse(s); }

// up to multiplication by +-t^k
bool same_up_to_unit(LaurentPoly a, LaurentPoly b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  a = a.shifted(-a.min_exp());
  b = b.shifted(-b.min_exp());
  return a == b || a == -b;
}

std::vector<Int> random_entries(PresentationSampler &g, int max_len, long max_abs) {
  std::vector<Int> e;
  int len = static_cast<int>(g.uniform(1, max_len));
  for (int i = 0; i < len; ++i) e.emplace_back(g.nonzero(max_abs));
  return e;
}

long crossing_total(const std::vector<Int> &e) {
  long s = 0;
  for (auto &a : e) s += boost::multiprecision::abs(a).convert_to<long>();
  return s;
}

} // namespace

TEST(Plat, CrossingAndComponentCounts) {
  OrientedPD t = build_plat_diagram(V({2, -2}));
  EXPECT_EQ(t.crossings.size(), 4u);
  EXPECT_EQ(t.component_count(), 1);
  OrientedPD l = build_plat_diagram(V({2, -2, -2}));
  EXPECT_EQ(l.crossings.size(), 6u);
  EXPECT_EQ(l.component_count(), 2);
  OrientedPD u = build_plat_diagram(V({0}));
  EXPECT_EQ(u.crossings.size(), 0u);
  EXPECT_EQ(u.component_count(), 2);
  EXPECT_EQ(linking_number(u), 0);
  EXPECT_TRUE(conway_polynomial(u).is_zero());
  EXPECT_EQ(determinant(u), 0);
}

TEST(Plat, ComponentCountMatchesNumeratorParity) {
  PresentationSampler g(1);
  for (int i = 0; i < 300; ++i) {
    auto e = random_entries(g, 5, 4);
    Fraction f = eval_cf(e);
    if (f.p == 0) continue;
    OrientedPD pd = build_plat_diagram(e);
    EXPECT_EQ(pd.component_count(), f.p % 2 == 0 ? 2 : 1) << cf_str(e);
  }
}

TEST(Seifert, TrefoilAndFigureEight) {
  SeifertData s = seifert_matrix(build_plat_diagram(V({2, -2})));
  EXPECT_EQ(s.V.size(), 2u);
  EXPECT_TRUE(same_up_to_unit(seifert_poly(s.V), P("t^2 - t + 1")));
  SeifertData f = seifert_matrix(build_plat_diagram(V({2, 2})));
  EXPECT_TRUE(same_up_to_unit(seifert_poly(f.V), P("t^2 - 3*t + 1")));
}

TEST(Seifert, RankFormula) {
  PresentationSampler g(2);
  for (int i = 0; i < 100; ++i) {
    auto e = random_entries(g, 4, 4);
    OrientedPD pd = build_plat_diagram(e);
    if (pd.free_loops) continue;
    SeifertData s = seifert_matrix(pd);
    EXPECT_EQ(static_cast<int>(s.V.size()), s.crossings - s.circles + 1);
    EXPECT_EQ(static_cast<int>(s.V.size()) % 2, (s.components + 1) % 2);
  }
}

TEST(Seifert, EmptyDiagram) {
  OrientedPD u = parse_pd("loops 1\n");
  EXPECT_TRUE(seifert_matrix(u).V.empty());
  EXPECT_EQ(conway_polynomial(u), ZPoly(LaurentPoly(1)));
  EXPECT_EQ(alexander_from_seifert(seifert_matrix(u).V), LaurentPoly(1));
}

TEST(Conway, GroundTruth) {
  EXPECT_EQ(conway_polynomial(parse_pd("loops 1\n")).str(), "1");
  EXPECT_EQ(conway_polynomial(build_plat_diagram(V({2, -2}))).str(), "1 + z^2");
  EXPECT_EQ(conway_polynomial(build_plat_diagram(V({2, 2}))).str(), "1 - z^2");
  ZPoly hopf = conway_polynomial(build_plat_diagram(V({2})));
  EXPECT_TRUE(hopf == ZPoly::parse("z") || hopf == ZPoly::parse("-z"));
}

TEST(Conway, SkeinOracleOnSmallDiagrams) {
  for (auto e : {V({2, -2}), V({2, 2}), V({2}), V({-2}), V({3}), V({1, 1, 1}), V({2, -2, -2})}) {
    OrientedPD pd = build_plat_diagram(e);
    EXPECT_EQ(conway_polynomial(pd), skein::conway(pd)) << cf_str(e);
  }
}

TEST(Conway, SkeinOracleOnRandomPlats) {
  PresentationSampler g(3);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 150; ++i) {
    auto e = random_entries(g, 5, 3);
    if (crossing_total(e) > 10) continue;
    for (auto pol : {OrientationPolicy::first_seen, OrientationPolicy::reverse_second, OrientationPolicy::band_antiparallel}) {
      if (pol != OrientationPolicy::first_seen && eval_cf(e).p % 2 != 0) continue; // knots: one orientation
      OrientedPD pd = build_plat_diagram(e, pol);
      if (pd.free_loops && pd.component_count() > 1) continue;
      ZPoly want = skein::conway(pd);
      ZPoly got;
      try {
        got = conway_polynomial(pd);
      } catch (const domain_error &) { // split diagram
        EXPECT_TRUE(want.is_zero()) << cf_str(e);
        continue;
      }
      EXPECT_EQ(got, want) << cf_str(e) << " policy " << static_cast<int>(pol);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Conway, ParityOfExponents) {
  PresentationSampler g(4);
  for (int i = 0; i < 200; ++i) {
    auto e = random_entries(g, 6, 5);
    OrientedPD pd = build_plat_diagram(e);
    if (pd.component_count() > 2 || pd.free_loops) continue;
    ZPoly z;
    try {
      z = conway_polynomial(pd);
    } catch (const domain_error &) {
      continue;
    }
    if (pd.component_count() == 1) {
      EXPECT_TRUE(z.only_even()) << cf_str(e);
      EXPECT_EQ(z.coeff(0), 1);
    } else {
      EXPECT_TRUE(z.only_odd()) << cf_str(e);
      EXPECT_EQ(z.coeff(1), linking_number(pd)) << cf_str(e);
    }
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(build_plat_diagram(V({2, -2}))), 3);
  EXPECT_EQ(determinant(parse_pd("loops 1\n")), 1);
  EXPECT_EQ(determinant(build_lhat_diagram(parse_i1("2;1"))), 8);
  EXPECT_EQ(determinant(build_lhat_diagram(parse_i1("2;-1"))), 8);
}

TEST(Determinant, EqualsNumeratorForAllSmallKnots) {
  for (long p = 3; p <= 45; p += 2)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      EvenCF e = even_cf(Fraction(p, q));
      EXPECT_EQ(determinant(build_plat_diagram(e.entries)), p) << p << "/" << q;
    }
}

TEST(Determinant, AgreesWithAlexanderAtMinusOne) {
  PresentationSampler g(6);
  for (int i = 0; i < 100; ++i) {
    auto e = random_entries(g, 4, 5);
    OrientedPD pd = build_plat_diagram(e);
    if (pd.free_loops) continue;
    LaurentPoly a = alexander_from_seifert(seifert_matrix(pd).V);
    Rational v = a.eval(Rational(-1));
    EXPECT_EQ(determinant(pd), boost::multiprecision::abs(boost::multiprecision::numerator(v))) << cf_str(e);
    EXPECT_EQ(determinant(pd), boost::multiprecision::abs(eval_cf(e).p)) << cf_str(e);
  }
}

TEST(Lhat, LinkingZeroAndDeterminant) {
  PresentationSampler g(12);
  for (int i = 0; i < 200; ++i) {
    I1Presentation p = g.next();
    OrientedPD pd = build_lhat_diagram(p);
    EXPECT_EQ(pd.component_count(), 2);
    EXPECT_EQ(linking_number(pd), 0);
    EXPECT_EQ(determinant(pd), boost::multiprecision::abs(butterfly_fraction(p).p)) << p.str();
    ZPoly z = conway_polynomial(pd);
    EXPECT_TRUE(z.only_odd());
    EXPECT_EQ(z.coeff(1), 0);
  }
}

TEST(Lhat, SkeinOracleOnSmallCases) {
  for (const char *s : {"2;1", "2;-1", "4;1", "2;2", "-2;1", "2,-2;1,1"}) {
    OrientedPD pd = build_lhat_diagram(parse_i1(s));
    if (pd.crossings.size() > 12) continue;
    EXPECT_EQ(conway_polynomial(pd), skein::conway(pd)) << s;
  }
  EXPECT_EQ(conway_polynomial(build_lhat_diagram(parse_i1("2;1"))).str(), "-z^3");
}

TEST(LinkingNumber, Examples) {
  Int h = linking_number(build_plat_diagram(V({2})));
  EXPECT_TRUE(h == 1 || h == -1);
  EXPECT_THROW(linking_number(build_plat_diagram(V({2, -2}))), domain_error);
}

TEST(PDText, RoundTrip) {
  PresentationSampler g(13);
  for (int i = 0; i < 200; ++i) {
    auto e = random_entries(g, 5, 4);
    for (auto pol : {OrientationPolicy::first_seen, OrientationPolicy::reverse_second}) {
      OrientedPD pd = build_plat_diagram(e, pol);
      EXPECT_EQ(parse_pd(to_pd_text(pd)), pd) << cf_str(e);
    }
  }
}

TEST(PDText, Errors) {
  EXPECT_THROW(parse_pd("X 1 2 3\n"), domain_error);
  EXPECT_THROW(parse_pd("X 1 2 2 1\n"), domain_error);
  EXPECT_THROW(parse_pd("X 0 1 2 3\n"), domain_error);
  EXPECT_THROW(parse_pd("Y 1 2 3 4\n"), domain_error);
  EXPECT_THROW(parse_pd("X 1 4 2 5\nX 3 6 4 1\n"), domain_error);
}

TEST(PDText, TrefoilByHand) {
  // standard right-handed trefoil PD
  OrientedPD t = parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n");
  EXPECT_EQ(t.component_count(), 1);
  EXPECT_EQ(conway_polynomial(t), ZPoly::parse("1 + z^2"));
  EXPECT_EQ(skein::conway(t), ZPoly::parse("1 + z^2"));
  EXPECT_EQ(determinant(t), 3);
}

TEST(PDText, ShortComponentsCarrySigns) {
  OrientedPD hopf = build_plat_diagram(V({2}));
  std::string text = to_pd_text(hopf);
  EXPECT_EQ(std::count(text.begin(), text.end(), '-') + std::count(text.begin(), text.end(), '+'), 2);
  EXPECT_EQ(parse_pd(text), hopf);
  EXPECT_THROW(parse_pd("X 1 3 2 4\nX 2 4 1 3\n"), domain_error); // no signs
  EXPECT_EQ(linking_number(parse_pd("X 1 3 2 4 -1\nX 2 4 1 3 -1\n")), -1);
  EXPECT_THROW(parse_pd("X 1 3 2 4 +2\nX 2 4 1 3 -1\n"), domain_error);
}
