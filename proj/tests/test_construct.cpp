#include <gtest/gtest.h>

#include <random>

#include "vknot/construct.hpp"
#include "vknot/error.hpp"

using namespace vknot;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }
LaurentPoly tn(int n) { return LaurentPoly::shifted_unit(n); }
LaurentPoly N(int n) { return LaurentPoly(n); }

void expect_bounds(const LongDiagram& d, GenusBounds want) {
  EXPECT_EQ(genus_bounds(d), want) << d.to_string();
}

}  // namespace

TEST(Families, JSpiral) {
  EXPECT_EQ(family(Family::J, 1).to_string(), "O1+ U2+ U1+ O2+");
  EXPECT_EQ(family(Family::J, 2).to_string(), "O1+ U2- U3+ O2- U4+ U1+ O4+ O3+");
  for (int n = 1; n <= 8; ++n) {
    const auto d = family(Family::J, n);
    EXPECT_EQ(d.crossing_count(), static_cast<std::size_t>(2 * n));
    EXPECT_EQ(crossings_of_type(d, 0), std::vector<CrossingId>{1});
    EXPECT_EQ(d.sign(1), 1);
    EXPECT_EQ(homology_data(d).v[0], n);
    const auto k = intersection_polys(d);
    const auto h = -tn(n) * poly_invert_var(-tn(n)) * BigInt(-1);
    EXPECT_EQ(k.W[0], tn(n));
    EXPECT_EQ(k.W[1], tn(n));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        EXPECT_TRUE(k.F[a][b].is_zero());
        EXPECT_TRUE(k.G[a][b].is_zero());
        EXPECT_EQ(k.H[a][b], -LaurentPoly::monomial(1, n) + N(2) - LaurentPoly::monomial(1, -n));
      }
    (void)h;
    EXPECT_EQ(two_boundary_genus(d), 0);
    EXPECT_EQ(genus(build_carter(d)), 1);
    expect_bounds(d, {1, 1, 0, 0});
  }
}

TEST(Families, KPowers) {
  for (int n = 1; n <= 8; ++n) {
    const auto d = family(Family::K, n);
    EXPECT_EQ(intersection_polys(d).W[0], BigInt(n) * tn(1));
    EXPECT_EQ(two_boundary_genus(d), 0);
    expect_bounds(d, {1, 1, 0, 0});
  }
  EXPECT_EQ(classify_filtration(family(Family::K, 1)).label, "K2(0)\\K1(0)");
}

TEST(Families, KPrime) {
  for (int n = 1; n <= 8; ++n) {
    const auto d = family(Family::Kp, n);
    EXPECT_EQ(intersection_polys(d).F[0][0], BigInt(n) * P("t-2+t^-1"));
    expect_bounds(d, {1, 1, 1, 1});
  }
  EXPECT_EQ(classify_filtration(family(Family::Kp, 1)).label, "K1(1)\\K2(0)");
}

TEST(Families, KDoublePrime) {
  for (int n = 1; n <= 8; ++n) {
    const auto d = family(Family::Kpp, n);
    const auto k = intersection_polys(d);
    EXPECT_EQ(k.W[1], BigInt(n) * tn(2));
    EXPECT_EQ(k.W[0] - k.W[1], P("-t^2+2t-1"));
    EXPECT_EQ(two_boundary_genus(d), 1);
    EXPECT_EQ(genus(build_carter(d)), 2);
    expect_bounds(d, {2, 2, 1, 1});
  }
  EXPECT_EQ(classify_filtration(family(Family::Kpp, 1)).label, "K2(1)\\K1(1)");
}

TEST(Families, BadIndex) {
  EXPECT_THROW(family(Family::J, 0), Error);
  EXPECT_THROW(tangle_T(5), Error);
  EXPECT_THROW(parse_family("Q"), Error);
}

TEST(Families, EmptyAndPlanarClassify) {
  EXPECT_EQ(classify_filtration(LongDiagram()).label, "K1(0)");
  expect_bounds(parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+"), {0, 0, 0, 0});
}

TEST(Tangles, BasicValues) {
  const auto t1 = tangle_invariants(tangle_T(1));
  EXPECT_EQ(t1.lambda[0], 1);
  EXPECT_TRUE(intersection_polys(right_close(tangle_T(1))).F[0][0].is_zero());
  const auto t2 = tangle_invariants(tangle_T(2));
  EXPECT_EQ(t2.lambda[0], -1);
  EXPECT_EQ(t2.v[0], -LaurentPoly::monomial(1, -1));
  EXPECT_TRUE(intersection_polys(right_close(tangle_T(2))).G[0][0].is_zero());
  const auto t3 = tangle_invariants(tangle_T(3));
  EXPECT_EQ(t3.lambda[0], 0);
  EXPECT_EQ(t3.lambda[1], 1);
  EXPECT_TRUE(intersection_polys(right_close(tangle_T(3))).F[0][1].is_zero());
  const auto t4 = tangle_invariants(tangle_T(4));
  EXPECT_EQ(t4.lambda[1], -1);
  EXPECT_TRUE(t4.v[0].is_zero());
  EXPECT_TRUE(intersection_polys(right_close(tangle_T(4))).G[0][1].is_zero());
}

TEST(Realize, WritheExamples) {
  EXPECT_TRUE(realize_writhe(LaurentPoly()).empty());
  EXPECT_THROW(realize_writhe(P("t-2")), Error);
  const auto d = realize_writhe(P("t^2-t"));
  const auto k = intersection_polys(d);
  EXPECT_EQ(k.W[0], P("t^2-t"));
  EXPECT_EQ(k.W[1], P("t^2-t"));
  EXPECT_EQ(two_boundary_genus(d), 0);
}

TEST(Realize, TargetExamples) {
  const auto d = realize(parse_target("F00"), P("t^2-2+t^-2"));
  EXPECT_EQ(d, tangle_sum(tangle_T(1), family(Family::J, 2)));
  EXPECT_EQ(intersection_polys(d).F[0][0], P("t^2-2+t^-2"));
  const auto g = realize(parse_target("G00"), P("t-2+t^-1"));
  EXPECT_EQ(g, tangle_sum(tangle_T(2), family(Family::J, 1)));
  EXPECT_EQ(intersection_polys(g).G[0][0], P("t-2+t^-1"));
  try {
    realize(parse_target("F00"), P("t-1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConditionViolated);
  }
  EXPECT_THROW(realize(parse_target("G11"), P("t^2-t")), Error);
  EXPECT_THROW(parse_target("X00"), Error);
}

TEST(Realize, RoundTripsAllTargets) {
  std::mt19937_64 rng(61);
  for (const char* name : {"F00", "F01", "F10", "F11", "G00", "G01", "G10", "G11", "H00", "H01", "H10", "H11"}) {
    const Target t = parse_target(name);
    for (int iter = 0; iter < 15; ++iter) {
      LaurentPoly f;
      for (int k = 0; k < 3; ++k) {
        const int e = static_cast<int>(rng() % 7) - 3;
        const int c = static_cast<int>(rng() % 5) - 2;
        if (e == 0 || c == 0) continue;
        LaurentPoly term;
        if (t.family != PolyFamily::G && t.a == t.b)
          term = LaurentPoly::shifted_unit(e) + LaurentPoly::shifted_unit(-e);
        else if (t.family == PolyFamily::G && t.a == t.b)
          term = LaurentPoly::shifted_unit(e) * LaurentPoly::shifted_unit(1);
        else
          term = LaurentPoly::shifted_unit(e);
        f += term * BigInt(c);
      }
      const auto d = realize(t, f);
      EXPECT_EQ(intersection_polys(d).get(t.family, t.a, t.b), f) << name << " " << f;
      EXPECT_LE(genus(build_carter(d)), 1) << name << " " << f << " " << d.to_string();
    }
  }
}
