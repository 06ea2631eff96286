#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vknot/invariants.hpp"

using namespace vknot;
using vknot::testing::random_diagram;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

void expect_all_pass(const IdentityReport& r, const std::string& what) {
  for (const auto& c : r.failures()) ADD_FAILURE() << what << ": " << c.name << ": " << c.lhs << " vs " << c.rhs;
}

}  // namespace

TEST(Invariants, EmptyDiagram) {
  const auto b = intersection_polys(LongDiagram());
  EXPECT_TRUE(b.W[0].is_zero());
  EXPECT_TRUE(b.H[1][1].is_zero());
  const auto c = closed_invariants(close(LongDiagram()));
  EXPECT_TRUE(c.W.is_zero());
  EXPECT_TRUE(c.I.is_zero());
}

TEST(Invariants, KinkIsTrivial) {
  const auto b = intersection_polys(parse_gauss_code("O1+ U1+"));
  EXPECT_EQ(b.omega[0], 1);
  EXPECT_EQ(b.omega[1], 0);
  EXPECT_TRUE(b.W[0].is_zero());
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) {
      EXPECT_TRUE(b.F[a][c].is_zero());
      EXPECT_TRUE(b.G[a][c].is_zero());
      EXPECT_TRUE(b.H[a][c].is_zero());
    }
}

TEST(Invariants, WrithePolyMatchesBundle) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    const auto d = random_diagram(rng, 1 + iter % 8);
    const auto b = intersection_polys(d);
    EXPECT_EQ(writhe_poly(d, 0), b.W[0]);
    EXPECT_EQ(writhe_poly(d, 1), b.W[1]);
  }
}

TEST(Invariants, SerialAndParallelBundlesAgree) {
  std::mt19937_64 rng(5);
  for (int n : {10, 40, 80}) {
    const auto d = random_diagram(rng, n);
    const auto h = homology_data(d);
    EXPECT_EQ(intersection_polys(d, h, true), intersection_polys(d, h, false));
    EXPECT_EQ(intersection_polys(d, h), intersection_polys(d, homology_data_reference(d)));
  }
}

TEST(Invariants, PlanarDiagramsVanish) {
  const auto b = intersection_polys(parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+"));
  EXPECT_TRUE(same_polynomials(b, intersection_polys(LongDiagram())));
  EXPECT_TRUE(b.W[0].is_zero());
  EXPECT_TRUE(b.H[0][1].is_zero());
}

TEST(Invariants, IdentitiesOnRandomDiagrams) {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 150; ++iter) {
    const auto d = random_diagram(rng, 1 + iter % 8);
    expect_all_pass(check_identities(d), d.to_string());
  }
}

TEST(Invariants, ProductIdentitiesOnRandomPairs) {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 60; ++iter) {
    const auto d = random_diagram(rng, 1 + iter % 5);
    const auto e = random_diagram(rng, 1 + (iter / 5) % 5);
    expect_all_pass(check_identities(d, e), d.to_string() + " | " + e.to_string());
  }
}

TEST(Invariants, KeepSignsFlipBreaksWritheSymmetry) {
  std::mt19937_64 rng(29);
  int broken = 0;
  for (int iter = 0; iter < 50; ++iter) {
    const auto d = random_diagram(rng, 2 + iter % 6);
    const auto k = intersection_polys(d);
    const auto f = intersection_polys(sym_flip(d, FlipConvention::KeepSigns));
    if (f.W[0] != -k.W[1]) ++broken;
  }
  EXPECT_GT(broken, 0);
}

TEST(Invariants, RMovesPreserveBundle) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 60; ++iter) {
    auto d = random_diagram(rng, 1 + iter % 6);
    const auto ref = intersection_polys(d);
    for (int step = 0; step < 12; ++step) {
      const auto sites = enumerate_rmoves(d);
      ASSERT_FALSE(sites.empty());
      const auto& site = sites[rng() % sites.size()];
      d = apply_rmove(d, site);
      ASSERT_TRUE(same_polynomials(intersection_polys(d), ref)) << describe(site) << " -> " << d.to_string();
    }
  }
}

TEST(Invariants, ClosedFormulasAreCutIndependent) {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 50; ++iter) {
    const auto c = close(random_diagram(rng, 1 + iter % 7));
    const auto base = closed_invariants(c, 0);
    for (std::size_t arc = 1; arc < c.arc_count(); ++arc) EXPECT_EQ(closed_invariants(c, arc), base);
  }
}

TEST(Invariants, UntwistAddsKinksOnly) {
  const auto d = parse_gauss_code("O1+ O2+ U1+ U2+");
  const auto u = untwist(d);
  EXPECT_EQ(writhe_a(u, 0), 0);
  EXPECT_EQ(writhe_a(u, 1), 0);
  EXPECT_TRUE(same_polynomials(intersection_polys(u), intersection_polys(d)));
}
