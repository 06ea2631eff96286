#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vknot/error.hpp"
#include "vknot/invariants.hpp"
#include "vknot/tangle.hpp"

using namespace vknot;
using vknot::testing::random_diagram;

namespace {

LaurentPoly inv(const LaurentPoly& p) { return poly_invert_var(p); }
LaurentPoly k(int c) { return LaurentPoly(c); }

}  // namespace

TEST(Tangle, ParseAndPrint) {
  const auto e = parse_tangle("A: O1+ U2-\nB: U1+ O2-\n");
  EXPECT_EQ(e.split(), 2u);
  EXPECT_EQ(e.to_string(), "A: O1+ U2-\nB: U1+ O2-");
  EXPECT_EQ(classify_crossing(e, 1), TangleCrossingType::AB);
  EXPECT_EQ(classify_crossing(e, 2), TangleCrossingType::BA);
  EXPECT_EQ(right_close(e).to_string(), "O1+ U2- U1+ O2-");
  EXPECT_EQ(left_close(e).to_string(), "U1+ O2- O1+ U2-");
  EXPECT_THROW(parse_tangle("A: O1+ U1+"), Error);
  EXPECT_THROW(parse_tangle("A: O1+\nB: O1+"), Error);
}

TEST(Tangle, Classification) {
  const auto e = parse_tangle("A: O1+ U1+ U2- O2-\nB: O3+ U3+ U4- O4-");
  EXPECT_EQ(classify_crossing(e, 1), TangleCrossingType::AA0);
  EXPECT_EQ(classify_crossing(e, 2), TangleCrossingType::AA1);
  EXPECT_EQ(classify_crossing(e, 3), TangleCrossingType::BB0);
  EXPECT_EQ(classify_crossing(e, 4), TangleCrossingType::BB1);
  EXPECT_THROW(classify_crossing(e, 5), Error);
  EXPECT_FALSE(is_simply_linked(e));
}

TEST(Tangle, EmptyTangle) {
  const TangleDiagram e;
  EXPECT_TRUE(right_close(e).empty());
  const auto d = parse_gauss_code("O1+ O2+ U1+ U2+");
  EXPECT_EQ(tangle_sum(e, d), d);
  const auto ti = tangle_invariants(e);
  EXPECT_EQ(ti.lambda[0], 0);
  EXPECT_TRUE(ti.v[1].is_zero());
  EXPECT_TRUE(simply_linked_from(LongDiagram()).joined().empty());
}

TEST(Tangle, CrossingCapRaisesSizeLimit) {
  LongDiagram d;
  for (int i = 0; i < 4; ++i) d = concatenate(d, parse_gauss_code("O1+ U2+ U1+ O2+"));
  EXPECT_EQ(simply_linked_from(d).crossing_count(), 88u);
  EXPECT_EQ(simply_linked_from(d, 88).crossing_count(), 88u);
  try {
    simply_linked_from(d, 40);
    FAIL() << "no SizeLimit";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
  EXPECT_THROW(swap_FH(d, 40), Error);
}

TEST(Tangle, WritheSplitsOverTypes) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 200; ++iter) {
    const auto e = random_tangle(rng, 1 + iter % 8);
    const auto ti = tangle_invariants(e);
    const auto w = intersection_polys(right_close(e)).W;
    for (int a = 0; a < 2; ++a) EXPECT_EQ(w[a], ti.u[a] + ti.v[a] - k(ti.lambda[a])) << e.to_string();
  }
}

TEST(Tangle, SumFormulas) {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 200; ++iter) {
    const auto e = random_tangle(rng, 1 + iter % 6);
    const auto d = random_diagram(rng, 1 + (iter / 6) % 6);
    const auto ti = tangle_invariants(e);
    const auto r = intersection_polys(right_close(e));
    const auto kk = intersection_polys(d);
    const auto s = intersection_polys(tangle_sum(e, d));
    const std::string what = e.to_string() + " + " + d.to_string();
    for (int a = 0; a < 2; ++a) {
      ASSERT_EQ(s.W[a], r.W[a] + kk.W[a]) << what;
      for (int b = 0; b < 2; ++b) {
        const BigInt la(ti.lambda[a]), lb(ti.lambda[b]);
        ASSERT_EQ(s.F[a][b], r.F[a][b] + kk.F[a][b] + lb * kk.W[a] + la * inv(kk.W[b])) << what;
        ASSERT_EQ(s.G[a][b], r.G[a][b] + kk.G[a][b] - lb * kk.W[a] + ti.v[a] * kk.W[b]) << what;
        ASSERT_EQ(s.H[a][b], r.H[a][b] + kk.H[a][b] + (ti.u[b] - k(ti.lambda[b])) * inv(kk.W[a]) +
                                 (inv(ti.u[a]) - k(ti.lambda[a])) * kk.W[b])
            << what;
      }
    }
  }
}

TEST(Tangle, SimplyLinkedConstruction) {
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 150; ++iter) {
    const auto d = random_diagram(rng, 1 + iter % 7);
    const auto t = simply_linked_from(d);
    ASSERT_TRUE(is_simply_linked(t)) << d.to_string() << "\n" << t.to_string();
    const auto ti = tangle_invariants(t);
    EXPECT_EQ(ti.lambda[0], 0);
    EXPECT_EQ(ti.lambda[1], 0);
    ASSERT_TRUE(same_polynomials(intersection_polys(right_close(t)), intersection_polys(d)))
        << d.to_string() << "\n" << t.to_string();
    EXPECT_EQ(closed_invariants(close(left_close(t))), closed_invariants(close(d)));
  }
}

TEST(Tangle, LeftClosureSwapsFAndH) {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 120; ++iter) {
    const auto d = random_diagram(rng, 1 + iter % 7);
    const auto t = simply_linked_from(d);
    const auto l = intersection_polys(left_close(t));
    const auto r = intersection_polys(right_close(t));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        ASSERT_EQ(l.F[a][b], r.H[1 - a][1 - b]) << d.to_string();
        ASSERT_EQ(l.H[a][b], r.F[1 - a][1 - b]) << d.to_string();
      }
  }
}

TEST(Tangle, SwapFHOnKnots) {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 120; ++iter) {
    const auto d = random_diagram(rng, 1 + iter % 7);
    const auto kp = intersection_polys(swap_FH(d));
    const auto kd = intersection_polys(d);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        ASSERT_EQ(kp.F[a][b], kd.H[1 - a][1 - b]) << d.to_string();
        ASSERT_EQ(kp.H[a][b], kd.F[1 - a][1 - b]) << d.to_string();
      }
  }
}

TEST(Tangle, PlanarKnotGivesMixedOnlyTangle) {
  const auto t = simply_linked_from(parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+"));
  EXPECT_TRUE(is_simply_linked(t));
  const auto k = intersection_polys(swap_FH(parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")));
  EXPECT_TRUE(same_polynomials(k, intersection_polys(LongDiagram())));
}
