#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <tuple>

#include "test_support.hpp"
#include "vknot/error.hpp"
#include "vknot/invariants.hpp"

using namespace vknot;
using vknot::testing::random_diagram;

namespace {

ErrorKind kind_of(const char* code) {
  try {
    parse_gauss_code(code);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << code;
  return ErrorKind::BadParameter;
}

}  // namespace

TEST(Diagram, ParseExamples) {
  const auto kink = parse_gauss_code("O1+ U1+");
  EXPECT_EQ(kink.crossing_count(), 1u);
  EXPECT_EQ(crossing_type(kink, 1), 0);
  EXPECT_EQ(crossing_type(parse_gauss_code("U1+ O1+"), 1), 1);
  const auto d = parse_gauss_code("O7+ U3- O3- U7+");
  EXPECT_EQ(d.to_string(), "O1+ U2- O2- U1+");
  EXPECT_TRUE(parse_gauss_code("  ").empty());
}

TEST(Diagram, ParseErrors) {
  EXPECT_EQ(kind_of("O1+ U2- O2-"), ErrorKind::LabelCountNotTwo);
  EXPECT_EQ(kind_of("O1+ O1+"), ErrorKind::RoleDuplicated);
  EXPECT_EQ(kind_of("O1+ U1-"), ErrorKind::SignMismatch);
  EXPECT_EQ(kind_of("X1+ U1+"), ErrorKind::MalformedToken);
  EXPECT_EQ(kind_of("O1 U1"), ErrorKind::MalformedToken);
  EXPECT_EQ(kind_of("Oa+ Ua+"), ErrorKind::MalformedToken);
  EXPECT_EQ(kind_of("O0+ U0+"), ErrorKind::MalformedToken);
  EXPECT_THROW(crossing_type(parse_gauss_code("O1+ U1+"), 2), Error);
}

TEST(Diagram, Writhes) {
  const auto kink = parse_gauss_code("O1+ U1+");
  EXPECT_EQ(writhe_a(kink, 0), 1);
  EXPECT_EQ(writhe_a(kink, 1), 0);
  EXPECT_EQ(writhe_a(LongDiagram(), 0), 0);
  const auto u = untwist(kink);
  EXPECT_EQ(u.crossing_count(), 2u);
  EXPECT_EQ(writhe_a(u, 0), 0);
  EXPECT_EQ(writhe_a(u, 1), 0);
  const auto flat = parse_gauss_code("O1+ U1+ O2- U2-");
  EXPECT_EQ(untwist(flat), flat);
}

TEST(Diagram, SymmetryLaws) {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 200; ++iter) {
    const auto d = random_diagram(rng, 1 + iter % 9);
    EXPECT_EQ(canonical(sym_flip(sym_flip(d))), d);
    EXPECT_EQ(canonical(sym_reverse(sym_reverse(d))), d);
    EXPECT_EQ(canonical(sym_reflect(sym_reflect(d))), d);
    EXPECT_EQ(canonical(sym_flip(sym_reverse(d))), canonical(sym_reverse(sym_flip(d))));
    EXPECT_EQ(canonical(sym_flip(sym_reflect(d))), canonical(sym_reflect(sym_flip(d))));
    EXPECT_EQ(canonical(sym_reverse(sym_reflect(d))), canonical(sym_reflect(sym_reverse(d))));
    for (int a = 0; a < 2; ++a) {
      EXPECT_EQ(writhe_a(sym_flip(d), a), -writhe_a(d, 1 - a));
      EXPECT_EQ(writhe_a(sym_reverse(d), a), writhe_a(d, 1 - a));
    }
    EXPECT_EQ(crossings_of_type(d, 0).size() + crossings_of_type(d, 1).size(), d.crossing_count());
  }
}

TEST(Diagram, FlipKeepingSignsIsSelectable) {
  const auto kink = parse_gauss_code("O1+ U1+");
  EXPECT_EQ(sym_flip(kink, FlipConvention::KeepSigns).to_string(), "U1+ O1+");
  EXPECT_EQ(sym_flip(kink).to_string(), "U1- O1-");
}

TEST(Diagram, ConcatenateAndCut) {
  const auto d = parse_gauss_code("O1+ O2+ U1+ U2+");
  EXPECT_EQ(concatenate(d, LongDiagram()), d);
  EXPECT_EQ(concatenate(LongDiagram(), d), d);
  EXPECT_EQ(concatenate(d, parse_gauss_code("U1- O1-")).to_string(), "O1+ O2+ U1+ U2+ U3- O3-");
  const auto c = close(d);
  EXPECT_EQ(c.arc_count(), 4u);
  EXPECT_EQ(cut(c, 0), d);
  EXPECT_EQ(canonical(cut(c, 1)).to_string(), "O1+ U2+ U1+ O2+");
  EXPECT_THROW(cut(c, 4), Error);
  EXPECT_EQ(close(LongDiagram()).arc_count(), 1u);
  EXPECT_TRUE(cut(close(LongDiagram()), 0).empty());
}

TEST(Diagram, MoveInverses) {
  std::mt19937_64 rng(73);
  for (int iter = 0; iter < 100; ++iter) {
    const auto d = random_diagram(rng, 1 + iter % 5);
    for (const auto& s : enumerate_rmoves(d)) {
      if (s.kind == MoveKind::R1Insert) {
        const auto e = apply_rmove(d, s);
        bool back = false;
        for (const auto& t : enumerate_rmoves(e))
          if (t.kind == MoveKind::R1Delete && apply_rmove(e, t) == d) back = true;
        EXPECT_TRUE(back) << describe(s);
      }
      if (s.kind == MoveKind::R2Insert && rng() % 8 == 0) {
        const auto e = apply_rmove(d, s);
        bool back = false;
        for (const auto& t : enumerate_rmoves(e))
          if (t.kind == MoveKind::R2Delete && apply_rmove(e, t) == d) back = true;
        EXPECT_TRUE(back) << describe(s) << " on " << d.to_string();
      }
      if (s.kind == MoveKind::R3) {
        const auto e = apply_rmove(d, s);
        EXPECT_TRUE(is_valid_site(e, s)) << describe(s);
        EXPECT_EQ(apply_rmove(e, s), d);
      }
    }
  }
}

TEST(Diagram, R1DeleteOnKink) {
  const auto kink = parse_gauss_code("O1+ U1+");
  const auto sites = enumerate_rmoves(kink);
  MoveSite del{MoveKind::R1Delete, 0, 0, 1, Role::Over, true, {1, 0, 0}};
  EXPECT_NE(std::find(sites.begin(), sites.end(), del), sites.end());
  EXPECT_TRUE(apply_rmove(kink, del).empty());
  EXPECT_THROW(apply_rmove(parse_gauss_code("O1+ O2+ U1+ U2+"), del), Error);
}

TEST(Diagram, R3SitesAppearInRandomWalks) {
  std::mt19937_64 rng(79);
  int r3 = 0;
  for (int iter = 0; iter < 200; ++iter) {
    auto d = random_diagram(rng, 3 + iter % 4);
    for (int step = 0; step < 6; ++step) {
      const auto sites = enumerate_rmoves(d);
      for (const auto& s : sites) r3 += s.kind == MoveKind::R3;
      d = apply_rmove(d, sites[rng() % sites.size()]);
    }
  }
  EXPECT_GT(r3, 0);
}

// Three oriented lines in the plane: top over middle over bottom. Every
// sampled configuration must pass the sign rule, and every combination the
// rule accepts must occur.
TEST(Diagram, R3RuleMatchesLineGeometry) {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  using Config = std::tuple<int, int, int, bool, bool, bool>;
  std::set<Config> seen;
  struct Line {
    double px, py, dx, dy;
  };
  const auto meet = [](const Line& a, const Line& b) {
    const double det = a.dx * b.dy - a.dy * b.dx;
    const double s = ((b.px - a.px) * b.dy - (b.py - a.py) * b.dx) / det;
    return std::pair{a.px + s * a.dx, a.py + s * a.dy};
  };
  const auto along = [](const Line& l, std::pair<double, double> p) { return (p.first - l.px) * l.dx + (p.second - l.py) * l.dy; };
  // sign = det(over, under) in one fixed plane orientation; the rule is
  // invariant under the global reversal.
  const auto sign = [](const Line& over, const Line& under) { return over.dx * under.dy - over.dy * under.dx > 0 ? 1 : -1; };
  for (int iter = 0; iter < 20000; ++iter) {
    Line l[3];
    for (auto& x : l) {
      const double th = unit(rng) * M_PI;
      x = {unit(rng), unit(rng), std::cos(th), std::sin(th)};
    }
    const auto px = meet(l[0], l[1]), py = meet(l[0], l[2]), pz = meet(l[1], l[2]);
    const Config c{sign(l[0], l[1]), sign(l[0], l[2]), sign(l[1], l[2]), along(l[0], px) < along(l[0], py),
                   along(l[1], px) < along(l[1], pz), along(l[2], py) < along(l[2], pz)};
    const auto [sx, sy, sz, a, b, cc] = c;
    ASSERT_TRUE(r3_signs_compatible(sx, sy, sz, a, b, cc));
    seen.insert(c);
  }
  int accepted = 0;
  for (int mask = 0; mask < 64; ++mask) {
    const int sx = mask & 1 ? 1 : -1, sy = mask & 2 ? 1 : -1, sz = mask & 4 ? 1 : -1;
    const bool a = mask & 8, b = mask & 16, cc = mask & 32;
    if (!r3_signs_compatible(sx, sy, sz, a, b, cc)) continue;
    ++accepted;
    EXPECT_TRUE(seen.count({sx, sy, sz, a, b, cc})) << mask;
  }
  EXPECT_EQ(accepted, 16);
}
