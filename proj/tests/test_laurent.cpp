#include <gtest/gtest.h>

#include <random>

#include "vknot/laurent.hpp"

using namespace vknot;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % 5);
  for (int k = 0; k < terms; ++k) p.add_term(static_cast<long>(rng() % 11) - 5, static_cast<Exponent>(rng() % 13) - 6);
  return p;
}

}  // namespace

TEST(Laurent, CanonicalText) {
  EXPECT_EQ(P("-t^2+2-t^-2").to_string(), "-t^2+2-t^-2");
  EXPECT_EQ(P("2*t").to_string(), "2*t");
  EXPECT_EQ(P("t^-1").to_string(), "t^-1");
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_EQ(P(" 3 t^2 - t + t - 3 t^2 ").to_string(), "0");
  EXPECT_EQ(P("-1+t").to_string(), "t-1");
}

TEST(Laurent, ParseErrors) {
  EXPECT_THROW(P("t^"), PolyParseError);
  EXPECT_THROW(P("x"), PolyParseError);
  EXPECT_THROW(P(""), PolyParseError);
  EXPECT_THROW(P("2**t"), PolyParseError);
}

TEST(Laurent, AddExamples) {
  EXPECT_EQ(poly_add(P("t-1"), P("t^-1-1")), P("t-2+t^-1"));
  EXPECT_EQ(poly_add(P("t^3-t"), LaurentPoly()), P("t^3-t"));
  EXPECT_TRUE(poly_add(P("t-1"), P("1-t")).is_zero());
}

TEST(Laurent, MulExamples) {
  EXPECT_EQ(poly_mul(P("t-1"), P("t^-1-1")), P("2-t-t^-1"));
  EXPECT_EQ(poly_mul(P("t^2-3"), LaurentPoly(1)), P("t^2-3"));
}

TEST(Laurent, InvertAndEvaluate) {
  EXPECT_EQ(poly_invert_var(P("t-2+t^-1")), P("t-2+t^-1"));
  EXPECT_EQ(poly_invert_var(P("t^2-1")), P("t^-2-1"));
  EXPECT_TRUE(is_reciprocal(P("-t^2+2-t^-2")));
  EXPECT_FALSE(is_reciprocal(P("-t^2+2*t-1")));
  EXPECT_EQ(poly_eval_one(P("t-2+t^-1")), 0);
  EXPECT_EQ(poly_deriv_one(P("t-2+t^-1")), 0);
  EXPECT_EQ(poly_eval_one(P("t^2-t")), 0);
  EXPECT_EQ(poly_deriv_one(P("t^2-t")), 1);
}

TEST(Laurent, DivisionByTMinusOne) {
  EXPECT_EQ(divide_by_t_minus_one(P("t^3-1")), P("t^2+t+1"));
  EXPECT_EQ(divide_by_t_minus_one(P("1-t^-2")), P("t^-1+t^-2"));
  EXPECT_THROW(divide_by_t_minus_one(P("t")), std::domain_error);
  std::mt19937_64 rng(2);
  for (int iter = 0; iter < 200; ++iter) {
    const auto q = random_poly(rng);
    EXPECT_EQ(divide_by_t_minus_one(q * P("t-1")), q);
  }
}

TEST(Laurent, BigCoefficients) {
  LaurentPoly p = P("t+1");
  for (int k = 0; k < 7; ++k) p *= p;
  EXPECT_EQ(poly_eval_one(p), BigInt("340282366920938463463374607431768211456"));
}

TEST(Laurent, RingAxioms) {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 300; ++iter) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(poly_invert_var(poly_invert_var(a)), a);
    EXPECT_EQ(poly_eval_one(poly_invert_var(a)), poly_eval_one(a));
    EXPECT_EQ(LaurentPoly::parse(a.to_string()), a);
    EXPECT_EQ(is_reciprocal(a), a == poly_invert_var(a));
    for (const auto& [e, coeff] : a.terms()) EXPECT_NE(coeff, 0);
  }
}
