#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vknot {

using BigInt = mpz_class;
using Exponent = std::int64_t;

class PolyParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer Laurent polynomial in one variable t.
///
/// Terms are kept in canonical form: no zero coefficient is ever stored, so
/// two polynomials are equal exactly when their term maps are equal.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(BigInt coeff, Exponent exp);
  /// t^e - 1, the building block of every writhe-type sum.
  static LaurentPoly shifted_unit(Exponent exp);
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(Exponent exp) const;
  Exponent max_exponent() const;
  Exponent min_exponent() const;

  void add_term(const BigInt& coeff, Exponent exp);
  void add_term(long coeff, Exponent exp);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const BigInt& scalar);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(LaurentPoly p, const BigInt& s) { return p *= s; }
  friend LaurentPoly operator*(const BigInt& s, LaurentPoly p) { return p *= s; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) { return p.terms_ == q.terms_; }
  friend bool operator!=(const LaurentPoly& p, const LaurentPoly& q) { return !(p == q); }

  /// Canonical text: decreasing exponents, e.g. "-t^2+2-t^-2"; zero prints "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);
/// p(t^-1).
LaurentPoly poly_invert_var(const LaurentPoly& p);
/// p(1).
BigInt poly_eval_one(const LaurentPoly& p);
/// p'(1) = sum of exponent * coefficient.
BigInt poly_deriv_one(const LaurentPoly& p);
bool is_reciprocal(const LaurentPoly& p);

/// Exact quotient p / (t - 1). Throws std::domain_error when p(1) != 0.
LaurentPoly divide_by_t_minus_one(const LaurentPoly& p);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace vknot
