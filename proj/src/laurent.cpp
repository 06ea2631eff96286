#include "vknot/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace vknot {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, Exponent exp) {
  LaurentPoly p;
  p.add_term(coeff, exp);
  return p;
}

LaurentPoly LaurentPoly::shifted_unit(Exponent exp) {
  LaurentPoly p;
  p.add_term(1L, exp);
  p.add_term(-1L, 0);
  return p;
}

BigInt LaurentPoly::coeff(Exponent exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

void LaurentPoly::add_term(const BigInt& coeff, Exponent exp) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::add_term(long coeff, Exponent exp) {
  if (coeff != 0) add_term(BigInt(coeff), exp);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(BigInt(-c), e);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [ep, cp] : p.terms_)
    for (const auto& [eq, cq] : q.terms_) r.add_term(BigInt(cp * cq), ep + eq);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 't';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly run() {
    LaurentPoly result;
    skip_space();
    if (at_end()) throw PolyParseError("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(sign, result);
      skip_space();
    }
    return result;
  }

 private:
  void parse_term(int sign, LaurentPoly& out) {
    BigInt coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = BigInt(read_digits());
      have_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 't') fail("expected 't' after '*'");
      }
    }
    Exponent exp = 0;
    if (!at_end() && peek() == 't') {
      ++pos_;
      exp = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        int esign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
          esign = peek() == '-' ? -1 : 1;
          ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        exp = esign * std::stoll(read_digits());
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    out.add_term(BigInt(sign * coeff), exp);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw PolyParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).run(); }

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly poly_invert_var(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(c, -e);
  return r;
}

BigInt poly_eval_one(const LaurentPoly& p) {
  BigInt s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

BigInt poly_deriv_one(const LaurentPoly& p) {
  BigInt s = 0;
  for (const auto& [e, c] : p.terms()) s += BigInt(c * BigInt(static_cast<long>(e)));
  return s;
}

bool is_reciprocal(const LaurentPoly& p) { return p == poly_invert_var(p); }

LaurentPoly divide_by_t_minus_one(const LaurentPoly& p) {
  if (poly_eval_one(p) != 0) throw std::domain_error("polynomial does not vanish at t=1");
  // Synthetic division from the top: the running remainder at exponent e
  // becomes the quotient coefficient at e-1.
  LaurentPoly q;
  if (p.is_zero()) return q;
  BigInt carry = 0;
  const Exponent lo = p.min_exponent();
  for (Exponent e = p.max_exponent(); e > lo; --e) {
    carry += p.coeff(e);
    q.add_term(carry, e - 1);
  }
  return q;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace vknot
