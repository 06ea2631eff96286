#include "vknot/construct.hpp"

#include <algorithm>

#include "vknot/error.hpp"
#include "vknot/surface.hpp"

namespace vknot {

Family parse_family(std::string_view name) {
  if (name == "K") return Family::K;
  if (name == "Kp") return Family::Kp;
  if (name == "Kpp") return Family::Kpp;
  if (name == "J") return Family::J;
  throw Error(ErrorKind::BadParameter, "unknown family '" + std::string(name) + "' (K, Kp, Kpp, J)");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::K: return "K";
    case Family::Kp: return "Kp";
    case Family::Kpp: return "Kpp";
    case Family::J: break;
  }
  return "J";
}

namespace {

// The strand spirals n times around the annulus: c_1 is the only type-0
// crossing, the a-crossings are negative and the b-crossings positive.
LongDiagram spiral(int n) {
  std::vector<Passage> ps{{1, Role::Over}};
  std::vector<int> signs{1};
  const auto a = [](int k) { return static_cast<CrossingId>(1 + k); };
  const auto b = [n](int k) { return static_cast<CrossingId>(n + k); };
  for (int k = 1; k < n; ++k) signs.push_back(-1);
  for (int k = 1; k <= n; ++k) signs.push_back(1);
  for (int k = 1; k < n; ++k) ps.push_back({a(k), Role::Under});
  for (int k = 1; k <= n; ++k) {
    ps.push_back({b(k), Role::Under});
    if (n - k >= 1) ps.push_back({a(n - k), Role::Over});
  }
  ps.push_back({1, Role::Under});
  for (int k = n; k >= 1; --k) ps.push_back({b(k), Role::Over});
  return canonical(LongDiagram(std::move(ps), std::move(signs)));
}

LongDiagram power(const LongDiagram& d, int n) {
  LongDiagram out;
  for (int k = 0; k < n; ++k) out = concatenate(out, d);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ConditionViolated, what);
}

}  // namespace

LongDiagram family(Family name, int n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "family index must be at least 1, got " + std::to_string(n));
  switch (name) {
    case Family::J: return spiral(n);
    case Family::K: return power(spiral(1), n);
    case Family::Kp: return tangle_sum(tangle_T(1), power(spiral(1), n));
    case Family::Kpp: break;
  }
  return concatenate(parse_gauss_code("O1+ O2+ U3+ U2+ U1+ O3+"), power(spiral(2), n - 1));
}

IdentityReport family_checks(Family name, int n) {
  const InvariantBundle k = intersection_polys(family(name, n));
  const LaurentPoly bn(n);
  const auto t = [](Exponent e) { return LaurentPoly::monomial(1, e); };
  IdentityReport r;
  const auto check = [&](std::string what, const LaurentPoly& lhs, const LaurentPoly& rhs) {
    r.checks.push_back({std::string(family_name(name)) + "_" + std::to_string(n) + ": " + what, lhs, rhs});
  };
  switch (name) {
    case Family::K:
      check("W0 = n(t-1)", k.W[0], bn * (t(1) - 1));
      break;
    case Family::Kp:
      check("F00 = n(t-2+t^-1)", k.F[0][0], bn * (t(1) - 2 + t(-1)));
      break;
    case Family::Kpp:
      check("W1 = n(t^2-1)", k.W[1], bn * (t(2) - 1));
      check("W0 - W1 = -t^2+2t-1", k.W[0] - k.W[1], -t(2) + LaurentPoly(2) * t(1) - 1);
      break;
    case Family::J:
      for (int a = 0; a < 2; ++a) check("W" + std::to_string(a) + " = t^n-1", k.W[a], t(n) - 1);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const std::string s = std::to_string(a) + std::to_string(b);
          check("F" + s + " = 0", k.F[a][b], LaurentPoly());
          check("G" + s + " = 0", k.G[a][b], LaurentPoly());
          check("H" + s + " = -t^n+2-t^-n", k.H[a][b], -t(n) + 2 - t(-n));
        }
      break;
  }
  return r;
}

TangleDiagram tangle_T(int k) {
  switch (k) {
    case 1: return parse_tangle("A: O1+\nB: U1+");
    case 2: return parse_tangle("A: U1+ O2- O1+\nB: U2-");
    case 3: return parse_tangle("A: U1+\nB: O1+");
    case 4: return parse_tangle("A: U1-\nB: O1-");
    default: break;
  }
  throw Error(ErrorKind::BadParameter, "tangle index must be 1..4, got " + std::to_string(k));
}

LongDiagram realize_writhe(const LaurentPoly& f) {
  require(poly_eval_one(f) == 0, "f(1) = 0 fails for " + f.to_string());
  LongDiagram out;
  for (const auto& [e, c] : f.terms()) {
    if (e == 0) continue;
    const int m = static_cast<int>(e > 0 ? e : -e);
    const bool positive = c > 0;
    // W_0 of J, J#, J#*, J* is t^m-1, -(t^m-1), t^-m-1, -(t^-m-1).
    LongDiagram piece = spiral(m);
    if (e > 0 && !positive) piece = sym_flip(piece);
    if (e < 0) piece = positive ? sym_flip(sym_reflect(piece)) : sym_reflect(piece);
    const BigInt copies = positive ? BigInt(c) : BigInt(-c);
    for (BigInt k = 0; k < copies; ++k) out = concatenate(out, piece);
  }
  return out;
}

Target parse_target(std::string_view text) {
  const bool ok = text.size() == 3 && (text[0] == 'F' || text[0] == 'G' || text[0] == 'H') &&
                  (text[1] == '0' || text[1] == '1') && (text[2] == '0' || text[2] == '1');
  if (!ok) throw Error(ErrorKind::BadParameter, "target must look like F00, G01, H11: '" + std::string(text) + "'");
  const PolyFamily x = text[0] == 'F' ? PolyFamily::F : text[0] == 'G' ? PolyFamily::G : PolyFamily::H;
  return {x, text[1] - '0', text[2] - '0'};
}

std::string to_string(const Target& t) {
  return std::string(1, family_letter(t.family)) + std::to_string(t.a) + std::to_string(t.b);
}

namespace {

// g with g(t) + g(1/t) = f, from the top coefficients of reciprocal f.
LaurentPoly reciprocal_half(const LaurentPoly& f) {
  LaurentPoly g;
  for (const auto& [e, c] : f.terms())
    if (e > 0) {
      g.add_term(c, e);
      g.add_term(-c, 0);
    }
  return g;
}

LongDiagram realize_f00(const LaurentPoly& f) { return tangle_sum(tangle_T(1), realize_writhe(reciprocal_half(f))); }

LongDiagram realize_g00(const LaurentPoly& f) {
  // f = (1 - 1/t) g
  const LaurentPoly g = divide_by_t_minus_one(f * LaurentPoly::monomial(1, 1));
  return tangle_sum(tangle_T(2), realize_writhe(g));
}

}  // namespace

LongDiagram realize(const Target& target, const LaurentPoly& f, std::size_t max_crossings) {
  require(poly_eval_one(f) == 0, to_string(target) + ": f(1) = 0 fails for " + f.to_string());
  const bool diagonal = target.a == target.b;
  switch (target.family) {
    case PolyFamily::F:
      if (diagonal) {
        require(is_reciprocal(f), to_string(target) + ": f(t) = f(1/t) fails for " + f.to_string());
        const LongDiagram d = realize_f00(f);
        return target.a == 0 ? d : sym_flip(d);
      } else {
        const LongDiagram d = tangle_sum(tangle_T(3), realize_writhe(f));
        return target.a == 0 ? d : sym_flip(d);
      }
    case PolyFamily::G:
      if (diagonal) {
        require(poly_deriv_one(f) == 0, to_string(target) + ": f'(1) = 0 fails for " + f.to_string());
        const LongDiagram d = realize_g00(f);
        return target.a == 0 ? d : sym_flip(d);
      } else {
        const LongDiagram d = tangle_sum(tangle_T(4), realize_writhe(f));
        return target.a == 0 ? d : sym_flip(d);
      }
    case PolyFamily::H:
      break;
  }
  // H_ab of the swapped knot is F_{1-a,1-b} of the original.
  return swap_FH(realize({PolyFamily::F, 1 - target.a, 1 - target.b}, f), max_crossings);
}

GenusBounds genus_bounds(const LongDiagram& d) {
  const InvariantBundle k = intersection_polys(d);
  GenusBounds g;
  g.sg1_upper = genus(build_carter(d));
  g.sg2_upper = two_boundary_genus(d);

  bool any_nonzero = !k.W[0].is_zero() || !k.W[1].is_zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      any_nonzero = any_nonzero || !k.F[a][b].is_zero() || !k.G[a][b].is_zero() || !k.H[a][b].is_zero();
  if (any_nonzero) g.sg1_lower = 1;
  const bool torus_ok = is_reciprocal(k.W[0] - k.W[1]) &&
                        is_reciprocal(k.F[0][1] + k.G[0][0] - k.G[1][1] - k.H[0][1]) &&
                        is_reciprocal(k.G[0][0] - k.G[0][1] - k.G[1][0] + k.G[1][1]);
  if (!torus_ok) g.sg1_lower = 2;

  bool annulus_ok = k.W[0] == k.W[1];
  const LaurentPoly hh = k.W[0] * poly_invert_var(k.W[0]);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      annulus_ok = annulus_ok && k.F[a][b].is_zero() && k.G[a][b].is_zero() && k.H[a][b] == hh;
  if (!annulus_ok) g.sg2_lower = 1;

  // sg2 <= sg1 <= sg2 + 1
  g.sg1_upper = std::min(g.sg1_upper, g.sg2_upper + 1);
  g.sg2_upper = std::min(g.sg2_upper, g.sg1_upper);
  g.sg2_lower = std::max(g.sg2_lower, g.sg1_lower - 1);
  g.sg1_lower = std::max(g.sg1_lower, g.sg2_lower);
  return g;
}

GenusBounds expected_genus_bounds(Family name) {
  switch (name) {
    case Family::K: return {1, 1, 0, 0};
    case Family::Kp: return {1, 1, 1, 1};
    case Family::Kpp: return {2, 2, 1, 1};
    case Family::J: break;
  }
  return {1, 1, 0, 0};
}

namespace {

std::string stratum_name(int index) {
  return std::string(index % 2 == 0 ? "K1(" : "K2(") + std::to_string(index / 2) + ")";
}

}  // namespace

Stratum classify_filtration(const LongDiagram& d) {
  const GenusBounds g = genus_bounds(d);
  Stratum s;
  s.lower = std::min(2 * g.sg1_lower, 2 * g.sg2_lower + 1);
  s.upper = std::min(2 * g.sg1_upper, 2 * g.sg2_upper + 1);
  if (s.exact())
    s.label = s.upper == 0 ? stratum_name(0) : stratum_name(s.upper) + "\\" + stratum_name(s.upper - 1);
  else
    s.label = "undetermined [" + stratum_name(s.lower) + ", " + stratum_name(s.upper) + "]";
  return s;
}

}  // namespace vknot
