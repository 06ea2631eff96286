#include "vknot/invariants.hpp"

#include <algorithm>
#include <cstdlib>

namespace vknot {

const LaurentPoly& InvariantBundle::get(PolyFamily x, int a, int b) const {
  switch (x) {
    case PolyFamily::F: return F[a][b];
    case PolyFamily::G: return G[a][b];
    case PolyFamily::H: break;
  }
  return H[a][b];
}

LaurentPoly& InvariantBundle::get(PolyFamily x, int a, int b) {
  return const_cast<LaurentPoly&>(std::as_const(*this).get(x, a, b));
}

bool same_polynomials(const InvariantBundle& x, const InvariantBundle& y) {
  return x.W == y.W && x.F == y.F && x.G == y.G && x.H == y.H;
}

char family_letter(PolyFamily x) {
  switch (x) {
    case PolyFamily::F: return 'F';
    case PolyFamily::G: return 'G';
    case PolyFamily::H: break;
  }
  return 'H';
}

namespace {

// Dense exponent histogram; cheap to merge across threads.
struct Histogram {
  std::int64_t offset = 0;
  std::vector<std::int64_t> counts;

  explicit Histogram(std::int64_t bound = 0) : offset(bound), counts(2 * bound + 1, 0) {}
  void add(std::int64_t e, std::int64_t c) { counts[e + offset] += c; }
  void merge(const Histogram& o) {
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += o.counts[k];
  }
  // sum c_e t^e - constant
  LaurentPoly to_poly(std::int64_t constant) const {
    LaurentPoly p(-constant);
    for (std::size_t k = 0; k < counts.size(); ++k)
      if (counts[k] != 0) p.add_term(static_cast<long>(counts[k]), static_cast<Exponent>(k) - offset);
    return p;
  }
};

// Index [family][a][b].
using HistogramSet = std::array<std::array<std::array<Histogram, 2>, 2>, 3>;

HistogramSet make_set(std::int64_t bound) {
  HistogramSet s;
  for (auto& x : s)
    for (auto& row : x)
      for (auto& h : row) h = Histogram(bound);
  return s;
}

void accumulate_row(const HomologyData& h, const std::vector<int>& type, const std::vector<int>& sign,
                    std::size_t i, HistogramSet& acc) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t ee = sign[i] * sign[j];
    const std::int64_t mij = h.pairing(i, j);
    const int a = type[i], b = type[j];
    acc[0][a][b].add(mij, ee);
    acc[1][a][b].add(h.v[i] - mij, ee);
    acc[2][a][b].add(mij + h.v[j] - h.v[i], ee);
  }
}

}  // namespace

LaurentPoly writhe_poly(const LongDiagram& d, int a) {
  const HomologyData h = homology_data(d);
  LaurentPoly w;
  for (CrossingId id : crossings_of_type(d, a)) {
    LaurentPoly term = LaurentPoly::shifted_unit(h.v[id - 1]);
    term *= BigInt(d.sign(id));
    w += term;
  }
  return w;
}

InvariantBundle intersection_polys(const LongDiagram& d, const HomologyOptions& options) {
  return intersection_polys(d, homology_data(d, options));
}

InvariantBundle intersection_polys(const LongDiagram& d, const HomologyData& h, bool parallel) {
  const std::size_t n = d.crossing_count();
  std::vector<int> type(n), sign(n);
  for (std::size_t i = 0; i < n; ++i) {
    type[i] = crossing_type(d, static_cast<CrossingId>(i + 1));
    sign[i] = d.sign(static_cast<CrossingId>(i + 1));
  }
  std::int64_t max_v = 0, max_m = 0;
  for (auto x : h.v) max_v = std::max<std::int64_t>(max_v, std::llabs(x));
  for (auto x : h.m) max_m = std::max<std::int64_t>(max_m, std::llabs(x));
  const std::int64_t bound = max_m + 2 * max_v;

  InvariantBundle out;
  std::array<std::int64_t, 2> omega{0, 0};
  for (std::size_t i = 0; i < n; ++i) omega[type[i]] += sign[i];
  out.omega = {static_cast<int>(omega[0]), static_cast<int>(omega[1])};

  Histogram w_hist[2] = {Histogram(max_v), Histogram(max_v)};
  for (std::size_t i = 0; i < n; ++i) w_hist[type[i]].add(h.v[i], sign[i]);
  for (int a = 0; a < 2; ++a) out.W[a] = w_hist[a].to_poly(omega[a]);

  HistogramSet total = make_set(bound);
  const auto rows = static_cast<long>(n);
#pragma omp parallel if (parallel && n >= 32)
  {
    HistogramSet local = make_set(bound);
#pragma omp for schedule(static)
    for (long i = 0; i < rows; ++i) accumulate_row(h, type, sign, static_cast<std::size_t>(i), local);
#pragma omp critical
    for (int x = 0; x < 3; ++x)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) total[x][a][b].merge(local[x][a][b]);
  }

  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const std::int64_t pairs = omega[a] * omega[b];
      out.F[a][b] = total[0][a][b].to_poly(pairs);
      out.G[a][b] = total[1][a][b].to_poly(pairs) - BigInt(omega[b]) * out.W[a];
      out.H[a][b] = total[2][a][b].to_poly(pairs) - BigInt(omega[a]) * out.W[b] -
                    BigInt(omega[b]) * poly_invert_var(out.W[a]);
    }
  }
  return out;
}

ClosedInvariants closed_invariants(const ClosedDiagram& c, std::size_t arc, const HomologyOptions& options) {
  const LongDiagram d = cut(c, arc);
  const InvariantBundle b = intersection_polys(d, options);
  ClosedInvariants out;
  out.W = b.W[0] + poly_invert_var(b.W[1]);
  out.I = b.F[0][1] + b.G[0][0] + poly_invert_var(b.G[1][1]) + poly_invert_var(b.H[0][1]);
  return out;
}

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed(); });
}

std::vector<IdentityCheck> IdentityReport::failures() const {
  std::vector<IdentityCheck> out;
  for (const auto& c : checks)
    if (!c.passed()) out.push_back(c);
  return out;
}

namespace {

constexpr PolyFamily kFamilies[] = {PolyFamily::F, PolyFamily::G, PolyFamily::H};

std::string label(PolyFamily x, int a, int b) {
  return std::string(1, family_letter(x)) + std::to_string(a) + std::to_string(b);
}

class Checker {
 public:
  explicit Checker(IdentityReport& r) : report_(r) {}
  void equal(std::string name, LaurentPoly lhs, LaurentPoly rhs) {
    report_.checks.push_back({std::move(name), std::move(lhs), std::move(rhs)});
  }
  void reciprocal(std::string name, const LaurentPoly& p) { equal(std::move(name), p, poly_invert_var(p)); }
  void zero(std::string name, const LaurentPoly& p) { equal(std::move(name), p, LaurentPoly()); }

 private:
  IdentityReport& report_;
};

void unary_checks(const LongDiagram& d, const HomologyOptions& opt, Checker& check) {
  const InvariantBundle k = intersection_polys(d, opt);
  const auto inv = [](const LaurentPoly& p) { return poly_invert_var(p); };

  for (int a = 0; a < 2; ++a) check.equal("W" + std::to_string(a) + "(1) = 0", LaurentPoly::monomial(poly_eval_one(k.W[a]), 0), 0);
  for (auto x : kFamilies)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        check.equal(label(x, a, b) + "(1) = 0", LaurentPoly::monomial(poly_eval_one(k.get(x, a, b)), 0), 0);

  check.equal("F01(t) = F10(1/t)", k.F[0][1], inv(k.F[1][0]));
  check.equal("H01(t) = H10(1/t)", k.H[0][1], inv(k.H[1][0]));
  check.reciprocal("F00 reciprocal", k.F[0][0]);
  check.reciprocal("F11 reciprocal", k.F[1][1]);
  check.reciprocal("H00 reciprocal", k.H[0][0]);
  check.reciprocal("H11 reciprocal", k.H[1][1]);
  check.equal("G00'(1) = 0", LaurentPoly::monomial(poly_deriv_one(k.G[0][0]), 0), 0);
  check.equal("G11'(1) = 0", LaurentPoly::monomial(poly_deriv_one(k.G[1][1]), 0), 0);

  const InvariantBundle flip = intersection_polys(sym_flip(d), opt);
  const InvariantBundle rev = intersection_polys(sym_reverse(d), opt);
  const InvariantBundle refl = intersection_polys(sym_reflect(d), opt);
  for (int a = 0; a < 2; ++a) {
    const std::string s = std::to_string(a), s1 = std::to_string(1 - a);
    check.equal("W" + s + "(flip) = -W" + s1, flip.W[a], -k.W[1 - a]);
    check.equal("W" + s + "(reverse) = W" + s1, rev.W[a], k.W[1 - a]);
    check.equal("W" + s + "(mirror) = -W" + s + "(1/t)", refl.W[a], -inv(k.W[a]));
  }
  for (auto x : kFamilies) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const std::string l = label(x, a, b), l1 = label(x, 1 - a, 1 - b);
        check.equal(l + "(flip) = " + l1, flip.get(x, a, b), k.get(x, 1 - a, 1 - b));
        check.equal(l + "(reverse) = " + l1, rev.get(x, a, b), k.get(x, 1 - a, 1 - b));
        check.equal(l + "(mirror) = " + l + "(1/t)", refl.get(x, a, b), inv(k.get(x, a, b)));
      }
    }
  }

  const ClosedDiagram c = close(d);
  const ClosedInvariants base = closed_invariants(c, 0, opt);
  for (std::size_t arc = 1; arc < c.arc_count(); ++arc) {
    const ClosedInvariants other = closed_invariants(c, arc, opt);
    check.equal("closed W independent of cut " + std::to_string(arc), other.W, base.W);
    check.equal("closed I independent of cut " + std::to_string(arc), other.I, base.I);
  }

  const InvariantBundle untwisted = intersection_polys(untwist(d), opt);
  for (int a = 0; a < 2; ++a) check.equal("W" + std::to_string(a) + "(untwist)", untwisted.W[a], k.W[a]);
  for (auto x : kFamilies)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) check.equal(label(x, a, b) + "(untwist)", untwisted.get(x, a, b), k.get(x, a, b));

  if (crossings_of_type(d, 0).size() == 1) {
    check.zero("single type-0 crossing: F00 = 0", k.F[0][0]);
    check.zero("single type-0 crossing: G00 = 0", k.G[0][0]);
  }

  const int g1 = genus(build_carter(d));
  if (g1 == 0) {
    for (int a = 0; a < 2; ++a) check.zero("planar: W" + std::to_string(a) + " = 0", k.W[a]);
    for (auto x : kFamilies)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) check.zero("planar: " + label(x, a, b) + " = 0", k.get(x, a, b));
  }
  if (g1 <= 1) {
    check.reciprocal("torus: W0 - W1 reciprocal", k.W[0] - k.W[1]);
    check.reciprocal("torus: F01 + G00 - G11 - H01 reciprocal", k.F[0][1] + k.G[0][0] - k.G[1][1] - k.H[0][1]);
    check.reciprocal("torus: G00 - G01 - G10 + G11 reciprocal", k.G[0][0] - k.G[0][1] - k.G[1][0] + k.G[1][1]);
    check.reciprocal("torus: closed W reciprocal", base.W);
    check.reciprocal("torus: closed I reciprocal", base.I);
  }
  if (two_boundary_genus(d) == 0) {
    const LaurentPoly hh = k.W[0] * inv(k.W[0]);
    check.equal("annulus: W0 = W1", k.W[0], k.W[1]);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        check.zero("annulus: " + label(PolyFamily::F, a, b) + " = 0", k.F[a][b]);
        check.zero("annulus: " + label(PolyFamily::G, a, b) + " = 0", k.G[a][b]);
        check.equal("annulus: " + label(PolyFamily::H, a, b) + " = W0(t)W0(1/t)", k.H[a][b], hh);
      }
    }
  }
}

void product_checks(const LongDiagram& d, const LongDiagram& e, const HomologyOptions& opt, Checker& check) {
  const InvariantBundle k = intersection_polys(d, opt);
  const InvariantBundle l = intersection_polys(e, opt);
  const InvariantBundle p = intersection_polys(concatenate(d, e), opt);
  for (int a = 0; a < 2; ++a) check.equal("W" + std::to_string(a) + " additive", p.W[a], k.W[a] + l.W[a]);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      check.equal(label(PolyFamily::F, a, b) + " additive", p.F[a][b], k.F[a][b] + l.F[a][b]);
      check.equal(label(PolyFamily::G, a, b) + " additive", p.G[a][b], k.G[a][b] + l.G[a][b]);
      const LaurentPoly cross =
          poly_invert_var(k.W[a]) * l.W[b] + poly_invert_var(l.W[a]) * k.W[b];
      check.equal(label(PolyFamily::H, a, b) + " product rule", p.H[a][b], k.H[a][b] + l.H[a][b] + cross);
    }
  }
}

}  // namespace

IdentityReport check_identities(const LongDiagram& d, const std::optional<LongDiagram>& e,
                                const HomologyOptions& opt) {
  IdentityReport report;
  Checker check(report);
  unary_checks(d, opt, check);
  if (e) {
    unary_checks(*e, opt, check);
    product_checks(d, *e, opt, check);
  }
  return report;
}

}  // namespace vknot
