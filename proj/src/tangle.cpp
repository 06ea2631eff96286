#include "vknot/tangle.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

#include "vknot/error.hpp"
#include "vknot/surface.hpp"

namespace vknot {

namespace {

std::size_t token_count(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::size_t n = 0;
  while (in >> tok) ++n;
  return n;
}

std::string code_of(std::span<const Passage> ps, const LongDiagram& d) {
  std::string out;
  for (const Passage& p : ps) {
    if (!out.empty()) out += ' ';
    out += p.role == Role::Over ? 'O' : 'U';
    out += std::to_string(p.id);
    out += d.sign(p.id) > 0 ? '+' : '-';
  }
  return out;
}

int rho(const Passage& p, int sign) { return p.role == Role::Over ? sign : -sign; }

}  // namespace

TangleDiagram::TangleDiagram(LongDiagram joined, std::size_t split) : joined_(canonical(joined)), split_(split) {
  if (split > joined_.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "split " + std::to_string(split) + " beyond " + std::to_string(joined_.size()) + " passages");
}

TangleDiagram::TangleDiagram(std::vector<Passage> a, std::vector<Passage> b, std::vector<int> signs)
    : TangleDiagram(
          [&] {
            std::vector<Passage> all = a;
            all.insert(all.end(), b.begin(), b.end());
            return LongDiagram(std::move(all), std::move(signs));
          }(),
          a.size()) {}

std::string TangleDiagram::to_string() const {
  return "A: " + code_of(strand_a(), joined_) + "\nB: " + code_of(strand_b(), joined_);
}

TangleDiagram parse_tangle(std::string_view text) {
  std::optional<std::string> a, b;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line.size() < 2 || line[1] != ':' || (line[0] != 'A' && line[0] != 'B'))
      throw Error(ErrorKind::MalformedToken, "tangle lines start with 'A:' or 'B:': '" + line + "'");
    auto& slot = line[0] == 'A' ? a : b;
    if (slot) throw Error(ErrorKind::MalformedToken, std::string("repeated strand ") + line[0]);
    slot = line.substr(2);
  }
  if (!a || !b) throw Error(ErrorKind::MalformedToken, "tangle needs both an 'A:' and a 'B:' line");
  return TangleDiagram(parse_gauss_code(*a + " " + *b), token_count(*a));
}

const char* type_name(TangleCrossingType t) {
  switch (t) {
    case TangleCrossingType::AA0: return "(A,A;0)";
    case TangleCrossingType::AA1: return "(A,A;1)";
    case TangleCrossingType::BB0: return "(B,B;0)";
    case TangleCrossingType::BB1: return "(B,B;1)";
    case TangleCrossingType::AB: return "(A,B)";
    case TangleCrossingType::BA: break;
  }
  return "(B,A)";
}

TangleCrossingType classify_crossing(const TangleDiagram& e, CrossingId id) {
  const LongDiagram& d = e.joined();
  const Strand over = e.strand_of(d.position(id, Role::Over));
  const Strand under = e.strand_of(d.position(id, Role::Under));
  if (over != under) return over == Strand::A ? TangleCrossingType::AB : TangleCrossingType::BA;
  const int type = crossing_type(d, id);
  if (over == Strand::A) return type == 0 ? TangleCrossingType::AA0 : TangleCrossingType::AA1;
  return type == 0 ? TangleCrossingType::BB0 : TangleCrossingType::BB1;
}

LongDiagram right_close(const TangleDiagram& e) { return e.joined(); }

LongDiagram left_close(const TangleDiagram& e) {
  std::vector<Passage> ps(e.strand_b().begin(), e.strand_b().end());
  ps.insert(ps.end(), e.strand_a().begin(), e.strand_a().end());
  const auto signs = e.joined().signs();
  return canonical(LongDiagram(std::move(ps), std::vector<int>(signs.begin(), signs.end())));
}

TangleInvariants tangle_invariants(const TangleDiagram& e) {
  const LongDiagram& d = e.joined();
  const HomologyData h = homology_data(d);
  TangleInvariants out;
  for (CrossingId id = 1; id <= static_cast<CrossingId>(d.crossing_count()); ++id) {
    const int eps = d.sign(id);
    const auto v = h.v[id - 1];
    const TangleCrossingType t = classify_crossing(e, id);
    if (t == TangleCrossingType::AB || t == TangleCrossingType::BA) {
      const int a = t == TangleCrossingType::AB ? 0 : 1;
      out.v[a].add_term(eps, v);
      out.lambda[a] += eps;
      continue;
    }
    const int a = (t == TangleCrossingType::AA0 || t == TangleCrossingType::BB0) ? 0 : 1;
    const int x = (t == TangleCrossingType::AA0 || t == TangleCrossingType::AA1) ? 0 : 1;
    LaurentPoly term = LaurentPoly::shifted_unit(v);
    term *= BigInt(eps);
    out.u_x[a][x] += term;
  }
  for (int a = 0; a < 2; ++a) out.u[a] = out.u_x[a][0] + out.u_x[a][1];
  return out;
}

LongDiagram tangle_sum(const TangleDiagram& e, const LongDiagram& d) {
  const auto m = static_cast<CrossingId>(e.crossing_count());
  std::vector<Passage> ps(e.strand_a().begin(), e.strand_a().end());
  for (const Passage& p : d.passages()) ps.push_back({p.id + m, p.role});
  ps.insert(ps.end(), e.strand_b().begin(), e.strand_b().end());
  std::vector<int> signs(e.joined().signs().begin(), e.joined().signs().end());
  signs.insert(signs.end(), d.signs().begin(), d.signs().end());
  return canonical(LongDiagram(std::move(ps), std::move(signs)));
}

bool is_simply_linked(const TangleDiagram& e) {
  const LongDiagram& d = e.joined();
  for (CrossingId id = 1; id <= static_cast<CrossingId>(d.crossing_count()); ++id)
    if (e.strand_of(d.first_position(id)) == e.strand_of(d.second_position(id))) return false;
  return true;
}

namespace {

struct Working {
  std::vector<Passage> seq;
  std::vector<int> signs;
  std::size_t split = 0;
};

// Slides the self crossing of B whose first passage is nearest the split to
// the end of A. A finger of the crossing's second strand follows the first
// strand back to the split, crossing each strand met on the way twice.
// Returns false when B has no self crossing.
bool relocate_nearest(Working& w) {
  const LongDiagram d(w.seq, w.signs);
  CrossingId c = 0;
  std::size_t f = w.seq.size();
  for (std::size_t pos = w.split; pos < w.seq.size(); ++pos) {
    const CrossingId id = w.seq[pos].id;
    if (d.first_position(id) == pos && d.second_position(id) >= w.split) {
      c = id;
      f = pos;
      break;
    }
  }
  if (c == 0) return false;
  const std::size_t g = d.second_position(c);
  const int sigma = rho(w.seq[f], d.sign(c));
  const bool finger_over = w.seq[g].role == Role::Over;
  const Role finger_role = w.seq[g].role;

  // m_k = split + k for k = 0..r-1; all are mixed crossings.
  const std::size_t r = f - w.split;
  std::vector<CrossingId> id1(r), id2(r);
  std::vector<int> tau(r);
  std::vector<std::size_t> slot_of(w.split, r);  // A position -> k
  auto next_id = static_cast<CrossingId>(d.crossing_count());
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t m = w.split + k;
    tau[k] = rho(w.seq[m], d.sign(w.seq[m].id));
    slot_of[d.partner(m)] = k;
    id1[k] = ++next_id;
    id2[k] = ++next_id;
    // strand1 heads back along the first strand, strand2 returns with it;
    // sign is det(over tangent, under tangent) with x_k along (0, tau).
    w.signs.push_back(finger_over ? -tau[k] : tau[k]);
    w.signs.push_back(finger_over ? tau[k] : -tau[k]);
  }

  std::vector<Passage> out;
  out.reserve(w.seq.size() + 4 * r);
  const Role x_role = opposite(finger_role);
  for (std::size_t pos = 0; pos < w.split; ++pos) {
    const std::size_t k = slot_of[pos];
    if (k == r) {
      out.push_back(w.seq[pos]);
      continue;
    }
    const bool strand1_first = tau[k] == sigma;
    out.push_back({strand1_first ? id1[k] : id2[k], x_role});
    out.push_back(w.seq[pos]);
    out.push_back({strand1_first ? id2[k] : id1[k], x_role});
  }
  out.push_back(w.seq[f]);
  const std::size_t new_split = out.size();
  for (std::size_t pos = w.split; pos < w.seq.size(); ++pos) {
    if (pos == f) continue;
    if (pos != g) {
      out.push_back(w.seq[pos]);
      continue;
    }
    for (std::size_t k = r; k-- > 0;) out.push_back({id1[k], finger_role});
    out.push_back(w.seq[g]);
    for (std::size_t k = 0; k < r; ++k) out.push_back({id2[k], finger_role});
  }
  w.seq = std::move(out);
  w.split = new_split;
  return true;
}

// Cancels adjacent pairs of opposite-sign mixed crossings, the inverse of
// the R2 fingers inserted above. Pairs never straddle the split: the two
// endpoints there are not joined inside the tangle.
void cancel_bigons(Working& w) {
  bool changed = true;
  while (changed) {
    changed = false;
    const LongDiagram d(w.seq, w.signs);
    std::vector<bool> drop(d.crossing_count() + 1, false);
    std::vector<bool> used(w.seq.size(), false);
    for (std::size_t p = 0; p + 1 < w.seq.size(); ++p) {
      if (p + 1 == w.split || used[p] || used[p + 1]) continue;
      const Passage x = w.seq[p], y = w.seq[p + 1];
      if (x.id == y.id || x.role != y.role || d.sign(x.id) == d.sign(y.id)) continue;
      const std::size_t px = d.partner(p), py = d.partner(p + 1);
      const std::size_t lo = std::min(px, py);
      if (std::max(px, py) != lo + 1 || lo + 1 == w.split || used[lo] || used[lo + 1]) continue;
      used[p] = used[p + 1] = used[lo] = used[lo + 1] = true;
      drop[x.id] = drop[y.id] = true;
      changed = true;
    }
    if (!changed) break;
    std::vector<CrossingId> relabel(drop.size(), 0);
    std::vector<int> signs;
    for (CrossingId id = 1; id < static_cast<CrossingId>(drop.size()); ++id) {
      if (drop[id]) continue;
      signs.push_back(w.signs[id - 1]);
      relabel[id] = static_cast<CrossingId>(signs.size());
    }
    std::vector<Passage> seq;
    std::size_t split = 0;
    for (std::size_t p = 0; p < w.seq.size(); ++p) {
      if (drop[w.seq[p].id]) continue;
      if (p < w.split) ++split;
      seq.push_back({relabel[w.seq[p].id], w.seq[p].role});
    }
    const LongDiagram c = canonical(LongDiagram(std::move(seq), std::move(signs)));
    w.seq.assign(c.passages().begin(), c.passages().end());
    w.signs.assign(c.signs().begin(), c.signs().end());
    w.split = split;
  }
}

// Untwisting kinks placed right after the first passage: each sits at the
// head of B and slides onto A without meeting any other strand.
LongDiagram untwist_after_first(const LongDiagram& d) {
  std::vector<Passage> ps;
  std::vector<int> signs(d.signs().begin(), d.signs().end());
  if (!d.empty()) ps.push_back(d.at(0));
  auto next = static_cast<CrossingId>(d.crossing_count());
  for (int a = 0; a < 2; ++a) {
    const int w = writhe_a(d, a);
    for (int k = 0; k < std::abs(w); ++k) {
      ++next;
      const Role first = a == 0 ? Role::Over : Role::Under;
      ps.push_back({next, first});
      ps.push_back({next, opposite(first)});
      signs.push_back(w > 0 ? -1 : 1);
    }
  }
  if (!d.empty()) ps.insert(ps.end(), d.passages().begin() + 1, d.passages().end());
  return LongDiagram(std::move(ps), std::move(signs));
}

}  // namespace

TangleDiagram simply_linked_from(const LongDiagram& d, std::size_t max_crossings) {
  const LongDiagram u = untwist_after_first(d);
  if (u.empty()) return TangleDiagram(u, 0);
  Working w{std::vector<Passage>(u.passages().begin(), u.passages().end()),
            std::vector<int>(u.signs().begin(), u.signs().end()), 1};
  const std::size_t budget = u.crossing_count();
  for (std::size_t step = 0;; ++step) {
    if (!relocate_nearest(w)) break;
    cancel_bigons(w);
    if (max_crossings != 0 && w.signs.size() > max_crossings)
      throw Error(ErrorKind::SizeLimit, std::to_string(w.signs.size()) + " crossings after " + std::to_string(step + 1) +
                                            " relocations, over the cap of " + std::to_string(max_crossings));
    if (step >= budget)
      throw Error(ErrorKind::NonterminatingRelocation,
                  "more than " + std::to_string(budget) + " relocations for " + d.to_string());
  }
  return TangleDiagram(LongDiagram(std::move(w.seq), std::move(w.signs)), w.split);
}

LongDiagram swap_FH(const LongDiagram& d, std::size_t max_crossings) {
  return left_close(simply_linked_from(d, max_crossings));
}

}  // namespace vknot

namespace vknot {

namespace {

void record(IdentityReport& r, std::string name, LaurentPoly lhs, LaurentPoly rhs) {
  r.checks.push_back({std::move(name), std::move(lhs), std::move(rhs)});
}

std::string ab(int a, int b) { return std::to_string(a) + std::to_string(b); }

void swapped_pairs(IdentityReport& r, const InvariantBundle& k, const InvariantBundle& base, const std::string& tag) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      record(r, tag + ": F" + ab(a, b) + " = H" + ab(1 - a, 1 - b), k.F[a][b], base.H[1 - a][1 - b]);
      record(r, tag + ": H" + ab(a, b) + " = F" + ab(1 - a, 1 - b), k.H[a][b], base.F[1 - a][1 - b]);
    }
}

}  // namespace

IdentityReport check_tangle_identities(const TangleDiagram& e, const LongDiagram& d, const HomologyOptions& options) {
  IdentityReport r;
  const TangleInvariants ti = tangle_invariants(e);
  const InvariantBundle rc = intersection_polys(right_close(e), options);
  const InvariantBundle k = intersection_polys(d, options);
  const InvariantBundle s = intersection_polys(tangle_sum(e, d), options);
  const auto inv = [](const LaurentPoly& p) { return poly_invert_var(p); };
  for (int a = 0; a < 2; ++a) {
    const std::string sa = std::to_string(a);
    const LaurentPoly la(ti.lambda[a]);
    record(r, "W" + sa + "(R(E)) = U" + sa + " + V" + sa + " - lambda" + sa, rc.W[a], ti.u[a] + ti.v[a] - la);
    record(r, "W" + sa + "(E+D)", s.W[a], rc.W[a] + k.W[a]);
    for (int b = 0; b < 2; ++b) {
      const LaurentPoly lb(ti.lambda[b]);
      record(r, "F" + ab(a, b) + "(E+D)", s.F[a][b], rc.F[a][b] + k.F[a][b] + lb * k.W[a] + la * inv(k.W[b]));
      record(r, "G" + ab(a, b) + "(E+D)", s.G[a][b], rc.G[a][b] + k.G[a][b] - lb * k.W[a] + ti.v[a] * k.W[b]);
      record(r, "H" + ab(a, b) + "(E+D)", s.H[a][b],
             rc.H[a][b] + k.H[a][b] + (ti.u[b] - lb) * inv(k.W[a]) + (inv(ti.u[a]) - la) * k.W[b]);
    }
  }
  return r;
}

IdentityReport check_left_closure(const TangleDiagram& e, const HomologyOptions& options) {
  IdentityReport r;
  const TangleInvariants ti = tangle_invariants(e);
  record(r, "simply linked", LaurentPoly(is_simply_linked(e) ? 1 : 0), LaurentPoly(1));
  record(r, "lambda0 = 0", LaurentPoly(ti.lambda[0]), LaurentPoly());
  record(r, "lambda1 = 0", LaurentPoly(ti.lambda[1]), LaurentPoly());
  swapped_pairs(r, intersection_polys(left_close(e), options), intersection_polys(right_close(e), options),
                "left closure");
  return r;
}

IdentityReport check_swap_FH(const LongDiagram& d, const HomologyOptions& options) {
  IdentityReport r;
  swapped_pairs(r, intersection_polys(swap_FH(d), options), intersection_polys(d, options), "swap");
  return r;
}

}  // namespace vknot
