#include "vknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include "vknot/error.hpp"

namespace vknot {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::string token(const Passage& p, int sign) {
  std::string s(1, p.role == Role::Over ? 'O' : 'U');
  s += std::to_string(p.id);
  s += sign > 0 ? '+' : '-';
  return s;
}

}  // namespace

LongDiagram::LongDiagram(std::vector<Passage> passages, std::vector<int> signs)
    : passages_(std::move(passages)), signs_(std::move(signs)) {
  const std::size_t n = signs_.size();
  if (passages_.size() != 2 * n)
    throw Error(ErrorKind::LabelCountNotTwo, "expected " + std::to_string(2 * n) + " passages for " +
                                                 std::to_string(n) + " crossings");
  for (int s : signs_)
    if (s != 1 && s != -1) throw Error(ErrorKind::SignMismatch, "sign must be +1 or -1");
  positions_.assign(n, {kNone, kNone});
  std::vector<std::array<bool, 2>> seen_role(n, {false, false});
  for (std::size_t pos = 0; pos < passages_.size(); ++pos) {
    const Passage& p = passages_[pos];
    if (p.id < 1 || static_cast<std::size_t>(p.id) > n)
      throw Error(ErrorKind::UnknownCrossing, "crossing id " + std::to_string(p.id) + " out of 1.." +
                                                  std::to_string(n));
    auto& slot = positions_[p.id - 1];
    if (slot[0] == kNone)
      slot[0] = pos;
    else if (slot[1] == kNone)
      slot[1] = pos;
    else
      throw Error(ErrorKind::LabelCountNotTwo, "crossing " + std::to_string(p.id) + " occurs more than twice");
    auto& roles = seen_role[p.id - 1][p.role == Role::Over ? 0 : 1];
    if (roles) throw Error(ErrorKind::RoleDuplicated, "crossing " + std::to_string(p.id) + " has two equal roles");
    roles = true;
  }
}

void LongDiagram::check_id(CrossingId id) const {
  if (id < 1 || static_cast<std::size_t>(id) > signs_.size())
    throw Error(ErrorKind::UnknownCrossing, "no crossing " + std::to_string(id));
}

int LongDiagram::sign(CrossingId id) const {
  check_id(id);
  return signs_[id - 1];
}

std::size_t LongDiagram::first_position(CrossingId id) const {
  check_id(id);
  return positions_[id - 1][0];
}

std::size_t LongDiagram::second_position(CrossingId id) const {
  check_id(id);
  return positions_[id - 1][1];
}

std::size_t LongDiagram::position(CrossingId id, Role role) const {
  check_id(id);
  const auto& [a, b] = positions_[id - 1];
  return passages_[a].role == role ? a : b;
}

std::size_t LongDiagram::partner(std::size_t pos) const {
  const auto& [a, b] = positions_[passages_[pos].id - 1];
  return a == pos ? b : a;
}

std::string LongDiagram::to_string() const {
  std::string out;
  for (const Passage& p : passages_) {
    if (!out.empty()) out += ' ';
    out += token(p, signs_[p.id - 1]);
  }
  return out;
}

LongDiagram parse_gauss_code(std::string_view text) {
  std::vector<std::pair<Role, long>> raw;
  std::map<long, int> sign_of;
  std::map<long, int> count;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 3) throw Error(ErrorKind::MalformedToken, "'" + tok + "'");
    const char r = static_cast<char>(std::toupper(static_cast<unsigned char>(tok.front())));
    const char s = tok.back();
    if ((r != 'O' && r != 'U') || (s != '+' && s != '-'))
      throw Error(ErrorKind::MalformedToken, "'" + tok + "'");
    const std::string digits = tok.substr(1, tok.size() - 2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorKind::MalformedToken, "'" + tok + "'");
    const long label = std::strtol(digits.c_str(), nullptr, 10);
    if (label < 1) throw Error(ErrorKind::MalformedToken, "labels are positive: '" + tok + "'");
    const int sign = s == '+' ? 1 : -1;
    auto [it, inserted] = sign_of.emplace(label, sign);
    if (!inserted && it->second != sign)
      throw Error(ErrorKind::SignMismatch, "crossing " + std::to_string(label));
    ++count[label];
    raw.emplace_back(r == 'O' ? Role::Over : Role::Under, label);
  }
  for (const auto& [label, c] : count)
    if (c != 2)
      throw Error(ErrorKind::LabelCountNotTwo,
                  "crossing " + std::to_string(label) + " occurs " + std::to_string(c) + " time(s)");
  std::map<long, std::array<int, 2>> roles;
  for (const auto& [role, label] : raw) {
    auto& r = roles[label];
    if (++r[role == Role::Over ? 0 : 1] > 1)
      throw Error(ErrorKind::RoleDuplicated, "crossing " + std::to_string(label));
  }
  std::map<long, CrossingId> relabel;
  std::vector<Passage> passages;
  std::vector<int> signs;
  for (const auto& [role, label] : raw) {
    auto [it, inserted] = relabel.emplace(label, static_cast<CrossingId>(relabel.size() + 1));
    if (inserted) signs.push_back(sign_of[label]);
    passages.push_back({it->second, role});
  }
  return LongDiagram(std::move(passages), std::move(signs));
}

LongDiagram canonical(const LongDiagram& d) {
  std::vector<CrossingId> relabel(d.crossing_count() + 1, 0);
  std::vector<Passage> passages;
  std::vector<int> signs;
  passages.reserve(d.size());
  CrossingId next = 1;
  for (const Passage& p : d.passages()) {
    if (relabel[p.id] == 0) {
      relabel[p.id] = next++;
      signs.push_back(d.sign(p.id));
    }
    passages.push_back({relabel[p.id], p.role});
  }
  return LongDiagram(std::move(passages), std::move(signs));
}

int crossing_type(const LongDiagram& d, CrossingId id) {
  return d.at(d.first_position(id)).role == Role::Over ? 0 : 1;
}

std::vector<CrossingId> crossings_of_type(const LongDiagram& d, int a) {
  std::vector<CrossingId> out;
  for (CrossingId id = 1; id <= static_cast<CrossingId>(d.crossing_count()); ++id)
    if (crossing_type(d, id) == a) out.push_back(id);
  return out;
}

int writhe_a(const LongDiagram& d, int a) {
  int w = 0;
  for (CrossingId id : crossings_of_type(d, a)) w += d.sign(id);
  return w;
}

LongDiagram untwist(const LongDiagram& d) {
  std::vector<Passage> passages(d.passages().begin(), d.passages().end());
  std::vector<int> signs(d.signs().begin(), d.signs().end());
  for (int a = 0; a < 2; ++a) {
    const int w = writhe_a(d, a);
    const int kink_sign = w > 0 ? -1 : 1;
    const Role first = a == 0 ? Role::Over : Role::Under;
    for (int k = 0; k < std::abs(w); ++k) {
      signs.push_back(kink_sign);
      const auto id = static_cast<CrossingId>(signs.size());
      passages.push_back({id, first});
      passages.push_back({id, opposite(first)});
    }
  }
  return LongDiagram(std::move(passages), std::move(signs));
}

LongDiagram sym_flip(const LongDiagram& d, FlipConvention convention) {
  std::vector<Passage> passages(d.passages().begin(), d.passages().end());
  for (Passage& p : passages) p.role = opposite(p.role);
  std::vector<int> signs(d.signs().begin(), d.signs().end());
  if (convention == FlipConvention::NegateSigns)
    for (int& s : signs) s = -s;
  return LongDiagram(std::move(passages), std::move(signs));
}

LongDiagram sym_reverse(const LongDiagram& d) {
  std::vector<Passage> passages(d.passages().rbegin(), d.passages().rend());
  return LongDiagram(std::move(passages), std::vector<int>(d.signs().begin(), d.signs().end()));
}

LongDiagram sym_reflect(const LongDiagram& d) {
  std::vector<int> signs(d.signs().begin(), d.signs().end());
  for (int& s : signs) s = -s;
  return LongDiagram(std::vector<Passage>(d.passages().begin(), d.passages().end()), std::move(signs));
}

LongDiagram concatenate(const LongDiagram& d, const LongDiagram& e) {
  std::vector<Passage> passages(d.passages().begin(), d.passages().end());
  std::vector<int> signs(d.signs().begin(), d.signs().end());
  const auto shift = static_cast<CrossingId>(d.crossing_count());
  for (const Passage& p : e.passages()) passages.push_back({p.id + shift, p.role});
  signs.insert(signs.end(), e.signs().begin(), e.signs().end());
  return canonical(LongDiagram(std::move(passages), std::move(signs)));
}

ClosedDiagram close(const LongDiagram& d) { return ClosedDiagram(d); }

LongDiagram cut(const ClosedDiagram& c, std::size_t arc) {
  if (arc >= c.arc_count())
    throw Error(ErrorKind::ArcOutOfRange,
                "arc " + std::to_string(arc) + " of " + std::to_string(c.arc_count()));
  const LongDiagram& rep = c.representative();
  if (rep.empty()) return rep;
  std::vector<Passage> passages(rep.passages().begin(), rep.passages().end());
  std::rotate(passages.begin(), passages.begin() + static_cast<std::ptrdiff_t>(arc), passages.end());
  return LongDiagram(std::move(passages), std::vector<int>(rep.signs().begin(), rep.signs().end()));
}

// ---------------------------------------------------------------------------
// Reidemeister moves

std::string describe(const MoveSite& s) {
  std::ostringstream os;
  switch (s.kind) {
    case MoveKind::R1Insert:
      os << "R1+ gap=" << s.gap1 << " sign=" << s.sign << " first=" << (s.first_role == Role::Over ? 'O' : 'U');
      break;
    case MoveKind::R1Delete:
      os << "R1- crossing=" << s.ids[0];
      break;
    case MoveKind::R2Insert:
      os << "R2+ gaps=" << s.gap1 << "," << s.gap2 << " sign=" << s.sign
         << " first=" << (s.first_role == Role::Over ? 'O' : 'U') << (s.parallel ? " parallel" : " antiparallel");
      break;
    case MoveKind::R2Delete:
      os << "R2- crossings=" << s.ids[0] << "," << s.ids[1];
      break;
    case MoveKind::R3:
      os << "R3 crossings=" << s.ids[0] << "," << s.ids[1] << "," << s.ids[2];
      break;
  }
  return os.str();
}

bool r3_signs_compatible(int sign_x, int sign_y, int sign_z, bool top_x_first, bool middle_x_first,
                         bool bottom_y_first) {
  // Three lines bounding a triangle: with orientation sigma of the triangle
  // and segment directions s1, s2, s3, the signs are s1*s2*sigma,
  // s1*s3*sigma and s2*s3*sigma.
  const int s1 = top_x_first ? 1 : -1;
  const int s2 = middle_x_first ? 1 : -1;
  const int s3 = bottom_y_first ? 1 : -1;
  return sign_y == sign_x * s2 * s3 && sign_z == sign_x * s1 * s3;
}

namespace {

bool adjacent(std::size_t a, std::size_t b) { return a + 1 == b || b + 1 == a; }

bool r1_deletable(const LongDiagram& d, CrossingId id) {
  return d.second_position(id) == d.first_position(id) + 1;
}

bool r2_deletable(const LongDiagram& d, CrossingId a, CrossingId b) {
  if (a == b || d.sign(a) != -d.sign(b)) return false;
  return adjacent(d.position(a, Role::Over), d.position(b, Role::Over)) &&
         adjacent(d.position(a, Role::Under), d.position(b, Role::Under));
}

bool r3_applicable(const LongDiagram& d, CrossingId x, CrossingId y, CrossingId z) {
  if (x == y || y == z || x == z) return false;
  const std::size_t ox = d.position(x, Role::Over), ux = d.position(x, Role::Under);
  const std::size_t oy = d.position(y, Role::Over), uy = d.position(y, Role::Under);
  const std::size_t oz = d.position(z, Role::Over), uz = d.position(z, Role::Under);
  if (!adjacent(ox, oy) || !adjacent(ux, oz) || !adjacent(uy, uz)) return false;
  return r3_signs_compatible(d.sign(x), d.sign(y), d.sign(z), ox < oy, ux < oz, uy < uz);
}

LongDiagram drop_crossings(const LongDiagram& d, std::initializer_list<CrossingId> ids) {
  std::vector<Passage> passages;
  for (const Passage& p : d.passages())
    if (std::find(ids.begin(), ids.end(), p.id) == ids.end()) passages.push_back(p);
  std::vector<CrossingId> relabel(d.crossing_count() + 1, 0);
  std::vector<int> signs;
  for (CrossingId id = 1; id <= static_cast<CrossingId>(d.crossing_count()); ++id) {
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) continue;
    signs.push_back(d.sign(id));
    relabel[id] = static_cast<CrossingId>(signs.size());
  }
  for (Passage& p : passages) p.id = relabel[p.id];
  return canonical(LongDiagram(std::move(passages), std::move(signs)));
}

}  // namespace

bool is_valid_site(const LongDiagram& d, const MoveSite& s) {
  const std::size_t gaps = d.size() + 1;
  const auto n = static_cast<CrossingId>(d.crossing_count());
  auto known = [n](CrossingId id) { return id >= 1 && id <= n; };
  switch (s.kind) {
    case MoveKind::R1Insert:
      return s.gap1 < gaps && (s.sign == 1 || s.sign == -1);
    case MoveKind::R2Insert:
      return s.gap1 <= s.gap2 && s.gap2 < gaps && (s.sign == 1 || s.sign == -1);
    case MoveKind::R1Delete:
      return known(s.ids[0]) && r1_deletable(d, s.ids[0]);
    case MoveKind::R2Delete:
      return known(s.ids[0]) && known(s.ids[1]) && r2_deletable(d, s.ids[0], s.ids[1]);
    case MoveKind::R3:
      return known(s.ids[0]) && known(s.ids[1]) && known(s.ids[2]) && r3_applicable(d, s.ids[0], s.ids[1], s.ids[2]);
  }
  return false;
}

std::vector<MoveSite> enumerate_rmoves(const LongDiagram& d) {
  std::vector<MoveSite> sites;
  const std::size_t gaps = d.size() + 1;
  const auto n = static_cast<CrossingId>(d.crossing_count());
  for (std::size_t g = 0; g < gaps; ++g)
    for (int sign : {1, -1})
      for (Role r : {Role::Over, Role::Under})
        sites.push_back({MoveKind::R1Insert, g, g, sign, r, true, {}});
  for (std::size_t g1 = 0; g1 < gaps; ++g1)
    for (std::size_t g2 = g1; g2 < gaps; ++g2)
      for (int sign : {1, -1})
        for (Role r : {Role::Over, Role::Under})
          for (bool parallel : {true, false}) sites.push_back({MoveKind::R2Insert, g1, g2, sign, r, parallel, {}});
  for (CrossingId id = 1; id <= n; ++id)
    if (r1_deletable(d, id)) sites.push_back({MoveKind::R1Delete, 0, 0, 1, Role::Over, true, {id, 0, 0}});
  for (CrossingId a = 1; a <= n; ++a)
    for (CrossingId b = a + 1; b <= n; ++b)
      if (r2_deletable(d, a, b)) sites.push_back({MoveKind::R2Delete, 0, 0, 1, Role::Over, true, {a, b, 0}});
  // Triangles: x = top/middle, y = top/bottom, z = middle/bottom.
  for (std::size_t pos = 0; pos + 1 < d.size(); ++pos) {
    const Passage& p = d.at(pos);
    const Passage& q = d.at(pos + 1);
    if (p.role != Role::Over || q.role != Role::Over) continue;
    for (auto [x, y] : {std::pair{p.id, q.id}, std::pair{q.id, p.id}}) {
      const std::size_t ux = d.position(x, Role::Under);
      for (std::size_t nb : {ux - 1, ux + 1}) {
        if (nb >= d.size() || d.at(nb).role != Role::Over) continue;
        const CrossingId z = d.at(nb).id;
        if (r3_applicable(d, x, y, z)) sites.push_back({MoveKind::R3, 0, 0, 1, Role::Over, true, {x, y, z}});
      }
    }
  }
  return sites;
}

LongDiagram apply_rmove(const LongDiagram& d, const MoveSite& s) {
  if (!is_valid_site(d, s)) throw Error(ErrorKind::InvalidSite, describe(s) + " on " + d.to_string());
  const auto n = static_cast<CrossingId>(d.crossing_count());
  std::vector<Passage> base(d.passages().begin(), d.passages().end());
  std::vector<int> signs(d.signs().begin(), d.signs().end());
  switch (s.kind) {
    case MoveKind::R1Insert: {
      const CrossingId id = n + 1;
      signs.push_back(s.sign);
      const Passage kink[2] = {{id, s.first_role}, {id, opposite(s.first_role)}};
      base.insert(base.begin() + static_cast<std::ptrdiff_t>(s.gap1), kink, kink + 2);
      return canonical(LongDiagram(std::move(base), std::move(signs)));
    }
    case MoveKind::R2Insert: {
      const CrossingId a = n + 1, b = n + 2;
      signs.push_back(s.sign);
      signs.push_back(-s.sign);
      const Role r1 = s.first_role, r2 = opposite(s.first_role);
      const Passage seg1[2] = {{a, r1}, {b, r1}};
      const Passage seg2[2] = {s.parallel ? Passage{a, r2} : Passage{b, r2},
                               s.parallel ? Passage{b, r2} : Passage{a, r2}};
      // Insert the later segment first so gap1 stays valid.
      base.insert(base.begin() + static_cast<std::ptrdiff_t>(s.gap2), seg2, seg2 + 2);
      base.insert(base.begin() + static_cast<std::ptrdiff_t>(s.gap1), seg1, seg1 + 2);
      return canonical(LongDiagram(std::move(base), std::move(signs)));
    }
    case MoveKind::R1Delete:
      return drop_crossings(d, {s.ids[0]});
    case MoveKind::R2Delete:
      return drop_crossings(d, {s.ids[0], s.ids[1]});
    case MoveKind::R3: {
      const auto [x, y, z] = s.ids;
      for (auto [u, ru, v, rv] : {std::tuple{x, Role::Over, y, Role::Over}, std::tuple{x, Role::Under, z, Role::Over},
                                  std::tuple{y, Role::Under, z, Role::Under}})
        std::swap(base[d.position(u, ru)], base[d.position(v, rv)]);
      return LongDiagram(std::move(base), std::move(signs));
    }
  }
  throw Error(ErrorKind::InvalidSite, describe(s));
}

}  // namespace vknot
