#include "vknot/surface.hpp"

#include <array>
#include <string>

#include "vknot/error.hpp"

namespace vknot {

namespace {

// Rotation of the four half-edges at each crossing vertex, then the extra
// two half-edges at 4n and 4n+1.
void add_crossing_rotations(const LongDiagram& d, SurfaceOrientation orientation, RibbonGraph& r) {
  const std::size_t n = d.crossing_count();
  for (CrossingId id = 1; id <= static_cast<CrossingId>(n); ++id) {
    const std::size_t o = d.position(id, Role::Over);
    const std::size_t u = d.position(id, Role::Under);
    std::array<int, 4> ccw = d.sign(id) > 0
                                 ? std::array<int, 4>{out_half(o), out_half(u), in_half(o), in_half(u)}
                                 : std::array<int, 4>{out_half(o), in_half(u), in_half(o), out_half(u)};
    if (orientation == SurfaceOrientation::Standard) std::swap(ccw[1], ccw[3]);
    for (std::size_t k = 0; k < 4; ++k) {
      r.next_ccw[ccw[k]] = ccw[(k + 1) % 4];
      r.vertex_of[ccw[k]] = id - 1;
    }
  }
  for (std::size_t pos = 0; pos + 1 < d.size(); ++pos) {
    r.pair[out_half(pos)] = in_half(pos + 1);
    r.pair[in_half(pos + 1)] = out_half(pos);
  }
}

void link(RibbonGraph& r, int a, int b) {
  r.pair[a] = b;
  r.pair[b] = a;
}

}  // namespace

std::vector<std::vector<int>> RibbonGraph::faces() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(half_edge_count(), false);
  for (std::size_t start = 0; start < half_edge_count(); ++start) {
    if (seen[start]) continue;
    std::vector<int> face;
    int h = static_cast<int>(start);
    while (!seen[h]) {
      seen[h] = true;
      face.push_back(h);
      h = next_ccw[pair[h]];
    }
    out.push_back(std::move(face));
  }
  return out;
}

std::vector<int> RibbonGraph::face_of() const {
  std::vector<int> label(half_edge_count(), -1);
  int f = 0;
  for (const auto& face : faces()) {
    for (int h : face) label[h] = f;
    ++f;
  }
  return label;
}

bool RibbonGraph::connected() const {
  if (vertex_count() == 0) return true;
  std::vector<std::vector<int>> halves(vertex_count());
  for (std::size_t h = 0; h < half_edge_count(); ++h) halves[vertex_of[h]].push_back(static_cast<int>(h));
  std::vector<bool> reached(vertex_count(), false);
  std::vector<int> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int h : halves[v]) {
      const int w = vertex_of[pair[h]];
      if (!reached[w]) {
        reached[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertex_count();
}

RibbonGraph build_carter(const LongDiagram& d, SurfaceOrientation orientation) {
  const std::size_t n = d.crossing_count();
  const std::size_t halves = 4 * n + 2;
  RibbonGraph r;
  r.vertex_kind.assign(n, RibbonGraph::VertexKind::Crossing);
  r.vertex_kind.push_back(RibbonGraph::VertexKind::Basepoint);
  r.vertex_of.assign(halves, -1);
  r.pair.assign(halves, -1);
  r.next_ccw.assign(halves, -1);
  add_crossing_rotations(d, orientation, r);
  const int bp_in = static_cast<int>(4 * n), bp_out = bp_in + 1;
  r.vertex_of[bp_in] = r.vertex_of[bp_out] = static_cast<int>(n);
  r.next_ccw[bp_in] = bp_out;
  r.next_ccw[bp_out] = bp_in;
  if (n == 0) {
    link(r, bp_out, bp_in);
  } else {
    link(r, out_half(d.size() - 1), bp_in);
    link(r, bp_out, in_half(0));
  }
  return r;
}

RibbonGraph build_open(const LongDiagram& d, SurfaceOrientation orientation) {
  const std::size_t n = d.crossing_count();
  const std::size_t halves = 4 * n + 2;
  RibbonGraph r;
  r.vertex_kind.assign(n, RibbonGraph::VertexKind::Crossing);
  r.vertex_kind.push_back(RibbonGraph::VertexKind::End);
  r.vertex_kind.push_back(RibbonGraph::VertexKind::End);
  r.vertex_of.assign(halves, -1);
  r.pair.assign(halves, -1);
  r.next_ccw.assign(halves, -1);
  add_crossing_rotations(d, orientation, r);
  const int start = static_cast<int>(4 * n), finish = start + 1;
  r.vertex_of[start] = static_cast<int>(n);
  r.vertex_of[finish] = static_cast<int>(n + 1);
  r.next_ccw[start] = start;
  r.next_ccw[finish] = finish;
  if (n == 0) {
    link(r, start, finish);
  } else {
    link(r, start, in_half(0));
    link(r, out_half(d.size() - 1), finish);
  }
  return r;
}

int genus(const RibbonGraph& r) {
  if (!r.connected()) throw Error(ErrorKind::Disconnected, "ribbon graph is not connected");
  const auto v = static_cast<long>(r.vertex_count());
  const auto e = static_cast<long>(r.edge_count());
  const auto f = static_cast<long>(r.faces().size());
  return static_cast<int>((2 - v + e - f) / 2);
}

int two_boundary_genus(const LongDiagram& d) {
  const RibbonGraph open = build_open(d);
  const std::vector<int> face = open.face_of();
  const int start = static_cast<int>(4 * d.crossing_count());
  if (face[start] == face[start + 1]) return genus(build_carter(d));
  return genus(open);
}

// ---------------------------------------------------------------------------
// Intersection numbers

LeftPushRules LeftPushRules::standard() {
  LeftPushRules r;
  r.straight_pos = {Half::Out, -1};
  r.straight_neg = {Half::In, +1};
  r.corner_pos = {true, {Half::In, +1}, {Half::Out, -1}};
  r.corner_neg = {false, {}, {}};
  return r;
}

namespace {

struct CrossingGeometry {
  std::size_t first = 0;
  std::size_t second = 0;
  int det = 0;  // det(tangent at first passage, tangent at second passage)
};

std::vector<CrossingGeometry> geometry(const LongDiagram& d) {
  std::vector<CrossingGeometry> g(d.crossing_count());
  for (CrossingId id = 1; id <= static_cast<CrossingId>(d.crossing_count()); ++id) {
    auto& c = g[id - 1];
    c.first = d.first_position(id);
    c.second = d.second_position(id);
    c.det = d.at(c.first).role == Role::Over ? d.sign(id) : -d.sign(id);
  }
  return g;
}

// Does alpha_i use half-edge `half` of passage `pos`?
bool alpha_uses(const CrossingGeometry& ci, std::size_t pos, Half half) {
  if (pos > ci.first && pos < ci.second) return true;
  if (pos == ci.first) return half == Half::Out;
  if (pos == ci.second) return half == Half::In;
  return false;
}

// One row of the kernel: v_i and M_i* for crossing index i.
void kernel_row(const LongDiagram& d, const std::vector<CrossingGeometry>& geo, const LeftPushRules& rules,
                std::size_t i, std::vector<std::int64_t>& prefix, std::int64_t& v_out, std::int64_t* m_row) {
  const CrossingGeometry& ci = geo[i];
  const std::size_t len = d.size();
  prefix.assign(len + 1, 0);
  for (std::size_t s = 0; s < len; ++s) {
    const std::size_t other = d.partner(s);
    const CrossingGeometry& ck = geo[d.at(s).id - 1];
    const int det = s == ck.first ? ck.det : -ck.det;
    const PushEvent& ev = det > 0 ? rules.straight_pos : rules.straight_neg;
    prefix[s + 1] = prefix[s] + (alpha_uses(ci, other, ev.half) ? ev.contribution : 0);
  }
  v_out = prefix[len];
  for (std::size_t j = 0; j < geo.size(); ++j) {
    const CrossingGeometry& cj = geo[j];
    std::int64_t value = prefix[cj.second] - prefix[cj.first + 1];
    const LeftPushRules::Corner& corner = cj.det > 0 ? rules.corner_pos : rules.corner_neg;
    if (corner.active) {
      if (alpha_uses(ci, cj.first, corner.at_first.half)) value += corner.at_first.contribution;
      if (alpha_uses(ci, cj.second, corner.at_second.half)) value += corner.at_second.contribution;
    }
    m_row[j] = value;
  }
}

HomologyData run_kernel(const LongDiagram& d, const HomologyOptions& options, bool parallel) {
  const std::size_t n = d.crossing_count();
  const std::vector<CrossingGeometry> geo = geometry(d);
  HomologyData h;
  h.v.assign(n, 0);
  h.m.assign(n * n, 0);
  const auto rows = static_cast<long>(n);
#pragma omp parallel if (parallel && n >= 32)
  {
    std::vector<std::int64_t> prefix;
#pragma omp for schedule(static)
    for (long i = 0; i < rows; ++i)
      kernel_row(d, geo, options.rules, static_cast<std::size_t>(i), prefix, h.v[i], &h.m[i * n]);
  }
  if (options.orientation == SurfaceOrientation::Standard) {
    for (auto& x : h.v) x = -x;
    for (auto& x : h.m) x = -x;
  }
  h.genus = genus(build_carter(d, options.orientation));
  return h;
}

struct Turn {
  int in = 0;   // half-edge the walk arrives through
  int out = 0;  // half-edge the walk leaves through
};

std::vector<Turn> alpha_walk(const LongDiagram& d, CrossingId id) {
  std::vector<Turn> walk;
  const std::size_t p = d.first_position(id), q = d.second_position(id);
  for (std::size_t s = p + 1; s < q; ++s) walk.push_back({in_half(s), out_half(s)});
  walk.push_back({in_half(q), out_half(p)});
  return walk;
}

std::vector<Turn> gamma_walk(const LongDiagram& d) {
  std::vector<Turn> walk;
  for (std::size_t s = 0; s < d.size(); ++s) walk.push_back({in_half(s), out_half(s)});
  const int bp = static_cast<int>(4 * d.crossing_count());
  walk.push_back({bp, bp + 1});
  return walk;
}

// x . y, with y pushed to its left: the push-off of a turn (in -> out)
// sweeps clockwise across the half-edges strictly between `out` and `in`
// in counterclockwise order. A walk leaving through such a half-edge meets
// it with sign -1, a walk arriving through it with sign +1.
std::int64_t walk_intersection(const RibbonGraph& r, const std::vector<Turn>& x, const std::vector<Turn>& y) {
  std::vector<int> usage(r.half_edge_count(), 0);
  for (const Turn& t : x) {
    usage[t.in] = +1;
    usage[t.out] = -1;
  }
  std::int64_t total = 0;
  for (const Turn& t : y)
    for (int h = r.next_ccw[t.out]; h != t.in; h = r.next_ccw[h]) total += usage[h];
  return total;
}

}  // namespace

HomologyData homology_data(const LongDiagram& d, const HomologyOptions& options) {
  return run_kernel(d, options, true);
}

HomologyData homology_data_serial(const LongDiagram& d, const HomologyOptions& options) {
  return run_kernel(d, options, false);
}

HomologyData homology_data_reference(const LongDiagram& d, SurfaceOrientation orientation) {
  const std::size_t n = d.crossing_count();
  const RibbonGraph r = build_carter(d, orientation);
  std::vector<std::vector<Turn>> alphas;
  for (CrossingId id = 1; id <= static_cast<CrossingId>(n); ++id) alphas.push_back(alpha_walk(d, id));
  const std::vector<Turn> gamma = gamma_walk(d);
  HomologyData h;
  h.v.resize(n);
  h.m.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    h.v[i] = walk_intersection(r, alphas[i], gamma);
    for (std::size_t j = 0; j < n; ++j) h.m[i * n + j] = walk_intersection(r, alphas[i], alphas[j]);
  }
  h.genus = genus(r);
  return h;
}

std::pair<std::int64_t, std::int64_t> derived_pairings(const HomologyData& h, std::size_t i, std::size_t j) {
  if (i >= h.size() || j >= h.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "pairing (" + std::to_string(i) + ", " + std::to_string(j) + ") of " + std::to_string(h.size()));
  const std::int64_t mij = h.pairing(i, j);
  return {h.v[i] - mij, mij + h.v[j] - h.v[i]};
}

}  // namespace vknot
