#include "vknot/json.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vknot/error.hpp"

namespace vknot {

namespace {

Json passages_json(std::span<const Passage> ps, const LongDiagram& d, std::set<CrossingId>& seen) {
  Json out = Json::array();
  for (const Passage& p : ps) {
    Json entry = Json::array({p.role == Role::Over ? "O" : "U", p.id});
    if (seen.insert(p.id).second) entry.push_back(d.sign(p.id));
    out.push_back(std::move(entry));
  }
  return out;
}

using Tokens = std::vector<std::pair<char, std::int64_t>>;

// Signs may sit on either occurrence; both routes end in the text parser.
Tokens collect(const Json& arr, std::map<std::int64_t, int>& signs) {
  if (!arr.is_array()) throw Error(ErrorKind::MalformedJson, "passages must be an array");
  Tokens tokens;
  for (const Json& e : arr) {
    const bool ok = e.is_array() && (e.size() == 2 || e.size() == 3) && e[0].is_string() &&
                    (e[0] == "O" || e[0] == "U") && e[1].is_number_integer() &&
                    (e.size() == 2 || (e[2].is_number_integer() && (e[2] == 1 || e[2] == -1)));
    if (!ok) throw Error(ErrorKind::MalformedJson, "bad passage " + e.dump());
    const auto id = e[1].get<std::int64_t>();
    if (e.size() == 3) {
      const int s = e[2].get<int>();
      const auto [it, fresh] = signs.emplace(id, s);
      if (!fresh && it->second != s) throw Error(ErrorKind::SignMismatch, "crossing " + std::to_string(id));
    }
    tokens.emplace_back(e[0].get<std::string>()[0], id);
  }
  return tokens;
}

std::string render(const Tokens& tokens, const Tokens& all, const std::map<std::int64_t, int>& signs) {
  std::string out;
  for (const auto& [role, id] : tokens) {
    const auto it = signs.find(id);
    // A lone passage is left to the parser, which reports the label count.
    const bool lone = std::count_if(all.begin(), all.end(), [&](const auto& t) { return t.second == id; }) == 1;
    if (it == signs.end() && lone) {
      if (!out.empty()) out += ' ';
      out += role + std::to_string(id) + '+';
      continue;
    }
    if (it == signs.end()) throw Error(ErrorKind::MalformedJson, "no sign given for crossing " + std::to_string(id));
    if (!out.empty()) out += ' ';
    out += role + std::to_string(id) + (it->second > 0 ? '+' : '-');
  }
  return out;
}

std::string label(char x, int a, int b) { return std::string(1, x) + std::to_string(a) + std::to_string(b); }

}  // namespace

Json diagram_to_json(const LongDiagram& d) {
  std::set<CrossingId> seen;
  return Json{{"passages", passages_json(d.passages(), d, seen)}};
}

LongDiagram diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("passages")) throw Error(ErrorKind::MalformedJson, "expected {\"passages\": [...]}");
  std::map<std::int64_t, int> signs;
  const Tokens t = collect(j["passages"], signs);
  return parse_gauss_code(render(t, t, signs));
}

Json tangle_to_json(const TangleDiagram& e) {
  std::set<CrossingId> seen;
  Json out;
  out["A"] = passages_json(e.strand_a(), e.joined(), seen);
  out["B"] = passages_json(e.strand_b(), e.joined(), seen);
  return out;
}

TangleDiagram tangle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B"))
    throw Error(ErrorKind::MalformedJson, "expected {\"A\": [...], \"B\": [...]}");
  std::map<std::int64_t, int> signs;
  const Tokens a = collect(j["A"], signs);
  const Tokens b = collect(j["B"], signs);
  Tokens all = a;
  all.insert(all.end(), b.begin(), b.end());
  return parse_tangle("A: " + render(a, all, signs) + "\nB: " + render(b, all, signs));
}

Json bundle_to_json(const InvariantBundle& k) {
  Json out;
  out["W0"] = k.W[0].to_string();
  out["W1"] = k.W[1].to_string();
  for (char x : {'F', 'G', 'H'}) {
    const PolyFamily f = x == 'F' ? PolyFamily::F : x == 'G' ? PolyFamily::G : PolyFamily::H;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) out[label(x, a, b)] = k.get(f, a, b).to_string();
  }
  out["omega"] = {k.omega[0], k.omega[1]};
  return out;
}

Json surface_to_json(const LongDiagram& d, const HomologyData& h) {
  Json out;
  out["genus"] = genus(build_carter(d));
  out["g2_upper"] = two_boundary_genus(d);
  out["v"] = h.v;
  Json m = Json::array();
  const auto n = static_cast<std::ptrdiff_t>(h.size());
  for (std::ptrdiff_t i = 0; i < n; ++i)
    m.push_back(std::vector<std::int64_t>(h.m.begin() + i * n, h.m.begin() + (i + 1) * n));
  out["M"] = std::move(m);
  return out;
}

Json report_to_json(const IdentityReport& r) {
  Json failures = Json::array();
  for (const IdentityCheck& c : r.failures())
    failures.push_back({{"name", c.name}, {"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()},
                        {"diff", (c.lhs - c.rhs).to_string()}});
  return Json{{"checks", r.checks.size()}, {"passed", r.all_passed()}, {"failures", std::move(failures)}};
}

Json tangle_invariants_to_json(const TangleInvariants& ti) {
  Json out;
  for (int a = 0; a < 2; ++a) {
    const std::string s = std::to_string(a);
    out["U" + s + "A"] = ti.u_x[a][0].to_string();
    out["U" + s + "B"] = ti.u_x[a][1].to_string();
    out["U" + s] = ti.u[a].to_string();
    out["V" + s] = ti.v[a].to_string();
    out["lambda" + s] = ti.lambda[a];
  }
  return out;
}

Json bounds_to_json(const GenusBounds& g) {
  return Json{{"sg1", {g.sg1_lower, g.sg1_upper}}, {"sg2", {g.sg2_lower, g.sg2_upper}}};
}

Json stratum_to_json(const Stratum& s) {
  return Json{{"lower", s.lower}, {"upper", s.upper}, {"exact", s.exact()}, {"label", s.label}};
}

Json fuzz_to_json(const FuzzReport& r) {
  Json out{{"iterations", r.iterations},     {"diagrams", r.diagrams}, {"pairs", r.pairs},
           {"move_walks", r.move_walks},     {"moves", r.moves},       {"tangle_pairs", r.tangle_pairs},
           {"simply_linked", r.simply_linked}, {"swaps", r.swaps},     {"annulus", r.annulus},
           {"checks", r.checks},             {"passed", r.passed()}};
  if (r.failure) {
    const Counterexample& c = *r.failure;
    out["counterexample"] = {{"iteration", c.iteration}, {"stage", c.stage}, {"input", c.input},
                             {"check", c.check},         {"lhs", c.lhs},     {"rhs", c.rhs}};
  }
  return out;
}

}  // namespace vknot
