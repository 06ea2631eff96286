#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "vknot/construct.hpp"
#include "vknot/error.hpp"
#include "vknot/fuzz.hpp"
#include "vknot/json.hpp"

using namespace vknot;

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 42;
  std::uint64_t iters = 1000;
  int max_crossings = 12;
};

const char* const kLetters[] = {"F", "G", "H"};
constexpr PolyFamily kFamilies[] = {PolyFamily::F, PolyFamily::G, PolyFamily::H};

// Failure the user asked about (an identity or a verification), not a
// malformed input.
struct CheckFailed {};

std::vector<std::string> lines_of(std::istream& in) {
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  return out;
}

bool looks_like_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && s[p] == '{';
}

LongDiagram read_diagram(const std::string& s) {
  if (looks_like_json(s)) return diagram_from_json(Json::parse(s));
  return parse_gauss_code(s);
}

// One-line tangles may separate the strands with ';' or '|'.
TangleDiagram read_tangle(const std::string& s) {
  if (looks_like_json(s)) return tangle_from_json(Json::parse(s));
  std::string text = s;
  std::replace(text.begin(), text.end(), ';', '\n');
  std::replace(text.begin(), text.end(), '|', '\n');
  return parse_tangle(text);
}

std::string code(const LongDiagram& d) { return d.empty() ? "(empty)" : d.to_string(); }

std::string bundle_text(const InvariantBundle& k) {
  std::string out = "W0   " + k.W[0].to_string() + "\nW1   " + k.W[1].to_string() + "\n";
  for (int x = 0; x < 3; ++x)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        out += std::string(kLetters[x]) + std::to_string(a) + std::to_string(b) + "  " +
               k.get(kFamilies[x], a, b).to_string() + "\n";
  return out + "omega " + std::to_string(k.omega[0]) + " " + std::to_string(k.omega[1]) + "\n";
}

std::string report_text(const IdentityReport& r) {
  const auto failures = r.failures();
  std::string out = std::to_string(r.checks.size()) + " checks, ";
  if (failures.empty()) return out + "all passed\n";
  out += std::to_string(failures.size()) + " failed\n";
  for (const IdentityCheck& c : failures)
    out += "  " + c.name + ": " + c.lhs.to_string() + " vs " + c.rhs.to_string() + " (diff " +
           (c.lhs - c.rhs).to_string() + ")\n";
  return out;
}

std::string bounds_text(const GenusBounds& g) {
  return "sg1 [" + std::to_string(g.sg1_lower) + "," + std::to_string(g.sg1_upper) + "]  sg2 [" +
         std::to_string(g.sg2_lower) + "," + std::to_string(g.sg2_upper) + "]\n";
}

// Runs `one` on every input; a positional argument yields a single object,
// stdin batch mode wraps the results in {"results": [...]}.
template <class F>
void each_input(const Globals& g, const std::vector<std::string>& args, F one) {
  const bool batch = args.empty();
  const std::vector<std::string> inputs = batch ? lines_of(std::cin) : args;
  Json results = Json::array();
  for (const std::string& s : inputs) {
    Json j;
    std::string text;
    one(s, j, text);
    if (g.json)
      results.push_back(std::move(j));
    else
      std::cout << text << (batch ? "\n" : "");
  }
  if (g.json) std::cout << (batch ? Json{{"results", std::move(results)}} : results.at(0)).dump(2) << "\n";
}

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int fail(const Globals& g, const std::string& name, const std::string& detail) {
  std::cerr << "error: " << name << ": " << detail << "\n";
  if (g.json) std::cout << Json{{"error", name}, {"detail", detail}}.dump(2) << "\n";
  return 1;
}

std::string strip_kind(const std::string& what, const std::string& name) {
  return what.rfind(name + ": ", 0) == 0 ? what.substr(name.size() + 2) : what;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Writhe and intersection polynomials of long virtual knots"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit a single JSON object");
  app.add_option("--seed", g.seed, "Fuzz seed");
  app.add_option("--iters", g.iters, "Fuzz iterations")->check(CLI::PositiveNumber);
  app.add_option("--max-crossings", g.max_crossings, "Largest random diagram")->check(CLI::NonNegativeNumber);

  std::vector<std::string> codes;
  std::function<void()> action;

  auto* inv = app.add_subcommand("invariants", "W_a and the twelve intersection polynomials");
  inv->add_option("code", codes, "Gauss code or JSON; stdin lines when absent");
  inv->callback([&] {
    action = [&] {
      each_input(g, codes, [](const std::string& s, Json& j, std::string& text) {
        const InvariantBundle k = intersection_polys(read_diagram(s));
        j = bundle_to_json(k);
        text = bundle_text(k);
      });
    };
  });

  auto* surf = app.add_subcommand("surface", "Carter genus, indices v_i and pairings M_ij");
  surf->add_option("code", codes, "Gauss code or JSON; stdin lines when absent");
  surf->callback([&] {
    action = [&] {
      each_input(g, codes, [](const std::string& s, Json& j, std::string& text) {
        const LongDiagram d = read_diagram(s);
        j = surface_to_json(d, homology_data(d));
        text = "genus " + j["genus"].dump() + "\ng2_upper " + j["g2_upper"].dump() + "\nv " + j["v"].dump() +
               "\nM " + j["M"].dump() + "\n";
      });
    };
  });

  auto* gen = app.add_subcommand("genus", "Bounds on the two supporting genera");
  gen->add_option("code", codes, "Gauss code or JSON; stdin lines when absent");
  gen->callback([&] {
    action = [&] {
      each_input(g, codes, [](const std::string& s, Json& j, std::string& text) {
        const GenusBounds b = genus_bounds(read_diagram(s));
        j = bounds_to_json(b);
        text = bounds_text(b);
      });
    };
  });

  auto* cls = app.add_subcommand("classify", "Place a diagram in the genus filtration");
  cls->add_option("code", codes, "Gauss code or JSON; stdin lines when absent");
  cls->callback([&] {
    action = [&] {
      each_input(g, codes, [](const std::string& s, Json& j, std::string& text) {
        const LongDiagram d = read_diagram(s);
        const Stratum st = classify_filtration(d);
        j = stratum_to_json(st);
        j["bounds"] = bounds_to_json(genus_bounds(d));
        text = st.label + "\n";
      });
    };
  });

  auto* chk = app.add_subcommand("check", "Evaluate every applicable identity");
  chk->add_option("code", codes, "One diagram, or two for the product rules")->required()->expected(1, 2);
  chk->callback([&] {
    action = [&] {
      const LongDiagram d = read_diagram(codes[0]);
      const auto e = codes.size() > 1 ? std::optional(read_diagram(codes[1])) : std::nullopt;
      const IdentityReport r = check_identities(d, e);
      emit(g, report_to_json(r), report_text(r));
      if (!r.all_passed()) throw CheckFailed{};
    };
  });

  bool mutant = false, serial = false;
  auto* fz = app.add_subcommand("fuzz", "Random diagrams, tangles and move sequences against the identities");
  fz->add_flag("--mutant", mutant, "Use a corrupted local rule table (the run must fail)");
  fz->add_flag("--serial", serial, "Run on one thread");
  fz->callback([&] {
    action = [&] {
      FuzzConfig cfg;
      cfg.iterations = g.iters;
      cfg.seed = g.seed;
      cfg.max_crossings = g.max_crossings;
      if (mutant) cfg.options.rules = mutant_rules();
      const FuzzReport r = serial ? fuzz_serial(cfg) : fuzz(cfg);
      emit(g, fuzz_to_json(r), r.to_string());
      if (!r.passed()) throw CheckFailed{};
    };
  });

  auto* tg = app.add_subcommand("tangle", "Two-string tangles; strands separated by newline, ';' or '|'");
  tg->require_subcommand(1);
  std::string tangle_text, knot_text;
  auto* close_r = tg->add_subcommand("close-r", "Right closure R(E) = A.B");
  auto* close_l = tg->add_subcommand("close-l", "Left closure L(E) = B.A");
  auto* tinv = tg->add_subcommand("invariants", "U, V and lambda");
  for (auto* sub : {close_r, close_l, tinv}) sub->add_option("tangle", tangle_text)->required();
  close_r->callback([&] {
    action = [&] {
      const LongDiagram d = right_close(read_tangle(tangle_text));
      emit(g, diagram_to_json(d), code(d) + "\n");
    };
  });
  close_l->callback([&] {
    action = [&] {
      const LongDiagram d = left_close(read_tangle(tangle_text));
      emit(g, diagram_to_json(d), code(d) + "\n");
    };
  });
  tinv->callback([&] {
    action = [&] {
      const Json j = tangle_invariants_to_json(tangle_invariants(read_tangle(tangle_text)));
      std::string text;
      for (const auto& [key, value] : j.items())
        text += key + " " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
      emit(g, j, text);
    };
  });
  auto* tsum = tg->add_subcommand("sum", "E + D: strand A, then D, then strand B");
  tsum->add_option("tangle", tangle_text)->required();
  tsum->add_option("knot", knot_text)->required();
  tsum->callback([&] {
    action = [&] {
      const TangleDiagram e = read_tangle(tangle_text);
      const LongDiagram d = read_diagram(knot_text);
      const LongDiagram s = tangle_sum(e, d);
      const IdentityReport r = check_tangle_identities(e, d);
      Json j = diagram_to_json(s);
      j["identities"] = report_to_json(r);
      emit(g, j, code(s) + "\n" + report_text(r));
      if (!r.all_passed()) throw CheckFailed{};
    };
  });
  auto* tsl = tg->add_subcommand("simply-linked", "Simply linked tangle whose right closure is the knot");
  tsl->add_option("knot", knot_text)->required();
  tsl->callback([&] {
    action = [&] {
      const TangleDiagram e = simply_linked_from(read_diagram(knot_text));
      const IdentityReport r = check_left_closure(e);
      Json j = tangle_to_json(e);
      j["identities"] = report_to_json(r);
      emit(g, j, e.to_string() + "\n" + report_text(r));
      if (!r.all_passed()) throw CheckFailed{};
    };
  });

  std::string family_text;
  int family_n = 1;
  auto* fam = app.add_subcommand("family", "Witness families K, Kp, Kpp, J");
  fam->add_option("name", family_text, "K, Kp, Kpp or J")->required();
  fam->add_option("n", family_n, "Index, at least 1")->required();
  fam->callback([&] {
    action = [&] {
      const Family f = parse_family(family_text);
      const LongDiagram d = family(f, family_n);
      const IdentityReport r = family_checks(f, family_n);
      const GenusBounds b = genus_bounds(d);
      const bool ok = r.all_passed() && b == expected_genus_bounds(f);
      Json j{{"family", family_name(f)}, {"n", family_n}, {"code", code(d)}, {"diagram", diagram_to_json(d)}};
      j["values"] = report_to_json(r);
      j["bounds"] = bounds_to_json(b);
      j["expected_bounds"] = bounds_to_json(expected_genus_bounds(f));
      j["verification"] = ok ? "ok" : "failed";
      emit(g, j,
           code(d) + "\n" + report_text(r) + bounds_text(b) + "verification: " + (ok ? "ok" : "failed") + "\n");
      if (!ok) throw CheckFailed{};
    };
  });

  std::string target_text, poly_text;
  auto* rz = app.add_subcommand("realize", "Diagram whose target polynomial is f (use -- before a leading minus)");
  rz->add_option("target", target_text, "F00, G10, H01, ...")->required();
  rz->add_option("f", poly_text, "Laurent polynomial in t")->required();
  std::size_t realize_cap = 200000;
  rz->add_option("--cap", realize_cap, "crossing cap for the H-target swap, 0 for none (default 200000)");
  rz->callback([&] {
    action = [&] {
      const Target t = parse_target(target_text);
      const LaurentPoly f = LaurentPoly::parse(poly_text);
      const LongDiagram d = realize(t, f, realize_cap);
      const LaurentPoly got = intersection_polys(d).get(t.family, t.a, t.b);
      const int cg = genus(build_carter(d));
      const bool ok = got == f && cg <= 1;
      Json j{{"target", to_string(t)},   {"f", f.to_string()},       {"code", code(d)},
             {"crossings", d.crossing_count()}, {"carter_genus", cg}, {"recomputed", got.to_string()},
             {"verification", ok ? "ok" : "failed"}};
      emit(g, j,
           code(d) + "\n" + std::to_string(d.crossing_count()) + " crossings, Carter genus " + std::to_string(cg) +
               ", " + to_string(t) + " = " + got.to_string() + "\nverification: " + (ok ? "ok" : "failed") + "\n");
      if (!ok) throw CheckFailed{};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }

  try {
    action();
  } catch (const CheckFailed&) {
    return 1;
  } catch (const Error& e) {
    return fail(g, e.name(), strip_kind(e.what(), e.name()));
  } catch (const PolyParseError& e) {
    return fail(g, "PolyParseError", e.what());
  } catch (const Json::exception& e) {
    return fail(g, "MalformedJson", e.what());
  } catch (const std::exception& e) {
    return fail(g, "Error", e.what());
  }
  return 0;
}
