#include "vknot/fuzz.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "vknot/invariants.hpp"

namespace vknot {

LongDiagram random_diagram(std::mt19937_64& rng, int crossings) {
  std::vector<Passage> ps;
  for (int id = 1; id <= crossings; ++id) {
    ps.push_back({id, Role::Over});
    ps.push_back({id, Role::Under});
  }
  std::shuffle(ps.begin(), ps.end(), rng);
  std::vector<int> signs(static_cast<std::size_t>(std::max(crossings, 0)));
  for (auto& s : signs) s = rng() % 2 ? 1 : -1;
  return canonical(LongDiagram(std::move(ps), std::move(signs)));
}

TangleDiagram random_tangle(std::mt19937_64& rng, int crossings) {
  const LongDiagram d = random_diagram(rng, crossings);
  return TangleDiagram(d, rng() % (d.size() + 1));
}

std::vector<MoveSite> random_move_walk(std::mt19937_64& rng, LongDiagram& d, int moves) {
  constexpr std::array kinds{MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert, MoveKind::R2Delete,
                             MoveKind::R3};
  std::vector<MoveSite> applied;
  for (int step = 0; step < moves; ++step) {
    const std::vector<MoveSite> sites = enumerate_rmoves(d);
    std::array<std::vector<const MoveSite*>, kinds.size()> by_kind;
    for (const MoveSite& s : sites)
      by_kind[static_cast<std::size_t>(std::find(kinds.begin(), kinds.end(), s.kind) - kinds.begin())].push_back(&s);
    std::vector<std::size_t> present;
    for (std::size_t k = 0; k < kinds.size(); ++k)
      if (!by_kind[k].empty()) present.push_back(k);
    if (present.empty()) break;
    const auto& pool = by_kind[present[rng() % present.size()]];
    const MoveSite site = *pool[rng() % pool.size()];
    d = apply_rmove(d, site);
    applied.push_back(site);
  }
  return applied;
}

namespace {

struct IterationResult {
  FuzzReport counts;
  std::optional<Counterexample> failure;
};

std::string code(const LongDiagram& d) { return d.empty() ? "(empty)" : d.to_string(); }

bool take(IterationResult& out, std::uint64_t iteration, const std::string& stage, const std::string& input,
          const IdentityReport& r) {
  out.counts.checks += r.checks.size();
  for (const IdentityCheck& c : r.checks)
    if (!c.passed()) {
      out.failure = Counterexample{iteration, stage, input, c.name, c.lhs.to_string(), c.rhs.to_string()};
      return false;
    }
  return true;
}

// Every fixed polynomial of the bundle, for move invariance.
IdentityReport compare_bundles(const InvariantBundle& before, const InvariantBundle& after) {
  IdentityReport r;
  for (int a = 0; a < 2; ++a) r.checks.push_back({"W" + std::to_string(a) + " after moves", after.W[a], before.W[a]});
  for (auto x : {PolyFamily::F, PolyFamily::G, PolyFamily::H})
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        r.checks.push_back({std::string(1, family_letter(x)) + std::to_string(a) + std::to_string(b) + " after moves",
                            after.get(x, a, b), before.get(x, a, b)});
  return r;
}

IterationResult run_iteration(const FuzzConfig& cfg, std::uint64_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
  std::mt19937_64 rng(seq);
  const auto size = [&](int cap) { return static_cast<int>(rng() % static_cast<std::uint64_t>(cap + 1)); };
  const HomologyOptions& opt = cfg.options;
  IterationResult out;

  const LongDiagram d = random_diagram(rng, size(cfg.max_crossings));
  ++out.counts.diagrams;
  if (two_boundary_genus(d) == 0) ++out.counts.annulus;
  if (!take(out, i, "identities", code(d), check_identities(d, std::nullopt, opt))) return out;

  LongDiagram moved = d;
  const auto walk = random_move_walk(rng, moved, 1 + size(cfg.max_moves - 1));
  ++out.counts.move_walks;
  out.counts.moves += walk.size();
  std::string trail = code(d);
  for (const MoveSite& s : walk) trail += "\n" + describe(s);
  trail += "\n" + code(moved);
  if (!take(out, i, "moves", trail, compare_bundles(intersection_polys(d, opt), intersection_polys(moved, opt))))
    return out;

  if (cfg.pair_every > 0 && i % static_cast<std::uint64_t>(cfg.pair_every) == 0) {
    const LongDiagram e = random_diagram(rng, size(cfg.max_crossings));
    ++out.counts.pairs;
    if (!take(out, i, "pair", code(d) + "\n" + code(e), check_identities(d, e, opt))) return out;
  }
  if (cfg.tangle_every > 0 && i % static_cast<std::uint64_t>(cfg.tangle_every) == 0) {
    const TangleDiagram t = random_tangle(rng, size(cfg.max_crossings));
    const LongDiagram k = random_diagram(rng, size(cfg.max_crossings / 2));
    ++out.counts.tangle_pairs;
    if (!take(out, i, "tangle", t.to_string() + "\n" + code(k), check_tangle_identities(t, k, opt))) return out;
  }
  if (cfg.simply_linked_every > 0 && i % static_cast<std::uint64_t>(cfg.simply_linked_every) == 0) {
    const LongDiagram k = random_diagram(rng, size(std::min(cfg.max_crossings, cfg.simply_linked_max_crossings)));
    const TangleDiagram t = simply_linked_from(k);
    ++out.counts.simply_linked;
    if (!take(out, i, "left closure", code(k) + "\n" + t.to_string(), check_left_closure(t, opt))) return out;
    ++out.counts.swaps;
    if (!take(out, i, "swap", code(k), check_swap_FH(k, opt))) return out;
  }
  return out;
}

void merge(FuzzReport& into, const IterationResult& r) {
  const FuzzReport& c = r.counts;
  into.diagrams += c.diagrams;
  into.pairs += c.pairs;
  into.move_walks += c.move_walks;
  into.moves += c.moves;
  into.tangle_pairs += c.tangle_pairs;
  into.simply_linked += c.simply_linked;
  into.swaps += c.swaps;
  into.annulus += c.annulus;
  into.checks += c.checks;
  if (r.failure && (!into.failure || r.failure->iteration < into.failure->iteration)) into.failure = r.failure;
}

}  // namespace

FuzzReport fuzz(const FuzzConfig& config) {
  FuzzReport report;
  report.iterations = config.iterations;
  const auto n = static_cast<std::int64_t>(config.iterations);
#pragma omp parallel
  {
    FuzzReport local;
#pragma omp for schedule(dynamic, 4) nowait
    for (std::int64_t i = 0; i < n; ++i) merge(local, run_iteration(config, static_cast<std::uint64_t>(i)));
#pragma omp critical(vknot_fuzz_merge)
    merge(report, IterationResult{local, local.failure});
  }
  return report;
}

FuzzReport fuzz_serial(const FuzzConfig& config) {
  FuzzReport report;
  report.iterations = config.iterations;
  for (std::uint64_t i = 0; i < config.iterations; ++i) merge(report, run_iteration(config, i));
  return report;
}

LeftPushRules mutant_rules() {
  LeftPushRules r = LeftPushRules::standard();
  r.straight_pos.contribution = -r.straight_pos.contribution;
  return r;
}

std::string FuzzReport::to_string() const {
  std::ostringstream out;
  out << "iterations " << iterations << "\n"
      << "diagrams " << diagrams << ", pairs " << pairs << ", move walks " << move_walks << " (" << moves
      << " moves)\n"
      << "tangle pairs " << tangle_pairs << ", simply linked " << simply_linked << ", swaps " << swaps
      << ", annulus cases " << annulus << "\n"
      << "checks " << checks << "\n";
  if (!failure) {
    out << "all passed\n";
  } else {
    out << "counterexample at iteration " << failure->iteration << " (" << failure->stage << ")\n"
        << failure->input << "\n"
        << "check: " << failure->check << "\n"
        << "  lhs: " << failure->lhs << "\n"
        << "  rhs: " << failure->rhs << "\n";
  }
  return out.str();
}

}  // namespace vknot
