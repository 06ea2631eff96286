#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/surface.hpp"
#include "vknot/tangle.hpp"

namespace vknot {

/// Uniformly shuffled passages with random signs, canonical ids.
LongDiagram random_diagram(std::mt19937_64& rng, int crossings);
TangleDiagram random_tangle(std::mt19937_64& rng, int crossings);

/// Up to `moves` random Reidemeister moves; the move kind is drawn first so
/// that R3 and deletions are not drowned out by the many R2 insertion sites.
/// Returns the sites applied, in order.
std::vector<MoveSite> random_move_walk(std::mt19937_64& rng, LongDiagram& d, int moves);

struct FuzzConfig {
  std::uint64_t iterations = 1000;
  int max_crossings = 12;
  std::uint64_t seed = 42;
  int max_moves = 20;
  /// Every k-th iteration also checks a pair, a tangle sum and the
  /// simply-linked construction.
  int pair_every = 5;
  int tangle_every = 5;
  int simply_linked_every = 10;
  /// The simply-linked construction can grow a diagram a lot, so its
  /// inputs are kept smaller.
  int simply_linked_max_crossings = 8;
  HomologyOptions options;
};

struct Counterexample {
  std::uint64_t iteration = 0;
  /// "identities", "pair", "moves", "tangle", "left closure" or "swap".
  std::string stage;
  /// Serialized inputs, one per line.
  std::string input;
  std::string check;
  std::string lhs;
  std::string rhs;
};

struct FuzzReport {
  std::uint64_t iterations = 0;
  std::uint64_t diagrams = 0;
  std::uint64_t pairs = 0;
  std::uint64_t move_walks = 0;
  std::uint64_t moves = 0;
  std::uint64_t tangle_pairs = 0;
  std::uint64_t simply_linked = 0;
  std::uint64_t swaps = 0;
  std::uint64_t annulus = 0;
  std::uint64_t checks = 0;
  std::optional<Counterexample> failure;

  bool passed() const { return !failure; }
  /// Multi-line summary ending in "all passed" or the counterexample.
  std::string to_string() const;
};

/// Iterations are independent (each seeds its own generator from the seed and
/// its index) and run in parallel; the reported failure is the one with the
/// smallest iteration index, so the report does not depend on scheduling.
FuzzReport fuzz(const FuzzConfig& config);
FuzzReport fuzz_serial(const FuzzConfig& config);

/// Rule table with the contribution of the positive straight crossing
/// negated; the fuzzer must catch it.
LeftPushRules mutant_rules();

}  // namespace vknot
