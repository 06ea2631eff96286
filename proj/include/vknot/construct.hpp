#pragma once

#include <string>
#include <string_view>

#include "vknot/diagram.hpp"
#include "vknot/invariants.hpp"
#include "vknot/laurent.hpp"
#include "vknot/tangle.hpp"

namespace vknot {

enum class Family : std::uint8_t { K, Kp, Kpp, J };

Family parse_family(std::string_view name);
const char* family_name(Family f);

/// K_n = J_1^n; Kp_n = T_1 + K_n; Kpp_n = Kpp_1 . J_2^(n-1); J_n the
/// 2n-crossing spiral on the annulus. Throws BadParameter unless n >= 1.
LongDiagram family(Family name, int n);

/// The closed-form invariant values stated for family(name, n), checked
/// against a fresh computation.
IdentityReport family_checks(Family name, int n);

/// The four basic tangles. Throws BadParameter unless k is in 1..4.
TangleDiagram tangle_T(int k);

/// Diagram with W_0 = W_1 = f and two-boundary genus 0, built from copies
/// of J_k and their flips and mirrors. Throws ConditionViolated if f(1) != 0.
LongDiagram realize_writhe(const LaurentPoly& f);

struct Target {
  PolyFamily family = PolyFamily::F;
  int a = 0;
  int b = 0;

  friend bool operator==(const Target&, const Target&) = default;
};

/// "F00", "G10", "H01", ... Throws BadParameter.
Target parse_target(std::string_view text);
std::string to_string(const Target& t);

/// Diagram whose `target` polynomial is f, with Carter genus at most 1.
/// Throws ConditionViolated naming the first failed admissibility condition.
/// H targets go through swap_FH, whose size is exponential in the number of
/// J pieces; `max_crossings` caps it as in simply_linked_from.
LongDiagram realize(const Target& target, const LaurentPoly& f, std::size_t max_crossings = 0);

struct GenusBounds {
  int sg1_lower = 0;
  int sg1_upper = 0;
  int sg2_lower = 0;
  int sg2_upper = 0;

  friend bool operator==(const GenusBounds&, const GenusBounds&) = default;
};

GenusBounds genus_bounds(const LongDiagram& d);

/// Bounds the families are known to attain for every n.
GenusBounds expected_genus_bounds(Family name);

/// Position in the chain K1(0) < K2(0) < K1(1) < K2(1) < ...; index 2g is
/// K1(g) and 2g+1 is K2(g).
struct Stratum {
  int lower = 0;
  int upper = 0;
  /// "K1(0)", "K2(0)\K1(0)", or "undetermined [K2(0), K1(1)]".
  std::string label;

  bool exact() const { return lower == upper; }
};

Stratum classify_filtration(const LongDiagram& d);

}  // namespace vknot
