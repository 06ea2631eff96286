#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/laurent.hpp"
#include "vknot/surface.hpp"

namespace vknot {

enum class PolyFamily : std::uint8_t { F, G, H };

/// W_0, W_1 and the twelve intersection polynomials of one diagram.
struct InvariantBundle {
  using Square = std::array<std::array<LaurentPoly, 2>, 2>;

  std::array<LaurentPoly, 2> W;
  Square F;
  Square G;
  Square H;
  std::array<int, 2> omega{0, 0};

  const LaurentPoly& get(PolyFamily x, int a, int b) const;
  LaurentPoly& get(PolyFamily x, int a, int b);

  friend bool operator==(const InvariantBundle&, const InvariantBundle&) = default;
};

/// Equality of the fourteen polynomials; the writhes are not invariants.
bool same_polynomials(const InvariantBundle& x, const InvariantBundle& y);

char family_letter(PolyFamily x);

/// Sum over type-a crossings of eps_i (t^{v_i} - 1).
LaurentPoly writhe_poly(const LongDiagram& d, int a);

InvariantBundle intersection_polys(const LongDiagram& d, const HomologyOptions& options = {});
/// Bundle from precomputed homology data; `parallel` selects the OpenMP path.
InvariantBundle intersection_polys(const LongDiagram& d, const HomologyData& h, bool parallel = true);

struct ClosedInvariants {
  LaurentPoly W;
  LaurentPoly I;

  friend bool operator==(const ClosedInvariants&, const ClosedInvariants&) = default;
};

/// W and I of the closure, computed from the long diagram cut at `arc`.
ClosedInvariants closed_invariants(const ClosedDiagram& c, std::size_t arc = 0, const HomologyOptions& options = {});

struct IdentityCheck {
  std::string name;
  LaurentPoly lhs;
  LaurentPoly rhs;

  bool passed() const { return lhs == rhs; }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
  std::vector<IdentityCheck> failures() const;
};

/// Every identity applicable to `d` (and to the pair when `e` is given).
/// Genus-conditional laws are included only when the computed upper bound
/// certifies their hypothesis.
IdentityReport check_identities(const LongDiagram& d, const std::optional<LongDiagram>& e = std::nullopt,
                                const HomologyOptions& options = {});

}  // namespace vknot
