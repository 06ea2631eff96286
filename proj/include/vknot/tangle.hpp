#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "vknot/diagram.hpp"
#include "vknot/invariants.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

enum class Strand : std::uint8_t { A, B };

/// Virtual 2-string tangle diagram. Both strands are read in the direction
/// of the right closure, so R(E) traverses A and then B.
///
/// Stored as the joined passage sequence A.B plus the split point; ids are
/// canonical in that order.
class TangleDiagram {
 public:
  TangleDiagram() = default;
  TangleDiagram(LongDiagram joined, std::size_t split);
  TangleDiagram(std::vector<Passage> a, std::vector<Passage> b, std::vector<int> signs);

  std::span<const Passage> strand_a() const { return joined_.passages().first(split_); }
  std::span<const Passage> strand_b() const { return joined_.passages().subspan(split_); }
  std::size_t split() const { return split_; }
  std::size_t crossing_count() const { return joined_.crossing_count(); }
  int sign(CrossingId id) const { return joined_.sign(id); }
  const LongDiagram& joined() const { return joined_; }

  Strand strand_of(std::size_t pos) const { return pos < split_ ? Strand::A : Strand::B; }

  /// Two lines, "A: ..." and "B: ...".
  std::string to_string() const;

  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;

 private:
  LongDiagram joined_;
  std::size_t split_ = 0;
};

TangleDiagram parse_tangle(std::string_view text);

enum class TangleCrossingType : std::uint8_t { AA0, AA1, BB0, BB1, AB, BA };

const char* type_name(TangleCrossingType t);
TangleCrossingType classify_crossing(const TangleDiagram& e, CrossingId id);

LongDiagram right_close(const TangleDiagram& e);
LongDiagram left_close(const TangleDiagram& e);

struct TangleInvariants {
  /// u_x[a][X]: sum over J_a^X of eps (t^{v} - 1).
  std::array<std::array<LaurentPoly, 2>, 2> u_x;
  std::array<LaurentPoly, 2> u;
  /// Sum over J'_a of eps t^{v}.
  std::array<LaurentPoly, 2> v;
  std::array<int, 2> lambda{0, 0};

  friend bool operator==(const TangleInvariants&, const TangleInvariants&) = default;
};

TangleInvariants tangle_invariants(const TangleDiagram& e);

/// E + D: strand A, then D, then strand B.
LongDiagram tangle_sum(const TangleDiagram& e, const LongDiagram& d);

/// True when every crossing is between A and B.
bool is_simply_linked(const TangleDiagram& e);

/// Simply linked tangle with vanishing linking numbers whose right closure
/// is a diagram of the same knot as `d`. The first passage of the untwisted
/// diagram forms A; self crossings of B are then slid behind the split one
/// at a time, the nearest first. Each slide adds two crossings per passage
/// it crosses, so the size can grow exponentially in the number of self
/// crossings; a nonzero `max_crossings` raises SizeLimit once the working
/// diagram exceeds it.
TangleDiagram simply_linked_from(const LongDiagram& d, std::size_t max_crossings = 0);

/// Left closure of simply_linked_from(d); its F and H polynomials are those
/// of d with the roles of F and H exchanged and both indices complemented.
LongDiagram swap_FH(const LongDiagram& d, std::size_t max_crossings = 0);

/// Writhe split over tangle types and the four sum rules for E + D.
IdentityReport check_tangle_identities(const TangleDiagram& e, const LongDiagram& d,
                                       const HomologyOptions& options = {});

/// For simply linked e with vanishing linking numbers: F and H of the left
/// closure against H and F of the right closure. Reports the hypotheses as
/// checks too.
IdentityReport check_left_closure(const TangleDiagram& e, const HomologyOptions& options = {});

/// F_ab(swap_FH(d)) = H_{1-a,1-b}(d) and H_ab(swap_FH(d)) = F_{1-a,1-b}(d).
IdentityReport check_swap_FH(const LongDiagram& d, const HomologyOptions& options = {});

}  // namespace vknot
