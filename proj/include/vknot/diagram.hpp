#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vknot {

enum class Role : std::uint8_t { Over, Under };

constexpr Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

/// Crossing labels are 1-based.
using CrossingId = int;

struct Passage {
  CrossingId id = 0;
  Role role = Role::Over;

  friend bool operator==(const Passage&, const Passage&) = default;
};

/// Based Gauss diagram of a long virtual knot: the over/under passages read
/// from -infinity to +infinity, and one sign per crossing.
///
/// Every crossing id in 1..n occurs exactly twice in `passages`, once Over
/// and once Under. The constructor enforces this.
class LongDiagram {
 public:
  LongDiagram() = default;
  /// `signs[id - 1]` is the sign of crossing `id`.
  LongDiagram(std::vector<Passage> passages, std::vector<int> signs);

  std::size_t crossing_count() const { return signs_.size(); }
  std::size_t size() const { return passages_.size(); }
  bool empty() const { return passages_.empty(); }

  std::span<const Passage> passages() const { return passages_; }
  const Passage& at(std::size_t pos) const { return passages_[pos]; }
  std::span<const int> signs() const { return signs_; }

  int sign(CrossingId id) const;
  std::size_t first_position(CrossingId id) const;
  std::size_t second_position(CrossingId id) const;
  std::size_t position(CrossingId id, Role role) const;
  /// Position of the other passage through the same crossing.
  std::size_t partner(std::size_t pos) const;

  /// Gauss code, e.g. "O1+ U2- O2- U1+".
  std::string to_string() const;

  friend bool operator==(const LongDiagram&, const LongDiagram&) = default;

 private:
  void check_id(CrossingId id) const;

  std::vector<Passage> passages_;
  std::vector<int> signs_;
  std::vector<std::array<std::size_t, 2>> positions_;  // first, second
};

/// Gauss diagram with a cyclic passage sequence (no basepoint).
class ClosedDiagram {
 public:
  ClosedDiagram() = default;
  explicit ClosedDiagram(LongDiagram representative) : rep_(std::move(representative)) {}

  std::size_t crossing_count() const { return rep_.crossing_count(); }
  /// Cut positions: one per arc between cyclically consecutive passages,
  /// and a single arc for the crossingless circle.
  std::size_t arc_count() const { return rep_.empty() ? 1 : rep_.size(); }
  const LongDiagram& representative() const { return rep_; }

 private:
  LongDiagram rep_;
};

enum class FlipConvention {
  /// Crossing change: roles swap and every sign is negated.
  NegateSigns,
  /// Roles swap, signs are kept.
  KeepSigns,
};

LongDiagram parse_gauss_code(std::string_view text);

/// Relabels crossings 1..n in order of first appearance.
LongDiagram canonical(const LongDiagram& d);

/// 0 when the over passage precedes the under passage, else 1.
int crossing_type(const LongDiagram& d, CrossingId id);
std::vector<CrossingId> crossings_of_type(const LongDiagram& d, int a);
int writhe_a(const LongDiagram& d, int a);

/// Appends kinks at the +infinity end until both a-writhes vanish.
LongDiagram untwist(const LongDiagram& d);

LongDiagram sym_flip(const LongDiagram& d, FlipConvention convention = FlipConvention::NegateSigns);
LongDiagram sym_reverse(const LongDiagram& d);
LongDiagram sym_reflect(const LongDiagram& d);

/// d followed by e, with e's crossings relabeled after d's.
LongDiagram concatenate(const LongDiagram& d, const LongDiagram& e);

ClosedDiagram close(const LongDiagram& d);
/// Long diagram starting at passage `arc` of the cyclic sequence.
LongDiagram cut(const ClosedDiagram& c, std::size_t arc);

// Reidemeister moves on Gauss diagrams.

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3 };

struct MoveSite {
  MoveKind kind = MoveKind::R1Insert;
  /// Insertion gaps, 0..2n; gap g sits before the passage at position g.
  std::size_t gap1 = 0;
  std::size_t gap2 = 0;
  int sign = 1;
  /// R1: role of the first inserted passage. R2: role of the segment at gap1.
  Role first_role = Role::Over;
  /// R2 insert: the second segment lists the chords in the same order.
  bool parallel = true;
  /// Deletions use ids[0..1]; R3 uses (top-middle, top-bottom, middle-bottom).
  std::array<CrossingId, 3> ids{};

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

std::string describe(const MoveSite& site);

std::vector<MoveSite> enumerate_rmoves(const LongDiagram& d);
LongDiagram apply_rmove(const LongDiagram& d, const MoveSite& site);
bool is_valid_site(const LongDiagram& d, const MoveSite& site);

/// R3 applicability for a triangle given the orders on its three segments.
/// `top_x_first`: on the top segment x precedes y; `middle_x_first`: on the
/// middle segment x precedes z; `bottom_y_first`: on the bottom segment y
/// precedes z.
bool r3_signs_compatible(int sign_x, int sign_y, int sign_z, bool top_x_first, bool middle_x_first,
                         bool bottom_y_first);

}  // namespace vknot
