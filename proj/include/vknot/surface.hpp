#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "vknot/diagram.hpp"

namespace vknot {

enum class SurfaceOrientation {
  /// At a positive crossing the rotation reads (in-under, in-over,
  /// out-under, out-over) counterclockwise, so sign = det(under, over).
  Standard,
  /// Reversed rotation: sign = det(over, under).
  Mirror,
};

/// Rotation system of a thickened 4-valent diagram graph.
///
/// Half-edge layout for a diagram with 2n passages: passage k owns the
/// incoming half-edge 2k and the outgoing half-edge 2k+1. The two extra
/// half-edges 4n and 4n+1 belong to the basepoint vertex (closed graph) or
/// to the two free ends (open graph).
struct RibbonGraph {
  enum class VertexKind : std::uint8_t { Crossing, Basepoint, End };

  std::vector<VertexKind> vertex_kind;
  std::vector<int> vertex_of;  // per half-edge
  std::vector<int> pair;       // edge involution
  std::vector<int> next_ccw;   // successor in the rotation at its vertex

  std::size_t vertex_count() const { return vertex_kind.size(); }
  std::size_t half_edge_count() const { return pair.size(); }
  std::size_t edge_count() const { return pair.size() / 2; }

  /// Face boundaries: orbits of h -> next_ccw[pair[h]].
  std::vector<std::vector<int>> faces() const;
  /// Face index of every half-edge.
  std::vector<int> face_of() const;
  bool connected() const;
};

inline int in_half(std::size_t pos) { return static_cast<int>(2 * pos); }
inline int out_half(std::size_t pos) { return static_cast<int>(2 * pos + 1); }

/// Closed ribbon graph: the diagram closed up through a 2-valent basepoint.
RibbonGraph build_carter(const LongDiagram& d, SurfaceOrientation orientation = SurfaceOrientation::Standard);
/// Open ribbon graph: the long diagram with two univalent free ends.
RibbonGraph build_open(const LongDiagram& d, SurfaceOrientation orientation = SurfaceOrientation::Standard);

/// (2 - V + E - F) / 2. Throws Disconnected.
int genus(const RibbonGraph& r);

/// Upper bound for the 2-supporting genus: the genus of the open ribbon
/// surface with every boundary circle capped except the two carrying the
/// ends, or the closed genus when both ends share a boundary circle.
int two_boundary_genus(const LongDiagram& d);

enum class Half : std::uint8_t { In, Out };

/// One crossing of the left push-off of a cycle with the diagram.
struct PushEvent {
  Half half = Half::In;
  int contribution = 0;

  friend bool operator==(const PushEvent&, const PushEvent&) = default;
};

/// Local rules for the left push-off of a smoothing cycle.
///
/// "det" is det(tangent of the pushed strand, tangent of the other strand)
/// at a crossing, measured in the Mirror orientation; Standard results are
/// the negation. A straight pass produces one
/// event on the other strand; a smoothing corner at the pushed cycle's own
/// crossing produces events on the first- and second-passage half-edges.
struct LeftPushRules {
  struct Corner {
    bool active = false;
    PushEvent at_first;
    PushEvent at_second;

    friend bool operator==(const Corner&, const Corner&) = default;
  };
  PushEvent straight_pos;
  PushEvent straight_neg;
  Corner corner_pos;
  Corner corner_neg;

  static LeftPushRules standard();
  friend bool operator==(const LeftPushRules&, const LeftPushRules&) = default;
};

/// Index vector v_i = alpha_i . gamma and intersection matrix
/// M_ij = alpha_i . alpha_j, indexed by crossing id - 1.
struct HomologyData {
  std::vector<std::int64_t> v;
  std::vector<std::int64_t> m;  // row-major n x n
  int genus = 0;

  std::size_t size() const { return v.size(); }
  std::int64_t pairing(std::size_t i, std::size_t j) const { return m[i * v.size() + j]; }
};

struct HomologyOptions {
  SurfaceOrientation orientation = SurfaceOrientation::Standard;
  LeftPushRules rules = LeftPushRules::standard();
};

/// Left-push kernel, O(n^2), rows computed in parallel.
HomologyData homology_data(const LongDiagram& d, const HomologyOptions& options = {});
/// Same kernel, single-threaded.
HomologyData homology_data_serial(const LongDiagram& d, const HomologyOptions& options = {});
/// Independent route: pushes closed walks on the rotation system of
/// build_carter and sums crossings sector by sector. O(n^3), for tests.
HomologyData homology_data_reference(const LongDiagram& d,
                                     SurfaceOrientation orientation = SurfaceOrientation::Standard);

/// (alpha_i . beta_j, beta_i . beta_j) for 0-based indices.
std::pair<std::int64_t, std::int64_t> derived_pairings(const HomologyData& h, std::size_t i, std::size_t j);

}  // namespace vknot
