#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridknot/grid.hpp"

namespace gridknot {

enum class MoveKind {
  InteriorMerge,
  ExteriorMerge,
  Divide,
  InteriorExchange,
  ExteriorExchange,
  Rotation,
};

/// Orientation of the edges a move acts on. A horizontal merge produces a
/// horizontal edge; a horizontal exchange swaps two rows.
enum class Axis { Horizontal, Vertical };

enum class Direction { TopToBottom, BottomToTop, LeftToRight, RightToLeft };

/// One Cromwell move together with its site.
///
/// Meaning of the site fields per kind (indices are 1-based):
///   InteriorExchange  level = lower of the two adjacent levels exchanged
///   ExteriorExchange  no site data; exchanges levels 1 and n
///   InteriorMerge     level = index of the unit-length perpendicular edge
///   ExteriorMerge     level = index of the perpendicular edge spanning 1..n;
///                     flag = place the merged edge at the high end (top/right)
///   Divide            level = edge to split, insert_at = index of the new
///                     perpendicular edge, flag = the low endpoint attaches to
///                     the higher of the two new levels, exterior = the new
///                     levels are 1 and n+1
///   Rotation          direction; axis is implied by it
struct CromwellMove {
  MoveKind kind = MoveKind::InteriorExchange;
  Axis axis = Axis::Horizontal;
  int level = 0;
  int insert_at = 0;
  bool flag = false;
  bool exterior = false;
  Direction direction = Direction::TopToBottom;

  friend bool operator==(const CromwellMove&, const CromwellMove&) = default;
};

CromwellMove interior_exchange(Axis axis, int level);
CromwellMove exterior_exchange(Axis axis);
CromwellMove interior_merge(Axis axis, int level);
CromwellMove exterior_merge(Axis axis, int level, bool place_high);
CromwellMove divide(Axis axis, int level, int insert_at, bool low_end_high, bool exterior = false);
CromwellMove rotation(Direction direction);

const char* to_string(MoveKind kind);
const char* to_string(Axis axis);
const char* to_string(Direction direction);
std::string describe(const CromwellMove& m);

bool is_exterior(const CromwellMove& m);

enum class Interleaving { Interleaved, Nested, Disjoint, SharedEndpoint };

Interleaving interleaved(Span a, Span b);
const char* to_string(Interleaving relation);

/// Every applicable merge, exchange and rotation of d. Divides are
/// parameterized and are never listed.
std::vector<CromwellMove> available_moves(const GridDiagram& d);

/// Applies m, or throws Error(InapplicableMove) with the reason.
GridDiagram apply(const GridDiagram& d, const CromwellMove& m);

/// Why m cannot be applied to d, or nullopt when it can.
std::optional<std::string> inapplicable_reason(const GridDiagram& d, const CromwellMove& m);

/// The move undoing m, where m is applicable to `before`.
CromwellMove inverse(const CromwellMove& m, const GridDiagram& before);

bool has_merge(const GridDiagram& d);
bool has_interior_exchange(const GridDiagram& d);
/// No merge and no interior exchange of either axis.
bool is_stuck(const GridDiagram& d);

}  // namespace gridknot
