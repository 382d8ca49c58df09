#pragma once

#include <string>
#include <vector>

#include "gridknot/bounds.hpp"
#include "gridknot/io.hpp"
#include "gridknot/moves.hpp"
#include "gridknot/planar.hpp"

namespace gridknot {

/// Reidemeister moves realizing one exterior Cromwell move. Sites of each
/// move refer to the canonical code of the diagram it is applied to.
struct RealizationTrace {
  GridDiagram grid = GridDiagram::trivial();
  CromwellMove move;
  PlanarDiagram initial;  // canonical
  std::vector<ReidemeisterMove> moves;
  std::vector<int> jump_of;  // jump index of each move
  PlanarDiagram final;       // canonical
  std::vector<SigmaBreakdown> jumps;
  /// Kinds of the moves the plain sweep made for each jump, before the
  /// route through its states was shortened.
  std::vector<std::vector<ReidemeisterKind>> sweep;
  /// Always "realized" for grid jumps; a sweep that fails to reach the
  /// moved diagram throws SweepObstruction instead. "crossing_free" is
  /// accepted when reading traces.
  std::string termination = "realized";
  /// Geometry after each move, in host coordinates scaled by 4 (kept only
  /// when requested).
  std::vector<Polyline> frames;

  int count(ReidemeisterKind kind, int jump = -1) const;
  int sweep_count(ReidemeisterKind kind, int jump) const;
};

/// Sweeps each jump of the decomposition of m across its disk, stopping as
/// soon as no crossing is left. Throws
/// InapplicableMove, NotAKnot, or SweepObstruction if the sweep ever fails
/// to match a legal move (which would be a bug).
RealizationTrace realize(const GridDiagram& d, const CromwellMove& m, bool keep_frames = false);

/// Applies the moves to trace.initial, checking each site and the Euler
/// relation after every step. Throws IllegalMoveAtSite.
PlanarDiagram replay(const RealizationTrace& trace);

Json to_json(const ReidemeisterMove& m);
ReidemeisterMove reidemeister_from_json(const Json& j);
Json to_json(const RealizationTrace& t);
/// Reads the fields replay needs: initial, moves and final_gauss.
RealizationTrace trace_from_json(const Json& j);

/// One picture of a sweep state; over strands are drawn on top with a halo.
std::string render_svg(const Polyline& line);

}  // namespace gridknot
