#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gridknot/grid.hpp"
#include "gridknot/io.hpp"
#include "gridknot/moves.hpp"
#include "gridknot/planar.hpp"

namespace gridknot {

enum class BoundKind { ExteriorExchange, ExteriorMerge, Rotation };

const char* to_string(BoundKind kind);
/// Accepts exterior_exchange, exterior_merge and rotation.
BoundKind parse_bound_kind(const std::string& name);
/// Throws InapplicableMove for moves that are not exterior.
BoundKind bound_kind(const CromwellMove& m);

/// Reidemeister budget for one exterior move on an n-grid. Throws SizeError
/// for n < 2.
int theorem3_bound(int n, BoundKind kind);

enum class StrandRole { Over, Under };

/// A jump carrying one extremal edge s, with the two edges attached to it,
/// across the disk Q to the arc u on the other side of the diagram.
///
/// All geometry is described in a frame: the diagram transform(host,
/// frame_tag), in which the jumped edge is the row r0 between columns a < b
/// and u runs below row 1. Frame heights are scaled by 4 so half and quarter
/// grid positions stay integral.
struct JumpSpec {
  GridDiagram host = GridDiagram::trivial();
  int frame_tag = 0;
  int r0 = 0;
  int a = 0, b = 0;
  int end_a = 0, end_b = 0;  // scaled heights of the endpoints of s
  int floor = 2;             // scaled height of u
  StrandRole role = StrandRole::Over;
  GridDiagram result = GridDiagram::trivial();  // host after the jump

  GridDiagram frame() const { return transform(host, frame_tag); }
  /// Scaled frame point to scaled host point.
  std::pair<int, int> to_host(std::pair<int, int> p) const;
  /// The part of the diagram not moved by the jump, in scaled frame
  /// coordinates, from (b, end_b) round to (a, end_a).
  std::vector<std::pair<int, int>> static_path() const;
  /// The diagram with the jumped strand at height `left` west of `jog` and
  /// `right` east of it, in scaled host coordinates.
  Polyline state(int left, int right, int jog) const;

  /// s, u and the boundary of Q in scaled host coordinates.
  std::vector<std::pair<int, int>> s_path() const;
  std::vector<std::pair<int, int>> u_path() const;
  std::vector<std::pair<int, int>> q_polygon() const;
};

/// The jumps realizing an exterior exchange (two), an exterior merge or a
/// rotation (one). Throws InapplicableMove otherwise.
std::vector<JumpSpec> jump_decomposition(const GridDiagram& d, const CromwellMove& m);

/// Counts on the graph D_Q left inside Q once s is removed.
struct SigmaBreakdown {
  int V = 0;           // crossings inside Q
  int E = 0;           // edges of D_Q
  int E_i = 0;         // no endpoint on s
  int E_ss = 0;        // both endpoints in the interior of s
  int E_boundary = 0;  // exactly one endpoint at an end of s
  int E_s = 0;         // sum over inner vertices of max(0, E_sv - 2)
  int E_svs = 0;       // components with the loop-over-s pattern
  int boundary_points = 0;
  int sv2_vertices = 0;  // inner vertices with E_sv == 2

  int sigma_simple() const { return V + E; }
  int sigma_strong() const { return V + E_i + E_ss + E_boundary + E_s + E_svs; }
  /// Only a valid budget when E_boundary == 0.
  int sigma_no_r1() const { return 2 * V + E_i + E_ss + E_boundary + E_s + E_svs; }
  bool no_r1_valid() const { return E_boundary == 0; }
  /// E recounted from degrees: (4V + boundary points) / 2.
  int handshake_edges() const { return (4 * V + boundary_points) / 2; }
};

SigmaBreakdown sigma(const JumpSpec& j);

struct Theorem3Report {
  BoundKind kind = BoundKind::Rotation;
  int n = 0;
  std::vector<SigmaBreakdown> jumps;
  int total = 0;  // sum of sigma_simple
  int bound = 0;
  bool holds = false;
  int slack() const { return bound - total; }
};

Theorem3Report verify_theorem3(const GridDiagram& d, const CromwellMove& m);

Json to_json(const SigmaBreakdown& s);
Json to_json(const JumpSpec& j);
Json to_json(const Theorem3Report& r);

}  // namespace gridknot
