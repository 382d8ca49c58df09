#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridknot/grid.hpp"

namespace gridknot {

/// One visit of the knot to a crossing.
struct Passage {
  int crossing = 0;
  bool over = false;
  int sign = 1;  // sign of the crossing, shared by both of its passages

  friend bool operator==(const Passage&, const Passage&) = default;
};

/// A side of an edge: edge k joins passage k to passage k+1 (cyclically);
/// the forward dart runs along the orientation of the knot.
struct Dart {
  int edge = 0;
  bool forward = true;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct CanonicalCode;

/// A knot diagram on the sphere given by its signed Gauss code. The
/// embedding is recovered from the code: at a positive crossing the
/// counter-clockwise order of half-edges is under-in, over-out, under-out,
/// over-in; at a negative one under-in, over-in, under-out, over-out.
/// Crossing-free diagrams have an empty code and a single edge.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  /// Labels may be arbitrary; each must occur once over and once under with
  /// equal signs. Throws ParseError otherwise.
  explicit PlanarDiagram(std::vector<Passage> code);

  const std::vector<Passage>& code() const { return code_; }
  int crossing_count() const { return static_cast<int>(code_.size()) / 2; }
  int edge_count() const { return code_.empty() ? 1 : static_cast<int>(code_.size()); }

  /// Faces as cyclic dart sequences.
  std::vector<std::vector<Dart>> faces() const;
  /// V - E + F == 2 with a crossing-free circle counted as one vertex.
  bool satisfies_euler() const;

  /// Canonical relabelling over all basepoints and both orientations.
  CanonicalCode canonical() const;
  /// This diagram with its code replaced by the canonical one.
  PlanarDiagram canonicalized() const;
  /// The canonical code as text, e.g. "O1+,U2+,O3+,U1+,O2+,U3+".
  std::string gauss_code() const;

  /// Crossing labels of edge k's two ends.
  std::pair<int, int> edge_ends(int k) const;

 private:
  std::vector<Passage> code_;
};

struct CanonicalCode {
  std::vector<Passage> code;  // labels 0..c-1 by first appearance
  int start = 0;              // canonical passage i is raw passage start +/- i
  bool reversed = false;
  std::vector<int> relabel;   // raw label -> canonical label

  int raw_to_canonical_edge(int raw_edge) const;
};

std::string to_string(const std::vector<Passage>& code);
/// Parses the text produced by gauss_code.
PlanarDiagram parse_gauss_code(const std::string& text);

/// Closed rectilinear polyline in coordinates scaled by 4. Segment i joins
/// points[i] and points[i+1]. Layer decides crossings: 2 passes over
/// everything, 0 under everything, and two layer-1 segments cross with the
/// vertical one over.
struct Polyline {
  std::vector<std::pair<int, int>> points;
  std::vector<int> layer;
};

/// Gauss code read off a polyline together with enough geometry to locate
/// crossings and edges by position.
struct GeometricDiagram {
  PlanarDiagram diagram;                               // raw labels 0..c-1
  std::vector<std::pair<int, int>> crossing_points;    // by raw label
  /// Raw label of the crossing at p; throws DegenerateGeometry if none.
  int crossing_at(std::pair<int, int> p) const;
  /// Raw edge containing the point p of the polyline.
  int edge_at(std::pair<int, int> p) const;

  Polyline line;
  std::vector<std::pair<int, double>> passage_position;  // (segment, distance)
};

/// Throws DegenerateGeometry on overlapping or touching segments.
GeometricDiagram read_polyline(const Polyline& line);

/// The closed polyline of a grid knot, starting at (1, lo_1) and going up.
Polyline grid_polyline(const GridDiagram& d);

/// Planar diagram of a grid knot (vertical strands over). Throws NotAKnot.
PlanarDiagram to_planar(const GridDiagram& d);

enum class ReidemeisterKind { R1_create, R1_delete, R2_create, R2_delete, R3 };
const char* to_string(ReidemeisterKind kind);

/// One Reidemeister move. Sites refer to the code of the diagram it is
/// applied to:
///   R1_delete  crossings = {x}: the two passages of x are consecutive
///   R1_create  edges = {k}: insert a kink on edge k; over = the first new
///              passage is over; sign = sign of the new crossing
///   R2_delete  crossings = {x, y} bounding a bigon face
///   R2_create  edges = {p, q}: push edge p across edge q; over = p is the
///              over strand; order = q meets the new crossings in the same
///              order as p; sign = sign of the first crossing met along p
///   R3         crossings = {x, y, z} bounding a triangle face
struct ReidemeisterMove {
  ReidemeisterKind kind = ReidemeisterKind::R3;
  std::vector<int> crossings;
  std::vector<int> edges;
  bool over = false;
  bool order = false;
  int sign = 1;

  friend bool operator==(const ReidemeisterMove&, const ReidemeisterMove&) = default;
};

/// Applies m, or throws IllegalMoveAtSite. The result is canonicalized.
PlanarDiagram apply_reidemeister(const PlanarDiagram& p, const ReidemeisterMove& m);

/// Every legal single move on p (of one kind if given) with its result.
std::vector<std::pair<ReidemeisterMove, PlanarDiagram>> reidemeister_neighbours(
    const PlanarDiagram& p, std::optional<ReidemeisterKind> only = std::nullopt);

}  // namespace gridknot
