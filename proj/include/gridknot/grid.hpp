#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gridknot/error.hpp"

namespace gridknot {

/// Closed integer interval [lo, hi] with lo < hi. Used both for the row span of
/// a vertical edge and for the column span of a horizontal edge.
struct Span {
  int lo = 0;
  int hi = 0;

  int length() const { return hi - lo; }
  bool strictly_contains(int v) const { return lo < v && v < hi; }

  friend auto operator<=>(const Span&, const Span&) = default;
};

/// A rectangular (grid) diagram with n vertical and n horizontal edges.
///
/// The vertical edge at abscissa x (1-based) spans rows column(x).lo..hi.
/// Horizontal edges are derived: row y is carried between the two columns
/// whose spans end at y. At every crossing the vertical strand is over.
/// Values are immutable once constructed and cheap to copy.
class GridDiagram {
 public:
  /// Checks the raw column data and builds a diagram. Pairs given as
  /// (hi, lo) are reordered. Throws Error with SizeError, DegenerateColumn or
  /// RowCountError.
  static GridDiagram validate(int n, std::vector<Span> columns);

  /// The unique diagram with two edges in each direction.
  static GridDiagram trivial();

  int size() const { return static_cast<int>(columns_.size()); }
  const std::vector<Span>& columns() const { return columns_; }
  const std::vector<Span>& rows() const { return rows_; }
  Span column(int x) const { return columns_[x - 1]; }
  Span row(int y) const { return rows_[y - 1]; }

  friend bool operator==(const GridDiagram& a, const GridDiagram& b) {
    return a.columns_ == b.columns_;
  }
  friend auto operator<=>(const GridDiagram& a, const GridDiagram& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.columns_ <=> b.columns_;
  }

 private:
  GridDiagram() = default;
  std::vector<Span> columns_;
  std::vector<Span> rows_;
};

/// A corner point (x, y) of a diagram: column x ends at row y.
using Corner = std::pair<int, int>;

/// Builds a diagram from its 2n corners. Each column and each row must
/// contain exactly two corners.
GridDiagram from_corners(int n, const std::vector<Corner>& corners);
std::vector<Corner> corners(const GridDiagram& d);

int component_count(const GridDiagram& d);
bool is_knot(const GridDiagram& d);

/// Crossing of vertical edge `column` over horizontal edge `row`.
struct Crossing {
  int column = 0;
  int row = 0;
  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

std::vector<Crossing> crossings(const GridDiagram& d);
int crossing_count(const GridDiagram& d);

struct LengthStats {
  std::vector<int> vertical_lengths;    // indexed by column - 1
  std::vector<int> horizontal_lengths;  // indexed by row - 1
  int total_vertical = 0;
  int total_horizontal = 0;
  int total_all = 0;
  int crossing_count = 0;
};

LengthStats length_stats(const GridDiagram& d);

/// Upper bounds on crossings and total edge length for an n-grid.
int max_crossings_bound(int n);
int max_length_bound(int n);

/// A diagram attaining both bounds above (a link in general).
GridDiagram extremal_diagram(int n);

// Dihedral symmetries of the square, encoded in three bits:
// bit 0 reflects x, bit 1 reflects y, bit 2 transposes (applied last).
inline constexpr int kSymmetryCount = 8;

Corner transform_point(int tag, int n, Corner p);
GridDiagram transform(const GridDiagram& d, int tag);
int inverse_symmetry(int tag);
/// Whether the symmetry reverses the orientation of the plane.
bool symmetry_reflects(int tag);

struct CanonicalForm {
  GridDiagram diagram;
  int tag = 0;  // transform(input, tag) == diagram
};

CanonicalForm canonical_form(const GridDiagram& d);
bool is_canonical(const GridDiagram& d);
/// Number of distinct images of d under the dihedral group.
int orbit_size(const GridDiagram& d);

/// Compact hashable encoding of the column data (one byte per endpoint).
std::string key_of(const GridDiagram& d);

enum class RenderFormat { Ascii, Svg };
RenderFormat parse_render_format(const std::string& name);
std::string render(const GridDiagram& d, RenderFormat format);

}  // namespace gridknot
