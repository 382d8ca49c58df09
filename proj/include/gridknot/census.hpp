#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gridknot/grid.hpp"
#include "gridknot/io.hpp"
#include "gridknot/simplify.hpp"

namespace gridknot {

struct CensusFilter {
  bool knots_only = false;
  /// No merge and no interior exchange. Enables in-construction pruning.
  bool stuck_only = false;
  /// Only diagrams of the trivial knot (decided by search after a
  /// determinant pretest). Implies knots_only.
  bool trivial_only = false;
  /// Additionally reject diagrams admitting the exterior vertical exchange
  /// and require the exterior horizontal one. Implies stuck_only.
  bool only_exterior_horizontal = false;
  /// Extra predicate applied to canonical diagrams before triviality.
  std::function<bool(const GridDiagram&)> custom;
};

struct CensusOptions {
  int jobs = 1;
  Limits limits;  // per triviality search
  std::string checkpoint;  // empty = no checkpointing
  /// Stop after this many accepted diagrams (0 = never).
  std::uint64_t stop_after = 0;
};

/// Counts per filter stage. "raw" counts diagrams; all other counts are
/// dihedral orbits.
struct CensusResult {
  int n = 0;
  std::uint64_t raw_count = 0;       // diagrams surviving the structural stage
  std::uint64_t orbit_count = 0;     // their orbits
  std::uint64_t knot_count = 0;
  std::uint64_t stuck_count = 0;     // knot orbits that are stuck
  std::uint64_t trivial_count = 0;   // accepted orbits shown trivial
  std::uint64_t trivial_stuck_count = 0;
  std::uint64_t accepted = 0;        // orbits passed to the sink
  std::vector<GridDiagram> representatives;  // accepted, sorted
  double elapsed_s = 0;
  int workers = 1;
};

using CensusSink = std::function<void(const GridDiagram&)>;

/// Streams each canonical diagram passing the filter exactly once. The sink
/// is called from the calling thread after workers finish, in sorted order.
CensusResult enumerate(int n, const CensusFilter& filter, const CensusSink& sink = {},
                       const CensusOptions& options = {});

struct MaxStats {
  int crossings = 0;
  int total_length = 0;
};

/// Exact maxima over all n-grids by exhaustive scan.
MaxStats max_stats(int n, int jobs = 1);

struct Theorem2Report {
  int n = 0;
  bool holds = false;
  CensusResult census;
  /// For n = 8: per member of the stuck trivial set.
  std::vector<bool> admits_both_exterior;
  std::vector<bool> needs_exterior;
  std::string detail;
};

/// n <= 7: no stuck trivial knot exists. n = 8: the stuck trivial set is
/// non-empty, every member admits both exterior exchanges and needs one.
Theorem2Report verify_theorem2(int n, const CensusOptions& options = {});

/// A trivial diagram admitting no move other than the exterior horizontal
/// exchange (and rotations), or nullopt when none exists.
std::optional<GridDiagram> find_only_exterior_horizontal(int n, const CensusOptions& options = {});

/// Summary counts; representatives are left out.
Json to_json(const CensusResult& r);

}  // namespace gridknot
