#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gridknot/grid.hpp"
#include "gridknot/io.hpp"
#include "gridknot/moves.hpp"

namespace gridknot {

struct SimplificationWitness {
  GridDiagram start = GridDiagram::trivial();
  std::vector<CromwellMove> moves;
  std::vector<bool> uses_exterior;  // parallel to moves
};

struct Limits {
  std::uint64_t max_states = 0;  // 0 = unlimited
  double max_seconds = 0;        // 0 = unlimited
  std::uint64_t max_memory_mb = 0;

  /// Defaults with max_memory_mb taken from GRIDKNOT_LIMIT_MB when set.
  static Limits from_env();
};

struct SearchOptions {
  bool rotations = true;           // false = strict mode
  bool exterior_exchanges = true;
  /// Expand only one merge from a state that admits any. Sound for trivial
  /// knots only when exterior exchanges are allowed; ignored otherwise.
  bool greedy_merges = true;
  /// Also compute SearchReport::exterior_required.
  bool check_exterior = false;
};

enum class Verdict { Trivial, NotTrivial };

struct SearchReport {
  Verdict verdict = Verdict::NotTrivial;
  std::uint64_t states_visited = 0;
  std::optional<SimplificationWitness> witness;
  std::optional<bool> exterior_required;
};

/// Searches the graph of non-size-increasing moves for the 2x2 diagram.
/// Throws NotAKnot for links and LimitExceeded when a limit is hit before
/// the reachable set is exhausted.
SearchReport is_trivial(const GridDiagram& d, const Limits& limits = {},
                        const SearchOptions& options = {});

/// Whether every monotone simplification of d uses an exterior exchange,
/// i.e. d cannot reach the 2x2 diagram once exterior exchanges and rotations
/// are switched off. Throws NotTrivialInput when d is not trivial.
bool needs_exterior(const GridDiagram& d, const Limits& limits = {});

/// A trivial-knot diagram obtained from 2x2 by `steps` random divides,
/// exchanges and rotations. Deterministic for a given seed.
GridDiagram scramble(std::uint64_t seed, int steps);

/// Replays w and returns the final diagram. Throws InapplicableMove when a
/// move does not apply, is a divide, or the walk does not end at 2x2.
GridDiagram replay_witness(const SimplificationWitness& w);

const char* to_string(Verdict v);

/// {"start": grid, "moves": [move...]}
Json to_json(const SimplificationWitness& w);
SimplificationWitness witness_from_json(const Json& j);
Json to_json(const SearchReport& r);

}  // namespace gridknot
