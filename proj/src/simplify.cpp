#include "gridknot/simplify.hpp"

#include <chrono>
#include <cstdlib>
#include <deque>
#include <random>
#include <string>
#include <unordered_set>

namespace gridknot {

Limits Limits::from_env() {
  Limits l;
  if (const char* mb = std::getenv("GRIDKNOT_LIMIT_MB")) {
    l.max_memory_mb = std::strtoull(mb, nullptr, 10);
  }
  return l;
}

namespace {

struct Node {
  std::string diagram;  // key_of the diagram actually reached
  std::int64_t parent;
  CromwellMove move;
};

GridDiagram decode(const std::string& key) {
  std::vector<Span> cols(key.size() / 2);
  for (size_t i = 0; i < cols.size(); ++i) {
    cols[i] = {static_cast<unsigned char>(key[2 * i]), static_cast<unsigned char>(key[2 * i + 1])};
  }
  const int n = static_cast<int>(cols.size());
  return GridDiagram::validate(n, std::move(cols));
}

bool allowed(const CromwellMove& m, const SearchOptions& o) {
  if (m.kind == MoveKind::Rotation) return o.rotations;
  if (m.kind == MoveKind::ExteriorExchange) return o.exterior_exchanges;
  return m.kind != MoveKind::Divide;
}

bool is_merge(const CromwellMove& m) {
  return m.kind == MoveKind::InteriorMerge || m.kind == MoveKind::ExteriorMerge;
}

SimplificationWitness build_witness(const GridDiagram& start, const std::vector<Node>& nodes,
                                    std::int64_t last) {
  SimplificationWitness w;
  w.start = start;
  for (std::int64_t i = last; nodes[i].parent >= 0; i = nodes[i].parent) w.moves.push_back(nodes[i].move);
  std::reverse(w.moves.begin(), w.moves.end());
  for (const auto& m : w.moves) w.uses_exterior.push_back(is_exterior(m));
  return w;
}

SearchReport search(const GridDiagram& d, const Limits& limits, const SearchOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  const bool greedy = options.greedy_merges && options.exterior_exchanges;
  const GridDiagram target = GridDiagram::trivial();

  SearchReport report;
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  // One FIFO per size; always expand the smallest size available.
  std::vector<std::deque<std::int64_t>> queues(d.size() + 1);
  std::uint64_t bytes = 0;

  auto add = [&](const GridDiagram& g, std::int64_t parent, const CromwellMove& m) -> bool {
    std::string key = key_of(canonical_form(g).diagram);
    if (!seen.insert(key).second) return false;
    bytes += 2 * key.size() + sizeof(Node) + 64;
    nodes.push_back({key_of(g), parent, m});
    queues[g.size()].push_back(static_cast<std::int64_t>(nodes.size()) - 1);
    return true;
  };

  if (d == target) {
    report.verdict = Verdict::Trivial;
    report.states_visited = 1;
    report.witness = SimplificationWitness{d, {}, {}};
    return report;
  }
  add(d, -1, {});

  int size = 2;
  while (true) {
    while (size <= d.size() && queues[size].empty()) ++size;
    if (size > d.size()) break;
    const std::int64_t id = queues[size].front();
    queues[size].pop_front();
    ++report.states_visited;

    if ((limits.max_states && nodes.size() > limits.max_states) ||
        (limits.max_memory_mb && bytes > limits.max_memory_mb * 1024 * 1024) ||
        (limits.max_seconds > 0 && (report.states_visited & 255) == 0 &&
         std::chrono::duration<double>(Clock::now() - started).count() > limits.max_seconds)) {
      throw Error(ErrorCode::LimitExceeded,
                  "search limit reached after " + std::to_string(report.states_visited) + " states");
    }

    const GridDiagram g = decode(nodes[id].diagram);
    std::vector<CromwellMove> moves;
    for (const auto& m : available_moves(g)) {
      if (allowed(m, options)) moves.push_back(m);
    }
    if (greedy) {
      auto merge = std::find_if(moves.begin(), moves.end(), is_merge);
      if (merge != moves.end()) moves = {*merge};
    }
    for (const auto& m : moves) {
      const GridDiagram next = apply(g, m);
      if (!add(next, id, m)) continue;
      if (next == target) {
        report.verdict = Verdict::Trivial;
        report.witness = build_witness(d, nodes, static_cast<std::int64_t>(nodes.size()) - 1);
        return report;
      }
      size = std::min(size, next.size());
    }
  }
  report.verdict = Verdict::NotTrivial;
  return report;
}

}  // namespace

SearchReport is_trivial(const GridDiagram& d, const Limits& limits, const SearchOptions& options) {
  if (!is_knot(d)) throw Error(ErrorCode::NotAKnot, "diagram has more than one component");
  SearchReport report = search(d, limits, options);
  if (options.check_exterior && report.verdict == Verdict::Trivial) {
    report.exterior_required = needs_exterior(d, limits);
  }
  return report;
}

bool needs_exterior(const GridDiagram& d, const Limits& limits) {
  if (!is_knot(d)) throw Error(ErrorCode::NotAKnot, "diagram has more than one component");
  SearchOptions restricted;
  restricted.rotations = false;
  restricted.exterior_exchanges = false;
  if (search(d, limits, restricted).verdict == Verdict::Trivial) return false;
  if (search(d, limits, {}).verdict != Verdict::Trivial) {
    throw Error(ErrorCode::NotTrivialInput, "diagram is not a trivial knot");
  }
  return true;
}

GridDiagram scramble(std::uint64_t seed, int steps) {
  std::mt19937_64 rng(seed);
  // Modulo keeps the sequence identical across standard libraries, unlike
  // the distributions in <random>.
  auto pick = [&](std::uint64_t k) { return static_cast<int>(rng() % k); };
  GridDiagram d = GridDiagram::trivial();
  for (int step = 0; step < steps; ++step) {
    const int n = d.size();
    const Axis axis = pick(2) ? Axis::Vertical : Axis::Horizontal;
    if (pick(5) < 2) {
      const int level = 1 + pick(n);
      const bool exterior = (level == 1 || level == n) && pick(4) == 0;
      d = apply(d, divide(axis, level, 1 + pick(n + 1), pick(2) == 1, exterior));
      continue;
    }
    std::vector<CromwellMove> options;
    for (const auto& m : available_moves(d)) {
      if (m.kind == MoveKind::InteriorExchange || m.kind == MoveKind::ExteriorExchange ||
          m.kind == MoveKind::Rotation) {
        options.push_back(m);
      }
    }
    d = apply(d, options[pick(options.size())]);
  }
  return d;
}

GridDiagram replay_witness(const SimplificationWitness& w) {
  GridDiagram d = w.start;
  for (const auto& m : w.moves) {
    if (m.kind == MoveKind::Divide) throw Error(ErrorCode::InapplicableMove, "witness contains a divide");
    const GridDiagram next = apply(d, m);
    if (next.size() > d.size()) throw Error(ErrorCode::InapplicableMove, "witness increases size");
    d = next;
  }
  if (!(d == GridDiagram::trivial())) {
    throw Error(ErrorCode::InapplicableMove, "witness does not end at the 2x2 diagram");
  }
  return d;
}

const char* to_string(Verdict v) { return v == Verdict::Trivial ? "trivial" : "not_trivial"; }

Json to_json(const SimplificationWitness& w) {
  return Json{{"start", to_json(w.start)}, {"moves", to_json(w.moves)}};
}

SimplificationWitness witness_from_json(const Json& j) {
  SimplificationWitness w;
  try {
    w.start = grid_from_json(j.at("start"));
    w.moves = moves_from_json(j.at("moves"));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad witness: ") + e.what());
  }
  for (const auto& m : w.moves) w.uses_exterior.push_back(is_exterior(m));
  return w;
}

Json to_json(const SearchReport& r) {
  Json j{{"verdict", to_string(r.verdict)}, {"states_visited", r.states_visited}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.exterior_required) j["exterior_required"] = *r.exterior_required;
  return j;
}

}  // namespace gridknot
