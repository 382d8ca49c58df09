#include "gridknot/realizer.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace gridknot {

using Point = std::pair<int, int>;

int RealizationTrace::count(ReidemeisterKind kind, int jump) const {
  int c = 0;
  for (size_t i = 0; i < moves.size(); ++i) {
    if (moves[i].kind == kind && (jump < 0 || jump_of[i] == jump)) ++c;
  }
  return c;
}

int RealizationTrace::sweep_count(ReidemeisterKind kind, int jump) const {
  return static_cast<int>(std::count(sweep[jump].begin(), sweep[jump].end(), kind));
}

namespace {

struct Event {
  ReidemeisterKind kind;
  std::vector<Point> crossings;  // frame points of crossings in the current state
  std::vector<Point> edges;      // frame points on edges of the current state
  bool isotopy = false;
};

Event isotopy() { return {ReidemeisterKind::R3, {}, {}, true}; }

// What happens when the jog of the strand passes column k while the strand
// drops from just above row y to just below it.
Event classify(const JumpSpec& j, const GridDiagram& f, int k, int y) {
  const Span row = f.row(y);
  const int Y = 4 * y, K = 4 * k;
  if (k == j.a) {
    if (Y > j.end_a) return isotopy();
    if (Y == j.end_a) {
      if (row.lo == k) return {ReidemeisterKind::R1_create, {}, {{K, Y}}};
      return isotopy();
    }
    if (row.strictly_contains(k)) return {ReidemeisterKind::R2_create, {}, {{K, Y + 2}, {K, Y}}};
    return isotopy();
  }
  if (k == j.b) {
    if (Y > j.end_b) {
      if (row.strictly_contains(k)) return {ReidemeisterKind::R2_delete, {{K, Y}, {K - 2, Y}}, {}};
      return isotopy();
    }
    if (Y == j.end_b && row.hi == k) return {ReidemeisterKind::R1_delete, {{K - 2, Y}}, {}};
    return isotopy();
  }
  const Span col = f.column(k);
  if (col.strictly_contains(y) && row.strictly_contains(k)) {
    return {ReidemeisterKind::R3, {{K, Y + 2}, {K - 2, Y}, {K, Y}}, {}};
  }
  const bool corner = (col.lo == y || col.hi == y) && (row.lo == k || row.hi == k);
  if (!corner) return isotopy();
  const bool up = col.lo == y, left = row.hi == k;
  if (up && left) return {ReidemeisterKind::R2_delete, {{K, Y + 2}, {K - 2, Y}}, {}};
  if (!up && !left) return {ReidemeisterKind::R2_create, {}, {{K, Y + 2}, {K, Y}}};
  return isotopy();
}

[[noreturn]] void obstruction(const std::string& why) { throw Error(ErrorCode::SweepObstruction, why); }

class Sweep {
 public:
  Sweep(RealizationTrace& trace, bool keep_frames) : trace_(trace), keep_frames_(keep_frames) {}

  void run(const JumpSpec& j, int index, int budget) {
    jump_ = index;
    states_ = {current_};
    steps_.clear();
    lines_.clear();
    reach_.clear();
    sweep(j);
    shorten(budget);
  }

  const PlanarDiagram& current() const { return current_; }
  void reset(const PlanarDiagram& p) { current_ = p; }

 private:
  void sweep(const JumpSpec& j) {
    const GridDiagram f = j.frame();
    const int index = jump_;
    Polyline line = j.state(4 * j.r0, 4 * j.r0, 4 * j.a);
    cur_ = read_polyline(line);
    if (!(cur_.diagram.canonicalized().code() == current_.code())) {
      obstruction("jump " + std::to_string(index) + " does not start from the current diagram");
    }
    const int last = j.floor == 6 ? 2 : 1;
    advance(j.state(4 * j.r0 - 2, 4 * j.r0 - 2, 4 * j.a), j, isotopy());
    for (int y = j.r0 - 1; y >= last; --y) {
      const int above = 4 * y + 2, below = 4 * y - 2;
      for (int k = j.a; k <= j.b; ++k) {
        const Polyline next = k == j.b ? j.state(below, below, 4 * j.b) : j.state(below, above, 4 * k + 2);
        advance(next, j, classify(j, f, k, y));
      }
    }
  }

  // The sweep may cross an edge of the disk several times where one move
  // would do (a kink swept out as R1 then R2, say). So pick a route through
  // its states, joining equal states for free and states one move apart with
  // that move. The route keeps every R3 when that fits the budget; otherwise
  // it is a shortest one.
  void shorten(int budget) {
    for (const auto& m : steps_) trace_.sweep[jump_].push_back(m.kind);
    std::vector<std::string> keys;
    for (const auto& s : states_) keys.push_back(to_string(s.code()));
    Route r = route(keys, 1 << 16, 1);
    if (r.moves > budget) r = route(keys, 1, 1 << 16);
    for (size_t i = 0; i < r.moves_at.size(); ++i) {
      trace_.moves.push_back(r.taken[i]);
      trace_.jump_of.push_back(jump_);
      if (keep_frames_) trace_.frames.push_back(lines_[r.moves_at[i] - 1]);
    }
  }

  struct Route {
    int moves = 0;
    std::vector<ReidemeisterMove> taken;
    std::vector<int> moves_at;  // state reached by each taken move
  };

  // Cheapest route where each move costs per_move and each sweep R3 left
  // out costs per_drop.
  Route route(const std::vector<std::string>& keys, long per_drop, long per_move) {
    const int k = static_cast<int>(steps_.size());
    std::vector<int> r3(k + 1, 0);
    for (int i = 0; i < k; ++i) r3[i + 1] = r3[i] + (steps_[i].kind == ReidemeisterKind::R3);
    auto cost = [&](int i, int j, const ReidemeisterMove* m) {
      const bool is_r3 = m && m->kind == ReidemeisterKind::R3;
      return per_drop * (r3[j] - r3[i] - is_r3) + (m ? per_move : 0);
    };
    std::vector<long> dist(k + 1, 0);
    std::vector<int> from(k + 1, -1);
    std::vector<std::optional<ReidemeisterMove>> via(k + 1);
    for (int j = 1; j <= k; ++j) {
      dist[j] = dist[j - 1] + cost(j - 1, j, &steps_[j - 1]);
      from[j] = j - 1;
      via[j] = steps_[j - 1];
      for (int i = 0; i < j; ++i) {
        if (keys[i] == keys[j]) {
          if (dist[i] + cost(i, j, nullptr) < dist[j]) {
            dist[j] = dist[i] + cost(i, j, nullptr);
            from[j] = i;
            via[j].reset();
          }
          continue;
        }
        if (i + 1 == j || dist[i] + per_move + per_drop * std::max(0, r3[j] - r3[i] - 1) >= dist[j]) continue;
        const ReidemeisterMove* m = reachable(keys, i, j);
        if (!m || (m->kind == ReidemeisterKind::R3 && r3[j] == r3[i])) continue;
        if (dist[i] + cost(i, j, m) >= dist[j]) continue;
        dist[j] = dist[i] + cost(i, j, m);
        from[j] = i;
        via[j] = *m;
      }
    }
    Route r;
    std::vector<int> path;
    for (int j = k; j > 0; j = from[j]) path.push_back(j);
    std::reverse(path.begin(), path.end());
    for (int j : path) {
      if (!via[j]) continue;
      ++r.moves;
      r.taken.push_back(*via[j]);
      r.moves_at.push_back(j);
    }
    return r;
  }

  // One move changes the crossing count by an amount fixed by its kind, so
  // only that kind is enumerated, and only when first needed.
  const ReidemeisterMove* reachable(const std::vector<std::string>& keys, int i, int j) {
    ReidemeisterKind kind;
    switch (states_[j].crossing_count() - states_[i].crossing_count()) {
      case 0: kind = ReidemeisterKind::R3; break;
      case 1: kind = ReidemeisterKind::R1_create; break;
      case -1: kind = ReidemeisterKind::R1_delete; break;
      case 2: kind = ReidemeisterKind::R2_create; break;
      case -2: kind = ReidemeisterKind::R2_delete; break;
      default: return nullptr;
    }
    auto [it, fresh] = reach_.try_emplace({i, kind});
    if (fresh) {
      for (auto& [m, q] : reidemeister_neighbours(states_[i], kind)) it->second.emplace(to_string(q.code()), m);
    }
    const auto hit = it->second.find(keys[j]);
    return hit == it->second.end() ? nullptr : &hit->second;
  }

  void advance(const Polyline& next_line, const JumpSpec& j, const Event& e) {
    GeometricDiagram next = read_polyline(next_line);
    const std::vector<Passage> target = next.diagram.canonical().code;
    if (e.isotopy) {
      if (!(current_.code() == target)) obstruction("isotopy step changed the diagram");
      cur_ = std::move(next);
      return;
    }
    const CanonicalCode cc = cur_.diagram.canonical();
    ReidemeisterMove base;
    base.kind = e.kind;
    for (Point p : e.crossings) base.crossings.push_back(cc.relabel[cur_.crossing_at(j.to_host(p))]);
    for (Point p : e.edges) base.edges.push_back(cc.raw_to_canonical_edge(cur_.edge_at(j.to_host(p))));

    std::vector<ReidemeisterMove> candidates;
    if (e.kind == ReidemeisterKind::R1_create || e.kind == ReidemeisterKind::R2_create) {
      // When both points lie on one edge the moving strand may come first or
      // second along it, so both over flags are tried.
      for (int flags = 0; flags < 8; ++flags) {
        ReidemeisterMove m = base;
        m.sign = (flags & 1) ? -1 : 1;
        m.over = ((flags & 2) != 0) != (j.role == StrandRole::Under);
        m.order = (flags & 4) != 0;
        if (e.kind == ReidemeisterKind::R1_create && m.order) continue;
        candidates.push_back(m);
      }
    } else {
      candidates.push_back(base);
    }
    for (const auto& m : candidates) {
      PlanarDiagram result;
      try {
        result = apply_reidemeister(current_, m);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::IllegalMoveAtSite) throw;
        continue;
      }
      if (!(result.code() == target)) continue;
      steps_.push_back(m);
      lines_.push_back(next_line);
      states_.push_back(result);
      current_ = std::move(result);
      cur_ = std::move(next);
      return;
    }
    obstruction(std::string("no legal ") + to_string(e.kind) + " matches the next sweep state");
  }

  RealizationTrace& trace_;
  bool keep_frames_;
  int jump_ = 0;
  // This jump so far: states_[i + 1] is states_[i] after steps_[i].
  std::vector<PlanarDiagram> states_;
  std::vector<ReidemeisterMove> steps_;
  std::vector<Polyline> lines_;
  std::map<std::pair<int, ReidemeisterKind>, std::map<std::string, ReidemeisterMove>> reach_;
  GeometricDiagram cur_;
  PlanarDiagram current_;
};

}  // namespace

RealizationTrace realize(const GridDiagram& d, const CromwellMove& m, bool keep_frames) {
  RealizationTrace trace;
  trace.grid = d;
  trace.move = m;
  const std::vector<JumpSpec> jumps = jump_decomposition(d, m);
  trace.initial = to_planar(d).canonicalized();
  trace.sweep.resize(jumps.size());
  Sweep sweep(trace, keep_frames);
  sweep.reset(trace.initial);
  for (size_t i = 0; i < jumps.size(); ++i) {
    trace.jumps.push_back(sigma(jumps[i]));
    sweep.run(jumps[i], static_cast<int>(i), trace.jumps.back().sigma_simple());
  }
  trace.final = sweep.current();
  const PlanarDiagram target = to_planar(apply(d, m)).canonicalized();
  if (!(trace.final.code() == target.code())) obstruction("sweep does not end at the diagram of the moved grid");
  return trace;
}

PlanarDiagram replay(const RealizationTrace& trace) {
  PlanarDiagram p = trace.initial.canonicalized();
  for (size_t i = 0; i < trace.moves.size(); ++i) {
    p = apply_reidemeister(p, trace.moves[i]);
    if (!p.satisfies_euler()) {
      throw Error(ErrorCode::IllegalMoveAtSite, "move " + std::to_string(i) + " breaks the Euler relation");
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

ReidemeisterKind parse_kind(const std::string& name) {
  for (auto k : {ReidemeisterKind::R1_create, ReidemeisterKind::R1_delete, ReidemeisterKind::R2_create,
                 ReidemeisterKind::R2_delete, ReidemeisterKind::R3}) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown Reidemeister move '" + name + "'");
}

}  // namespace

Json to_json(const ReidemeisterMove& m) {
  Json site = Json::object();
  if (!m.crossings.empty()) {
    Json xs = Json::array();
    for (int x : m.crossings) xs.push_back(x + 1);  // labels as printed in gauss codes
    site["crossings"] = xs;
  }
  if (!m.edges.empty()) {
    site["edges"] = m.edges;
    site["over"] = m.over;
    if (m.kind == ReidemeisterKind::R2_create) site["order"] = m.order;
    site["sign"] = m.sign;
  }
  return Json{{"kind", to_string(m.kind)}, {"site", site}};
}

ReidemeisterMove reidemeister_from_json(const Json& j) {
  try {
    ReidemeisterMove m;
    m.kind = parse_kind(j.at("kind").get<std::string>());
    const Json& site = j.at("site");
    if (site.contains("crossings")) {
      for (int x : site["crossings"].get<std::vector<int>>()) m.crossings.push_back(x - 1);
    }
    if (site.contains("edges")) m.edges = site["edges"].get<std::vector<int>>();
    m.over = site.value("over", false);
    m.order = site.value("order", false);
    m.sign = site.value("sign", 1);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad Reidemeister move: ") + e.what());
  }
}

Json to_json(const RealizationTrace& t) {
  Json moves = Json::array();
  for (size_t i = 0; i < t.moves.size(); ++i) {
    Json m = to_json(t.moves[i]);
    m["jump"] = t.jump_of[i];
    moves.push_back(m);
  }
  Json counts = Json::object();
  for (auto k : {ReidemeisterKind::R1_create, ReidemeisterKind::R1_delete, ReidemeisterKind::R2_create,
                 ReidemeisterKind::R2_delete, ReidemeisterKind::R3}) {
    counts[to_string(k)] = t.count(k);
  }
  Json jumps = Json::array();
  for (size_t j = 0; j < t.jumps.size(); ++j) {
    Json s = to_json(t.jumps[j]);
    Json c = Json::object();
    for (auto k : {ReidemeisterKind::R1_create, ReidemeisterKind::R1_delete, ReidemeisterKind::R2_create,
                   ReidemeisterKind::R2_delete, ReidemeisterKind::R3}) {
      c[to_string(k)] = t.sweep_count(k, static_cast<int>(j));
    }
    s["sweep_counts"] = c;
    jumps.push_back(s);
  }
  return Json{{"grid", to_json(t.grid)},
              {"move", to_json(t.move)},
              {"initial", t.initial.gauss_code()},
              {"moves", moves},
              {"final_gauss", t.final.gauss_code()},
              {"counts", counts},
              {"jumps", jumps},
              {"termination", t.termination}};
}

RealizationTrace trace_from_json(const Json& j) {
  RealizationTrace t;
  try {
    if (j.contains("grid")) t.grid = grid_from_json(j["grid"]);
    if (j.contains("move")) t.move = move_from_json(j["move"]);
    t.initial = parse_gauss_code(j.at("initial").get<std::string>()).canonicalized();
    for (const Json& m : j.at("moves")) {
      t.moves.push_back(reidemeister_from_json(m));
      t.jump_of.push_back(m.value("jump", 0));
    }
    t.final = parse_gauss_code(j.at("final_gauss").get<std::string>()).canonicalized();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad trace: ") + e.what());
  }
  return t;
}

// ---------------------------------------------------------------------------
// Pictures

std::string render_svg(const Polyline& line) {
  const int m = static_cast<int>(line.points.size());
  int lo_x = 1 << 30, lo_y = 1 << 30, hi_x = -(1 << 30), hi_y = -(1 << 30);
  for (auto [x, y] : line.points) {
    lo_x = std::min(lo_x, x);
    lo_y = std::min(lo_y, y);
    hi_x = std::max(hi_x, x);
    hi_y = std::max(hi_y, y);
  }
  const int scale = 10, pad = 10;
  auto px = [&](int x) { return pad + (x - lo_x) * scale; };
  auto py = [&](int y) { return pad + (hi_y - y) * scale; };  // y grows upward
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * pad + (hi_x - lo_x) * scale
      << "\" height=\"" << 2 * pad + (hi_y - lo_y) * scale << "\">\n";
  // Paint in stacking order so every strand hides what passes beneath it.
  auto rank = [&](int i) {
    const bool vertical = line.points[i].first == line.points[(i + 1) % m].first;
    if (line.layer[i] != 1) return line.layer[i] == 0 ? 0 : 3;
    return vertical ? 2 : 1;
  };
  for (int level = 0; level < 4; ++level) {
    for (int i = 0; i < m; ++i) {
      if (rank(i) != level) continue;
      const auto [x1, y1] = line.points[i];
      const auto [x2, y2] = line.points[(i + 1) % m];
      const char* colour = line.layer[i] == 1 ? "black" : "#c0392b";
      out << "  <line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\"" << py(y2)
          << "\" stroke=\"white\" stroke-width=\"8\"/>\n";
      out << "  <line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\"" << py(y2)
          << "\" stroke=\"" << colour << "\" stroke-width=\"2\" stroke-linecap=\"round\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace gridknot
