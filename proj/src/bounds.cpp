#include "gridknot/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gridknot {

using Point = std::pair<int, int>;

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::ExteriorExchange: return "exterior_exchange";
    case BoundKind::ExteriorMerge: return "exterior_merge";
    case BoundKind::Rotation: return "rotation";
  }
  return "?";
}

BoundKind parse_bound_kind(const std::string& name) {
  for (BoundKind k : {BoundKind::ExteriorExchange, BoundKind::ExteriorMerge, BoundKind::Rotation}) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorCode::UnknownFormat, "unknown move kind '" + name + "'");
}

BoundKind bound_kind(const CromwellMove& m) {
  switch (m.kind) {
    case MoveKind::ExteriorExchange: return BoundKind::ExteriorExchange;
    case MoveKind::ExteriorMerge: return BoundKind::ExteriorMerge;
    case MoveKind::Rotation: return BoundKind::Rotation;
    default: throw Error(ErrorCode::InapplicableMove, describe(m) + " is not realized by jumps");
  }
}

int theorem3_bound(int n, BoundKind kind) {
  if (n < 2) throw Error(ErrorCode::SizeError, "n must be at least 2");
  const int eps = n % 2;
  const int exchange = 3 * n * n - 4 * n - 4 - 3 * eps;
  switch (kind) {
    case BoundKind::ExteriorExchange: return exchange;
    case BoundKind::ExteriorMerge: return exchange / 2;
    case BoundKind::Rotation: return (3 * n * n - 4 * n - 2 - 3 * eps) / 2;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Jump geometry

Point JumpSpec::to_host(Point p) const {
  const int n4 = 4 * (host.size() + 1);
  const int tag = inverse_symmetry(frame_tag);
  auto [x, y] = p;
  if (tag & 1) x = n4 - x;
  if (tag & 2) y = n4 - y;
  if (tag & 4) std::swap(x, y);
  return {x, y};
}

std::vector<Point> JumpSpec::static_path() const {
  const GridDiagram f = frame();
  const int lo_a = end_a / 4, lo_b = end_b / 4;  // corners where s meets the rest
  std::vector<Point> path;
  if (end_b % 4) path.push_back({4 * b, end_b});
  int x = b, y = lo_b;
  path.push_back({4 * x, 4 * y});
  for (int guard = 0; guard <= 2 * f.size(); ++guard) {
    const Span row = f.row(y);
    x = row.lo == x ? row.hi : row.lo;
    path.push_back({4 * x, 4 * y});
    if (x == a && y == lo_a) {
      if (end_a % 4) path.push_back({4 * a, end_a});
      return path;
    }
    if (x == a || x == b) break;
    const Span col = f.column(x);
    y = col.lo == y ? col.hi : col.lo;
    path.push_back({4 * x, 4 * y});
  }
  throw Error(ErrorCode::NotAKnot, "diagram has more than one component");
}

Polyline JumpSpec::state(int left, int right, int jog) const {
  std::vector<Point> pts = static_path();
  const int fixed = static_cast<int>(pts.size()) - 1;  // segments before this index are static
  pts.push_back({4 * a, left});
  pts.push_back({jog, left});
  pts.push_back({jog, right});
  pts.push_back({4 * b, right});
  const int moving = role == StrandRole::Over ? 2 : 0;
  Polyline line;
  const int m = static_cast<int>(pts.size());
  for (int i = 0; i < m; ++i) {
    if (pts[i] == pts[(i + 1) % m]) continue;
    line.points.push_back(to_host(pts[i]));
    line.layer.push_back(i < fixed ? 1 : moving);
  }
  return line;
}

std::vector<Point> JumpSpec::s_path() const {
  std::vector<Point> out;
  for (Point p : std::vector<Point>{{4 * a, end_a}, {4 * a, 4 * r0}, {4 * b, 4 * r0}, {4 * b, end_b}}) {
    out.push_back(to_host(p));
  }
  return out;
}

std::vector<Point> JumpSpec::u_path() const {
  std::vector<Point> out;
  for (Point p : std::vector<Point>{{4 * a, end_a}, {4 * a, floor}, {4 * b, floor}, {4 * b, end_b}}) {
    out.push_back(to_host(p));
  }
  return out;
}

std::vector<Point> JumpSpec::q_polygon() const {
  std::vector<Point> out;
  for (Point p : std::vector<Point>{{4 * a, floor}, {4 * b, floor}, {4 * b, 4 * r0}, {4 * a, 4 * r0}}) {
    out.push_back(to_host(p));
  }
  return out;
}

namespace {

// Frame diagram after moving row r0 below row 1.
GridDiagram jumped(const GridDiagram& f, int r0) {
  std::vector<Corner> cs;
  for (auto [x, y] : corners(f)) cs.push_back({x, y == r0 ? 1 : (y < r0 ? y + 1 : y)});
  return from_corners(f.size(), cs);
}

// merge_column: frame column spanning the whole height whose end is
// carried along (exterior merges), or 0.
JumpSpec make_jump(const GridDiagram& host, int tag, int r0, int merge_column) {
  JumpSpec j;
  j.host = host;
  j.frame_tag = tag;
  j.r0 = r0;
  j.role = (tag & 4) ? StrandRole::Under : StrandRole::Over;
  const GridDiagram f = j.frame();
  const Span row = f.row(r0);
  j.a = row.lo;
  j.b = row.hi;
  auto other_end = [&](int x) {
    const Span c = f.column(x);
    return c.lo == r0 ? c.hi : c.lo;
  };
  const int lo_a = other_end(j.a), lo_b = other_end(j.b);
  if (lo_a > r0 || lo_b > r0) throw Error(ErrorCode::DegenerateGeometry, "jumped edge is not extremal");
  j.end_a = 4 * lo_a;
  j.end_b = 4 * lo_b;
  j.floor = 2;
  if (merge_column) {
    // When the far end of the jumped edge lies over the bottom edge, u stops
    // just above row 1 so that s and u bound an embedded disk.
    const int t = merge_column == j.a ? j.b : j.a;
    if (f.row(1).strictly_contains(t)) {
      (merge_column == j.a ? j.end_a : j.end_b) = 6;
      j.floor = 6;
    }
  } else {
    j.result = transform(jumped(f, r0), inverse_symmetry(tag));
  }
  return j;
}

int rotation_tag(Direction d) {
  switch (d) {
    case Direction::TopToBottom: return 0;
    case Direction::BottomToTop: return 2;
    case Direction::RightToLeft: return 4;
    case Direction::LeftToRight: return 5;
  }
  return 0;
}

}  // namespace

std::vector<JumpSpec> jump_decomposition(const GridDiagram& d, const CromwellMove& m) {
  bound_kind(m);
  if (auto why = inapplicable_reason(d, m)) throw Error(ErrorCode::InapplicableMove, *why);
  const int n = d.size();
  switch (m.kind) {
    case MoveKind::Rotation:
      return {make_jump(d, rotation_tag(m.direction), n, 0)};
    case MoveKind::ExteriorMerge: {
      const int tag = m.axis == Axis::Horizontal ? (m.flag ? 2 : 0) : (m.flag ? 5 : 4);
      JumpSpec j = make_jump(d, tag, n, m.level);
      j.result = apply(d, m);
      return {j};
    }
    case MoveKind::ExteriorExchange: {
      // The longer extremal edge jumps first; ties go to the top (right).
      const bool horizontal = m.axis == Axis::Horizontal;
      const Span high = horizontal ? d.row(n) : d.column(n);
      const Span low = horizontal ? d.row(1) : d.column(1);
      const bool high_first = high.length() >= low.length();
      const int first = horizontal ? (high_first ? 0 : 2) : (high_first ? 4 : 5);
      const int second = horizontal ? (high_first ? 2 : 0) : (high_first ? 5 : 4);
      JumpSpec j1 = make_jump(d, first, n, 0);
      JumpSpec j2 = make_jump(j1.result, second, n - 1, 0);
      return {j1, j2};
    }
    default: break;
  }
  throw Error(ErrorCode::InapplicableMove, describe(m) + " is not realized by jumps");
}

// ---------------------------------------------------------------------------
// Counting on D_Q

namespace {

enum class NodeType { Inner, SInterior, SEnd, UInterior };

struct Node {
  NodeType type;
  Point at;
};

struct Edge {
  int from, to;  // node ids
  std::vector<Point> points;
};

Point direction(Point from, Point to) {
  return {(to.first > from.first) - (to.first < from.first), (to.second > from.second) - (to.second < from.second)};
}

// Ray casting along +x; p must not share a coordinate with any vertex.
bool inside(const std::vector<Point>& polygon, Point p) {
  bool in = false;
  const size_t m = polygon.size();
  for (size_t i = 0; i < m; ++i) {
    const Point a = polygon[i], b = polygon[(i + 1) % m];
    if (a.first != b.first || a.first <= p.first) continue;
    if (std::min(a.second, b.second) < p.second && p.second < std::max(a.second, b.second)) in = !in;
  }
  return in;
}

}  // namespace

SigmaBreakdown sigma(const JumpSpec& j) {
  const GridDiagram f = j.frame();
  const int xa = 4 * j.a, xb = 4 * j.b, top = 4 * j.r0, floor = j.floor;
  auto strictly_inside = [&](Point p) {
    return xa < p.first && p.first < xb && floor < p.second && p.second < top;
  };

  std::map<Point, int> inner;  // crossing point -> node id
  std::vector<Node> nodes;
  SigmaBreakdown s;
  for (const Crossing& c : crossings(f)) {
    const Point p{4 * c.column, 4 * c.row};
    if (!strictly_inside(p)) continue;
    inner[p] = static_cast<int>(nodes.size());
    nodes.push_back({NodeType::Inner, p});
    ++s.V;
  }
  auto side_type = [&](Point p) {
    const int end = p.first == xa ? j.end_a : j.end_b;
    return p.second > end ? NodeType::SInterior : NodeType::UInterior;
  };

  // Walk the static path, cutting it at inner crossings and at points of
  // the boundary of Q.
  const std::vector<Point> path = j.static_path();
  std::vector<int> seq;              // node ids along the path
  std::vector<std::vector<Point>> between;  // corners between consecutive nodes
  auto add_node = [&](int id) {
    seq.push_back(id);
    between.emplace_back();
  };
  nodes.push_back({NodeType::SEnd, path.front()});
  add_node(static_cast<int>(nodes.size()) - 1);
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const Point p = path[i], q = path[i + 1];
    std::vector<std::pair<int, int>> cuts;  // (distance, node id)
    const bool vertical = p.first == q.first;
    const int lo = vertical ? std::min(p.second, q.second) : std::min(p.first, q.first);
    const int hi = vertical ? std::max(p.second, q.second) : std::max(p.first, q.first);
    for (const auto& [pt, id] : inner) {
      const int along = vertical ? pt.second : pt.first;
      const int across = vertical ? pt.first : pt.second;
      if (across == (vertical ? p.first : p.second) && lo < along && along < hi) {
        cuts.push_back({std::abs(along - (vertical ? p.second : p.first)), id});
      }
    }
    if (!vertical && floor < p.second && p.second < top) {
      for (int x : {xa, xb}) {
        if (lo < x && x < hi) {
          nodes.push_back({side_type({x, p.second}), {x, p.second}});
          cuts.push_back({std::abs(x - p.first), static_cast<int>(nodes.size()) - 1});
        }
      }
    }
    std::sort(cuts.begin(), cuts.end());
    for (const auto& [dist, id] : cuts) add_node(id);
    if (i + 2 < path.size()) between.back().push_back(q);
  }
  nodes.push_back({NodeType::SEnd, path.back()});
  add_node(static_cast<int>(nodes.size()) - 1);

  std::vector<Edge> edges;
  for (size_t k = 0; k + 1 < seq.size(); ++k) {
    std::vector<Point> pts{nodes[seq[k]].at};
    for (const Point& c : between[k]) pts.push_back(c);
    pts.push_back(nodes[seq[k + 1]].at);
    const Point mid{(pts[0].first + pts[1].first) / 2, (pts[0].second + pts[1].second) / 2};
    if (!strictly_inside(mid)) continue;
    edges.push_back({seq[k], seq[k + 1], std::move(pts)});
  }

  s.E = static_cast<int>(edges.size());
  std::vector<int> sv(nodes.size(), 0);
  auto is_s = [&](int id) { return nodes[id].type == NodeType::SInterior || nodes[id].type == NodeType::SEnd; };
  for (const Edge& e : edges) {
    for (int id : {e.from, e.to}) {
      if (nodes[id].type != NodeType::Inner) ++s.boundary_points;
    }
    const NodeType a = nodes[e.from].type, b = nodes[e.to].type;
    if (!is_s(e.from) && !is_s(e.to)) ++s.E_i;
    if (a == NodeType::SInterior && b == NodeType::SInterior) ++s.E_ss;
    if ((a == NodeType::SEnd) != (b == NodeType::SEnd)) ++s.E_boundary;
    if (a == NodeType::Inner && b == NodeType::SInterior) ++sv[e.from];
    if (b == NodeType::Inner && a == NodeType::SInterior) ++sv[e.to];
  }
  for (size_t v = 0; v < nodes.size(); ++v) {
    if (nodes[v].type != NodeType::Inner) continue;
    s.E_s += std::max(0, sv[v] - 2);
    if (sv[v] == 2) ++s.sv2_vertices;
  }

  // Components of D_Q.
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) parent[find(e.from)] = find(e.to);

  // Position along s, from (a, end_a) over the top to (b, end_b).
  auto s_param = [&](Point p) {
    if (p.first == xa) return p.second - j.end_a;
    return (top - j.end_a) + (xb - xa) + (top - p.second);
  };
  std::vector<char> matched(nodes.size(), 0);
  for (size_t v = 0; v < nodes.size(); ++v) {
    if (nodes[v].type != NodeType::Inner || sv[v] != 2) continue;
    const int comp = find(static_cast<int>(v));
    if (matched[comp]) continue;
    std::vector<const Edge*> to_s, others;
    std::vector<std::vector<Point>> arms_from_v;  // other arms as point lists from v
    for (const Edge& e : edges) {
      const bool at_from = e.from == static_cast<int>(v), at_to = e.to == static_cast<int>(v);
      if (!at_from && !at_to) continue;
      const int other = at_from ? e.to : e.from;
      if (nodes[other].type == NodeType::SInterior && !(at_from && at_to)) {
        to_s.push_back(&e);
        continue;
      }
      if (at_from) arms_from_v.push_back(e.points);
      if (at_to) arms_from_v.push_back(std::vector<Point>(e.points.rbegin(), e.points.rend()));
    }
    if (to_s.size() != 2) continue;
    auto from_v = [&](const Edge* e) {
      return e->from == static_cast<int>(v) ? e->points : std::vector<Point>(e->points.rbegin(), e->points.rend());
    };
    std::vector<Point> pe = from_v(to_s[0]), pf = from_v(to_s[1]);
    int te = s_param(pe.back()), tf = s_param(pf.back());
    if (te > tf) {
      std::swap(pe, pf);
      std::swap(te, tf);
    }
    // t must not carry other vertices of this component.
    bool clean = true;
    for (size_t w = 0; w < nodes.size() && clean; ++w) {
      if (!is_s(static_cast<int>(w)) || find(static_cast<int>(w)) != comp) continue;
      const int tw = s_param(nodes[w].at);
      if (te < tw && tw < tf) clean = false;
    }
    if (!clean) continue;
    std::vector<Point> region = pe;
    const Point corner_a{xa, top}, corner_b{xb, top};
    for (const Point& c : {corner_a, corner_b}) {
      const int tc = s_param(c);
      if (te < tc && tc < tf) region.push_back(c);
    }
    for (auto it = pf.rbegin(); it != pf.rend(); ++it) region.push_back(*it);
    bool enclosed = !arms_from_v.empty();
    for (const auto& arm : arms_from_v) {
      // A point beside the arm near v, off every grid line.
      const Point d = direction(arm[0], arm[1]);
      const Point probe{arm[0].first + 3 * d.first + (d.first ? 0 : 1),
                        arm[0].second + 3 * d.second + (d.second ? 0 : 1)};
      if (!inside(region, probe)) enclosed = false;
    }
    if (enclosed) {
      matched[comp] = 1;
      ++s.E_svs;
    }
  }
  return s;
}

Theorem3Report verify_theorem3(const GridDiagram& d, const CromwellMove& m) {
  Theorem3Report r;
  r.kind = bound_kind(m);
  r.n = d.size();
  r.bound = theorem3_bound(r.n, r.kind);
  for (const JumpSpec& j : jump_decomposition(d, m)) {
    r.jumps.push_back(sigma(j));
    r.total += r.jumps.back().sigma_simple();
  }
  r.holds = r.total <= r.bound;
  return r;
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const SigmaBreakdown& s) {
  return Json{{"V", s.V},
              {"E", s.E},
              {"E_i", s.E_i},
              {"E_ss", s.E_ss},
              {"E_boundary", s.E_boundary},
              {"E_s", s.E_s},
              {"E_svs", s.E_svs},
              {"boundary_points", s.boundary_points},
              {"sigma_simple", s.sigma_simple()},
              {"sigma_strong", s.sigma_strong()},
              {"sigma_no_r1", s.sigma_no_r1()},
              {"no_r1_valid", s.no_r1_valid()}};
}

namespace {

Json points_json(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (auto [x, y] : pts) out.push_back({x / 4.0, y / 4.0});
  return out;
}

}  // namespace

Json to_json(const JumpSpec& j) {
  return Json{{"frame_tag", j.frame_tag},
              {"strand_role", j.role == StrandRole::Over ? "over" : "under"},
              {"s", points_json(j.s_path())},
              {"u", points_json(j.u_path())},
              {"Q", points_json(j.q_polygon())},
              {"result", to_json(j.result)}};
}

Json to_json(const Theorem3Report& r) {
  Json jumps = Json::array();
  for (const auto& s : r.jumps) jumps.push_back(to_json(s));
  return Json{{"kind", to_string(r.kind)}, {"n", r.n},        {"jumps", jumps},
              {"total", r.total},          {"bound", r.bound}, {"slack", r.slack()},
              {"holds", r.holds}};
}

}  // namespace gridknot
