#include "gridknot/planar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

namespace gridknot {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Rotation system of a code: ports in(p) = 2p (end of edge p-1) and
// out(p) = 2p+1 (start of edge p).
struct Rotation {
  std::vector<std::array<int, 4>> ring;  // by crossing
  std::vector<int> vertex, slot;         // by port
};

Rotation rotation_of(const std::vector<Passage>& code) {
  const int L = static_cast<int>(code.size());
  const int c = L / 2;
  std::vector<int> under(c, -1), over(c, -1);
  for (int i = 0; i < L; ++i) (code[i].over ? over : under)[code[i].crossing] = i;
  Rotation r;
  r.ring.resize(c);
  r.vertex.assign(2 * L, -1);
  r.slot.assign(2 * L, -1);
  for (int x = 0; x < c; ++x) {
    const int u = under[x], o = over[x];
    if (code[u].sign > 0) {
      r.ring[x] = {2 * u, 2 * o + 1, 2 * u + 1, 2 * o};
    } else {
      r.ring[x] = {2 * u, 2 * o, 2 * u + 1, 2 * o + 1};
    }
    for (int s = 0; s < 4; ++s) {
      r.vertex[r.ring[x][s]] = x;
      r.slot[r.ring[x][s]] = s;
    }
  }
  return r;
}

std::vector<std::vector<Dart>> faces_of(const std::vector<Passage>& code) {
  const int L = static_cast<int>(code.size());
  if (L == 0) return {{Dart{0, true}}, {Dart{0, false}}};
  const Rotation r = rotation_of(code);
  auto arrival = [&](Dart d) { return d.forward ? 2 * ((d.edge + 1) % L) : 2 * d.edge + 1; };
  auto departure = [&](int port) {
    const int p = port / 2;
    return (port & 1) ? Dart{p, true} : Dart{mod(p - 1, L), false};
  };
  auto id = [](Dart d) { return 2 * d.edge + (d.forward ? 0 : 1); };

  std::vector<char> seen(2 * L, 0);
  std::vector<std::vector<Dart>> faces;
  for (int e = 0; e < L; ++e) {
    for (bool fwd : {true, false}) {
      Dart d{e, fwd};
      if (seen[id(d)]) continue;
      std::vector<Dart> face;
      while (!seen[id(d)]) {
        seen[id(d)] = 1;
        face.push_back(d);
        const int port = arrival(d);
        const int v = r.vertex[port];
        d = departure(r.ring[v][(r.slot[port] + 3) % 4]);
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::vector<Passage> relabelled(std::vector<Passage> code) {
  std::map<int, int> label;
  for (auto& p : code) {
    auto [it, fresh] = label.try_emplace(p.crossing, static_cast<int>(label.size()));
    p.crossing = it->second;
  }
  return code;
}

bool planar(const std::vector<Passage>& code) {
  if (code.empty()) return true;
  const int c = static_cast<int>(code.size()) / 2;
  return c - 2 * c + static_cast<int>(faces_of(code).size()) == 2;
}

[[noreturn]] void illegal(const std::string& why) { throw Error(ErrorCode::IllegalMoveAtSite, why); }

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Passage> code) : code_(relabelled(std::move(code))) {
  const int L = static_cast<int>(code_.size());
  if (L % 2) throw Error(ErrorCode::ParseError, "gauss code has odd length");
  const int c = L / 2;
  std::vector<int> overs(c, 0), unders(c, 0), sign(c, 0);
  for (const auto& p : code_) {
    if (p.crossing >= c) throw Error(ErrorCode::ParseError, "crossing label occurs once");
    if (p.sign != 1 && p.sign != -1) throw Error(ErrorCode::ParseError, "sign must be +1 or -1");
    ++(p.over ? overs : unders)[p.crossing];
    if (sign[p.crossing] && sign[p.crossing] != p.sign) {
      throw Error(ErrorCode::ParseError, "crossing has two different signs");
    }
    sign[p.crossing] = p.sign;
  }
  for (int x = 0; x < c; ++x) {
    if (overs[x] != 1 || unders[x] != 1) {
      throw Error(ErrorCode::ParseError, "each crossing needs one over and one under passage");
    }
  }
}

std::vector<std::vector<Dart>> PlanarDiagram::faces() const { return faces_of(code_); }

bool PlanarDiagram::satisfies_euler() const { return planar(code_); }

std::pair<int, int> PlanarDiagram::edge_ends(int k) const {
  const int L = static_cast<int>(code_.size());
  if (L == 0) return {-1, -1};
  return {code_[mod(k, L)].crossing, code_[mod(k + 1, L)].crossing};
}

CanonicalCode PlanarDiagram::canonical() const {
  const int L = static_cast<int>(code_.size());
  CanonicalCode best;
  if (L == 0) return best;
  const int c = L / 2;
  std::vector<int> best_key;
  std::vector<int> label(c), key(L);
  for (bool rev : {false, true}) {
    for (int s = 0; s < L; ++s) {
      std::fill(label.begin(), label.end(), -1);
      int next = 0;
      bool worse = false, better = best_key.empty();
      for (int i = 0; i < L; ++i) {
        const Passage& p = code_[mod(rev ? s - i : s + i, L)];
        if (label[p.crossing] < 0) label[p.crossing] = next++;
        key[i] = 4 * label[p.crossing] + 2 * p.over + (p.sign > 0);
        if (!better) {
          if (key[i] > best_key[i]) { worse = true; break; }
          if (key[i] < best_key[i]) better = true;
        }
      }
      if (worse || !better) continue;
      best_key = key;
      best.start = s;
      best.reversed = rev;
      best.relabel = label;
    }
  }
  best.code.resize(L);
  for (int i = 0; i < L; ++i) {
    best.code[i] = {best_key[i] / 4, (best_key[i] & 2) != 0, (best_key[i] & 1) ? 1 : -1};
  }
  return best;
}

int CanonicalCode::raw_to_canonical_edge(int raw_edge) const {
  const int L = static_cast<int>(code.size());
  if (L == 0) return 0;
  return reversed ? mod(start - raw_edge - 1, L) : mod(raw_edge - start, L);
}

PlanarDiagram PlanarDiagram::canonicalized() const {
  PlanarDiagram p;
  p.code_ = canonical().code;
  return p;
}

std::string to_string(const std::vector<Passage>& code) {
  std::string out;
  for (size_t i = 0; i < code.size(); ++i) {
    if (i) out += ',';
    out += code[i].over ? 'O' : 'U';
    out += std::to_string(code[i].crossing + 1);
    out += code[i].sign > 0 ? '+' : '-';
  }
  return out;
}

std::string PlanarDiagram::gauss_code() const { return to_string(canonical().code); }

PlanarDiagram parse_gauss_code(const std::string& text) {
  std::vector<Passage> code;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    if (item.empty()) continue;
    if (item.size() < 3 || (item[0] != 'O' && item[0] != 'U') ||
        (item.back() != '+' && item.back() != '-')) {
      throw Error(ErrorCode::ParseError, "bad gauss code entry '" + item + "'");
    }
    int label = 0;
    try {
      label = std::stoi(item.substr(1, item.size() - 2));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad gauss code entry '" + item + "'");
    }
    code.push_back({label, item[0] == 'O', item.back() == '+' ? 1 : -1});
  }
  return PlanarDiagram(std::move(code));
}

// ---------------------------------------------------------------------------
// Geometry

namespace {

struct Segment {
  std::pair<int, int> a, b;
  bool vertical() const { return a.first == b.first; }
  int lo() const { return vertical() ? std::min(a.second, b.second) : std::min(a.first, b.first); }
  int hi() const { return vertical() ? std::max(a.second, b.second) : std::max(a.first, b.first); }
  int fixed() const { return vertical() ? a.first : a.second; }
  std::pair<int, int> dir() const {
    return {(b.first > a.first) - (b.first < a.first), (b.second > a.second) - (b.second < a.second)};
  }
  double distance(std::pair<int, int> p) const {
    return std::abs(p.first - a.first) + std::abs(p.second - a.second);
  }
  bool contains(std::pair<int, int> p) const {
    const int along = vertical() ? p.second : p.first;
    const int across = vertical() ? p.first : p.second;
    return across == fixed() && lo() <= along && along <= hi();
  }
};

[[noreturn]] void degenerate(const std::string& why) { throw Error(ErrorCode::DegenerateGeometry, why); }

}  // namespace

GeometricDiagram read_polyline(const Polyline& line) {
  const int m = static_cast<int>(line.points.size());
  if (m < 4 || static_cast<int>(line.layer.size()) != m) degenerate("polyline needs at least four corners");
  std::vector<Segment> seg(m);
  for (int i = 0; i < m; ++i) {
    seg[i] = {line.points[i], line.points[(i + 1) % m]};
    if (seg[i].a == seg[i].b) degenerate("zero-length segment");
    if (seg[i].a.first != seg[i].b.first && seg[i].a.second != seg[i].b.second) {
      degenerate("segment is not axis-parallel");
    }
  }
  struct Hit {
    int segment;
    double distance;
    int crossing;
    bool over;
  };
  std::vector<Hit> hits;
  std::vector<std::pair<int, int>> points;
  std::vector<int> signs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == m - 1);
      const Segment &s = seg[i], &t = seg[j];
      if (s.vertical() == t.vertical()) {
        if (s.fixed() != t.fixed()) continue;
        const int overlap = std::min(s.hi(), t.hi()) - std::max(s.lo(), t.lo());
        if (overlap > 0 || (!adjacent && overlap == 0)) degenerate("collinear segments meet");
        continue;
      }
      const Segment& v = s.vertical() ? s : t;
      const Segment& h = s.vertical() ? t : s;
      const int x = v.fixed(), y = h.fixed();
      const bool on_v = v.lo() <= y && y <= v.hi();
      const bool on_h = h.lo() <= x && x <= h.hi();
      if (!on_v || !on_h) continue;
      const bool inner = v.lo() < y && y < v.hi() && h.lo() < x && x < h.hi();
      if (!inner) {
        if (adjacent) continue;
        degenerate("segments touch without crossing");
      }
      const int vi = s.vertical() ? i : j, hi = s.vertical() ? j : i;
      bool v_over;
      if (line.layer[vi] == line.layer[hi]) {
        if (line.layer[vi] != 1) degenerate("moving strand crosses itself");
        v_over = true;
      } else {
        v_over = line.layer[vi] > line.layer[hi];
      }
      const auto od = v_over ? v.dir() : h.dir();
      const auto ud = v_over ? h.dir() : v.dir();
      const int sign = od.first * ud.second - od.second * ud.first > 0 ? 1 : -1;
      const int id = static_cast<int>(points.size());
      points.push_back({x, y});
      signs.push_back(sign);
      hits.push_back({vi, v.distance({x, y}), id, v_over});
      hits.push_back({hi, h.distance({x, y}), id, !v_over});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return std::tie(a.segment, a.distance) < std::tie(b.segment, b.distance);
  });
  // Label crossings by first appearance so the code is already normalized.
  std::vector<int> label(points.size(), -1);
  int next = 0;
  GeometricDiagram g;
  std::vector<Passage> code;
  for (const auto& h : hits) {
    if (label[h.crossing] < 0) label[h.crossing] = next++;
    code.push_back({label[h.crossing], h.over, signs[h.crossing]});
    g.passage_position.push_back({h.segment, h.distance});
  }
  g.crossing_points.resize(points.size());
  for (size_t k = 0; k < points.size(); ++k) g.crossing_points[label[k]] = points[k];
  g.diagram = PlanarDiagram(std::move(code));
  g.line = line;
  return g;
}

int GeometricDiagram::crossing_at(std::pair<int, int> p) const {
  for (size_t k = 0; k < crossing_points.size(); ++k) {
    if (crossing_points[k] == p) return static_cast<int>(k);
  }
  degenerate("no crossing at (" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")");
}

int GeometricDiagram::edge_at(std::pair<int, int> p) const {
  const int m = static_cast<int>(line.points.size());
  for (int i = 0; i < m; ++i) {
    const Segment s{line.points[i], line.points[(i + 1) % m]};
    if (!s.contains(p) || p == s.b) continue;
    const std::pair<int, double> at{i, s.distance(p)};
    const int L = static_cast<int>(passage_position.size());
    if (L == 0) return 0;
    const int before = static_cast<int>(
        std::lower_bound(passage_position.begin(), passage_position.end(), at) - passage_position.begin());
    if (before < L && passage_position[before] == at) degenerate("point is a crossing");
    return before == 0 ? L - 1 : before - 1;
  }
  degenerate("point is not on the diagram");
}

Polyline grid_polyline(const GridDiagram& d) {
  const int n = d.size();
  Polyline line;
  int x = 1, y = d.column(1).lo;
  do {
    line.points.push_back({4 * x, 4 * y});
    const Span col = d.column(x);
    y = col.lo == y ? col.hi : col.lo;
    line.points.push_back({4 * x, 4 * y});
    const Span row = d.row(y);
    x = row.lo == x ? row.hi : row.lo;
  } while (!(x == 1 && y == d.column(1).lo));
  if (static_cast<int>(line.points.size()) != 2 * n) {
    throw Error(ErrorCode::NotAKnot, "diagram has more than one component");
  }
  line.layer.assign(line.points.size(), 1);
  return line;
}

PlanarDiagram to_planar(const GridDiagram& d) { return read_polyline(grid_polyline(d)).diagram; }

// ---------------------------------------------------------------------------
// Reidemeister moves

const char* to_string(ReidemeisterKind kind) {
  switch (kind) {
    case ReidemeisterKind::R1_create: return "R1_create";
    case ReidemeisterKind::R1_delete: return "R1_delete";
    case ReidemeisterKind::R2_create: return "R2_create";
    case ReidemeisterKind::R2_delete: return "R2_delete";
    case ReidemeisterKind::R3: return "R3";
  }
  return "?";
}

namespace {

// Edges of a face of the given size whose ends are exactly the pairs of
// `crossings`, or empty when there is none.
std::vector<int> find_face(const std::vector<Passage>& code, const std::vector<int>& crossings) {
  const int L = static_cast<int>(code.size());
  const size_t k = crossings.size();
  std::vector<std::pair<int, int>> want;
  if (k == 2) want = {std::minmax(crossings[0], crossings[1]), std::minmax(crossings[0], crossings[1])};
  for (size_t i = 0; k == 3 && i < 3; ++i) want.push_back(std::minmax(crossings[i], crossings[(i + 1) % 3]));
  std::sort(want.begin(), want.end());
  for (const auto& face : faces_of(code)) {
    if (face.size() != k) continue;
    std::vector<int> at;
    std::vector<std::pair<int, int>> pairs;
    for (const Dart& d : face) {
      const int a = code[d.edge].crossing, b = code[(d.edge + 1) % L].crossing;
      at.push_back(d.edge);
      pairs.push_back(std::minmax(a, b));
    }
    std::sort(pairs.begin(), pairs.end());
    if (pairs == want) return at;
  }
  return {};
}

// The two edges of a removable bigon on {x, y}, or empty.
std::vector<int> find_bigon(const std::vector<Passage>& code, int x, int y) {
  const int L = static_cast<int>(code.size());
  const auto edges = find_face(code, {x, y});
  if (edges.size() != 2 || edges[0] == edges[1]) return {};
  const Passage &a0 = code[edges[0]], &a1 = code[(edges[0] + 1) % L];
  const Passage &b0 = code[edges[1]], &b1 = code[(edges[1] + 1) % L];
  if (a0.over != a1.over || b0.over != b1.over || a0.over == b0.over) return {};
  if (a0.sign == a1.sign) return {};
  return edges;
}

std::vector<Passage> without(const std::vector<Passage>& code, const std::vector<int>& labels) {
  std::vector<Passage> out;
  for (const auto& p : code) {
    if (std::count(labels.begin(), labels.end(), p.crossing) == 0) out.push_back(p);
  }
  return out;
}

PlanarDiagram finish(std::vector<Passage> code) {
  PlanarDiagram p(std::move(code));
  if (!p.satisfies_euler()) illegal("move produces a non-planar diagram");
  return p.canonicalized();
}

}  // namespace

PlanarDiagram apply_reidemeister(const PlanarDiagram& p, const ReidemeisterMove& m) {
  const auto& code = p.code();
  const int L = static_cast<int>(code.size());
  const int c = L / 2;
  for (int x : m.crossings) {
    if (x < 0 || x >= c) illegal("crossing label out of range");
  }
  for (int e : m.edges) {
    if (e < 0 || e >= p.edge_count()) illegal("edge index out of range");
  }
  if (m.sign != 1 && m.sign != -1) illegal("sign must be +1 or -1");

  switch (m.kind) {
    case ReidemeisterKind::R1_delete: {
      if (m.crossings.size() != 1) illegal("R1_delete needs one crossing");
      const int x = m.crossings[0];
      bool kink = false;
      for (int i = 0; i < L; ++i) {
        if (code[i].crossing == x && code[(i + 1) % L].crossing == x) kink = true;
      }
      if (!kink) illegal("crossing " + std::to_string(x + 1) + " does not bound a monogon");
      return finish(without(code, {x}));
    }
    case ReidemeisterKind::R1_create: {
      if (m.edges.size() != 1) illegal("R1_create needs one edge");
      std::vector<Passage> out(code.begin(), code.end());
      const int at = L == 0 ? 0 : m.edges[0] + 1;
      out.insert(out.begin() + at, {{c, m.over, m.sign}, {c, !m.over, m.sign}});
      return finish(std::move(out));
    }
    case ReidemeisterKind::R2_delete: {
      if (m.crossings.size() != 2 || m.crossings[0] == m.crossings[1]) illegal("R2_delete needs two crossings");
      if (find_bigon(code, m.crossings[0], m.crossings[1]).empty()) {
        illegal("crossings do not bound a removable bigon");
      }
      return finish(without(code, m.crossings));
    }
    case ReidemeisterKind::R2_create: {
      if (m.edges.size() != 2) illegal("R2_create needs two edges");
      const int x = c, y = c + 1;
      const std::vector<Passage> on_p{{x, m.over, m.sign}, {y, m.over, -m.sign}};
      std::vector<Passage> on_q{{x, !m.over, m.sign}, {y, !m.over, -m.sign}};
      if (!m.order) std::swap(on_q[0], on_q[1]);
      std::vector<Passage> out;
      auto insert = [&](int e) {
        if (e == m.edges[0]) out.insert(out.end(), on_p.begin(), on_p.end());
        if (e == m.edges[1]) out.insert(out.end(), on_q.begin(), on_q.end());
      };
      if (L == 0) insert(0);
      for (int i = 0; i < L; ++i) {
        out.push_back(code[i]);
        insert(i);
      }
      if (!planar(relabelled(out)) || find_bigon(out, x, y).empty()) illegal("edges do not share a face this way");
      return finish(std::move(out));
    }
    case ReidemeisterKind::R3: {
      if (m.crossings.size() != 3) illegal("R3 needs three crossings");
      const int a = m.crossings[0], b = m.crossings[1], z = m.crossings[2];
      if (a == b || b == z || a == z) illegal("R3 needs three distinct crossings");
      const auto edges = find_face(code, m.crossings);
      if (edges.size() != 3) illegal("crossings do not bound a triangle face");
      bool top = false;
      for (int e : edges) top = top || (code[e].over && code[(e + 1) % L].over);
      if (!top) illegal("no strand of the triangle passes over the other two");
      std::vector<Passage> out = code;
      for (int e : edges) std::swap(out[e], out[(e + 1) % L]);
      return finish(std::move(out));
    }
  }
  illegal("unknown move");
}

}  // namespace gridknot

namespace gridknot {

std::vector<std::pair<ReidemeisterMove, PlanarDiagram>> reidemeister_neighbours(
    const PlanarDiagram& p, std::optional<ReidemeisterKind> only) {
  const int c = p.crossing_count();
  const int edges = p.edge_count();
  std::vector<ReidemeisterMove> candidates;
  auto add = [&](ReidemeisterKind kind, std::vector<int> crossings, std::vector<int> es, bool over, bool order,
                 int sign) {
    if (!only || *only == kind) candidates.push_back({kind, std::move(crossings), std::move(es), over, order, sign});
  };
  for (int x = 0; x < c; ++x) add(ReidemeisterKind::R1_delete, {x}, {}, false, false, 1);
  for (int x = 0; x < c; ++x) {
    for (int y = x + 1; y < c; ++y) {
      add(ReidemeisterKind::R2_delete, {x, y}, {}, false, false, 1);
      for (int z = y + 1; z < c; ++z) add(ReidemeisterKind::R3, {x, y, z}, {}, false, false, 1);
    }
  }
  for (int e = 0; e < edges; ++e) {
    for (int sign : {1, -1}) {
      for (bool over : {false, true}) add(ReidemeisterKind::R1_create, {}, {e}, over, false, sign);
    }
  }
  // Only edges on a common face can be pushed across each other.
  std::set<std::pair<int, int>> pairs;
  if (!only || *only == ReidemeisterKind::R2_create) {
    for (const auto& face : p.faces()) {
      for (const Dart& u : face) {
        for (const Dart& v : face) pairs.insert({u.edge, v.edge});
      }
    }
  }
  for (auto [e, f] : pairs) {
    for (int flags = 0; flags < 8; ++flags) {
      add(ReidemeisterKind::R2_create, {}, {e, f}, flags & 1, flags & 2, (flags & 4) ? -1 : 1);
    }
  }
  std::vector<std::pair<ReidemeisterMove, PlanarDiagram>> out;
  for (auto& m : candidates) {
    try {
      PlanarDiagram q = apply_reidemeister(p, m);
      out.emplace_back(std::move(m), std::move(q));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::IllegalMoveAtSite) throw;
    }
  }
  return out;
}

}  // namespace gridknot
