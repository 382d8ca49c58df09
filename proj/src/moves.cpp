#include "gridknot/moves.hpp"

#include <algorithm>

namespace gridknot {

CromwellMove interior_exchange(Axis axis, int level) {
  return {.kind = MoveKind::InteriorExchange, .axis = axis, .level = level};
}
CromwellMove exterior_exchange(Axis axis) {
  return {.kind = MoveKind::ExteriorExchange, .axis = axis};
}
CromwellMove interior_merge(Axis axis, int level) {
  return {.kind = MoveKind::InteriorMerge, .axis = axis, .level = level};
}
CromwellMove exterior_merge(Axis axis, int level, bool place_high) {
  return {.kind = MoveKind::ExteriorMerge, .axis = axis, .level = level, .flag = place_high};
}
CromwellMove divide(Axis axis, int level, int insert_at, bool low_end_high, bool exterior) {
  return {.kind = MoveKind::Divide,
          .axis = axis,
          .level = level,
          .insert_at = insert_at,
          .flag = low_end_high,
          .exterior = exterior};
}
CromwellMove rotation(Direction direction) {
  const bool horizontal =
      direction == Direction::TopToBottom || direction == Direction::BottomToTop;
  return {.kind = MoveKind::Rotation,
          .axis = horizontal ? Axis::Horizontal : Axis::Vertical,
          .direction = direction};
}

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::InteriorMerge: return "InteriorMerge";
    case MoveKind::ExteriorMerge: return "ExteriorMerge";
    case MoveKind::Divide: return "Divide";
    case MoveKind::InteriorExchange: return "InteriorExchange";
    case MoveKind::ExteriorExchange: return "ExteriorExchange";
    case MoveKind::Rotation: return "Rotation";
  }
  return "?";
}

const char* to_string(Axis axis) { return axis == Axis::Horizontal ? "Horizontal" : "Vertical"; }

const char* to_string(Direction direction) {
  switch (direction) {
    case Direction::TopToBottom: return "top_to_bottom";
    case Direction::BottomToTop: return "bottom_to_top";
    case Direction::LeftToRight: return "left_to_right";
    case Direction::RightToLeft: return "right_to_left";
  }
  return "?";
}

std::string describe(const CromwellMove& m) {
  std::string s = std::string(to_string(m.kind)) + "(" + to_string(m.axis);
  switch (m.kind) {
    case MoveKind::Rotation: s += std::string(", ") + to_string(m.direction); break;
    case MoveKind::ExteriorExchange: break;
    case MoveKind::Divide:
      s += ", " + std::to_string(m.level) + ", at " + std::to_string(m.insert_at) +
           (m.flag ? ", low-high" : ", low-low") + (m.exterior ? ", exterior" : "");
      break;
    case MoveKind::ExteriorMerge:
      s += ", " + std::to_string(m.level) + (m.flag ? ", high" : ", low");
      break;
    default: s += ", " + std::to_string(m.level);
  }
  return s + ")";
}

bool is_exterior(const CromwellMove& m) {
  return m.kind == MoveKind::ExteriorExchange || m.kind == MoveKind::ExteriorMerge ||
         m.kind == MoveKind::Rotation || (m.kind == MoveKind::Divide && m.exterior);
}

Interleaving interleaved(Span a, Span b) {
  if (a.lo == b.lo || a.lo == b.hi || a.hi == b.lo || a.hi == b.hi) {
    return Interleaving::SharedEndpoint;
  }
  if (b.lo < a.lo) std::swap(a, b);
  if (a.hi < b.lo) return Interleaving::Disjoint;
  return b.hi < a.hi ? Interleaving::Nested : Interleaving::Interleaved;
}

const char* to_string(Interleaving relation) {
  switch (relation) {
    case Interleaving::Interleaved: return "Interleaved";
    case Interleaving::Nested: return "Nested";
    case Interleaving::Disjoint: return "Disjoint";
    case Interleaving::SharedEndpoint: return "SharedEndpoint";
  }
  return "?";
}

namespace {

constexpr int kTranspose = 4;

bool exchangeable(Span a, Span b) {
  const Interleaving r = interleaved(a, b);
  return r == Interleaving::Nested || r == Interleaving::Disjoint;
}

GridDiagram relabel_rows(const GridDiagram& d, auto&& row_map) {
  std::vector<Corner> pts = corners(d);
  for (auto& [x, y] : pts) y = row_map(y);
  return from_corners(d.size(), pts);
}

// Everything below works on rows; vertical-axis moves are reduced to these by
// transposing the diagram.

std::optional<std::string> horizontal_reason(const GridDiagram& d, const CromwellMove& m) {
  const int n = d.size();
  switch (m.kind) {
    case MoveKind::InteriorExchange:
      if (m.level < 1 || m.level >= n) return "level out of range";
      if (!exchangeable(d.row(m.level), d.row(m.level + 1))) {
        return std::string("edges at levels ") + std::to_string(m.level) + " and " +
               std::to_string(m.level + 1) + " are " +
               to_string(interleaved(d.row(m.level), d.row(m.level + 1)));
      }
      return std::nullopt;
    case MoveKind::ExteriorExchange:
      if (n < 3) return "exterior exchange needs at least three levels";
      if (!exchangeable(d.row(1), d.row(n))) {
        return std::string("extremal edges are ") + to_string(interleaved(d.row(1), d.row(n)));
      }
      return std::nullopt;
    case MoveKind::InteriorMerge: {
      if (n <= 2) return "merging would leave fewer than two edges";
      if (m.level < 1 || m.level > n) return "edge index out of range";
      const Span c = d.column(m.level);
      if (c.length() != 1) return "connecting edge does not have length 1";
      const Span lower = d.row(c.lo), upper = d.row(c.hi);
      const int p = lower.lo == m.level ? lower.hi : lower.lo;
      const int q = upper.lo == m.level ? upper.hi : upper.lo;
      if (p == q) return "merged edge would be degenerate";
      return std::nullopt;
    }
    case MoveKind::ExteriorMerge: {
      if (n <= 2) return "merging would leave fewer than two edges";
      if (m.level < 1 || m.level > n) return "edge index out of range";
      const Span c = d.column(m.level);
      if (c.lo != 1 || c.hi != n) return "connecting edge does not join the extremal edges";
      const Span bottom = d.row(1), top = d.row(n);
      const int p = bottom.lo == m.level ? bottom.hi : bottom.lo;
      const int q = top.lo == m.level ? top.hi : top.lo;
      if (p == q) return "merged edge would be degenerate";
      return std::nullopt;
    }
    case MoveKind::Divide:
      if (m.level < 1 || m.level > n) return "edge index out of range";
      if (m.insert_at < 1 || m.insert_at > n + 1) return "insert position out of range";
      if (m.exterior && m.level != 1 && m.level != n) return "exterior divide needs an extremal edge";
      return std::nullopt;
    case MoveKind::Rotation:
      return std::nullopt;
  }
  return "unknown move";
}

GridDiagram apply_horizontal(const GridDiagram& d, const CromwellMove& m) {
  const int n = d.size();
  switch (m.kind) {
    case MoveKind::InteriorExchange:
      return relabel_rows(d, [&](int y) {
        return y == m.level ? y + 1 : y == m.level + 1 ? m.level : y;
      });
    case MoveKind::ExteriorExchange:
      return relabel_rows(d, [&](int y) { return y == 1 ? n : y == n ? 1 : y; });
    case MoveKind::Rotation:
      if (m.direction == Direction::TopToBottom) {
        return relabel_rows(d, [&](int y) { return y == n ? 1 : y + 1; });
      }
      return relabel_rows(d, [&](int y) { return y == 1 ? n : y - 1; });
    case MoveKind::InteriorMerge: {
      const int x = m.level;
      const int y = d.column(x).lo;
      std::vector<Corner> out;
      for (auto [cx, cy] : corners(d)) {
        if (cx == x) continue;
        const int nx = cx > x ? cx - 1 : cx;
        const int ny = cy > y ? cy - 1 : cy;
        out.emplace_back(nx, ny);
      }
      return from_corners(n - 1, out);
    }
    case MoveKind::ExteriorMerge: {
      const int x = m.level;
      std::vector<Corner> out;
      for (auto [cx, cy] : corners(d)) {
        if (cx == x) continue;
        const int nx = cx > x ? cx - 1 : cx;
        int ny;
        if (cy == 1 || cy == n) {
          ny = m.flag ? n - 1 : 1;
        } else {
          ny = m.flag ? cy - 1 : cy;
        }
        out.emplace_back(nx, ny);
      }
      return from_corners(n - 1, out);
    }
    case MoveKind::Divide: {
      const int y = m.level;
      const int c = m.insert_at;
      const Span r = d.row(y);
      auto shift_x = [&](int x) { return x >= c ? x + 1 : x; };
      const int low = shift_x(r.lo), high = shift_x(r.hi);
      std::vector<Corner> out;
      for (auto [cx, cy] : corners(d)) {
        if (cy == y) continue;
        int ny = cy;
        if (m.exterior) {
          if (y == n) ny = cy + 1;
        } else if (cy > y) {
          ny = cy + 1;
        }
        out.emplace_back(shift_x(cx), ny);
      }
      const int new_low = m.exterior ? 1 : y;
      const int new_high = m.exterior ? n + 1 : y + 1;
      out.emplace_back(low, m.flag ? new_high : new_low);
      out.emplace_back(high, m.flag ? new_low : new_high);
      out.emplace_back(c, new_low);
      out.emplace_back(c, new_high);
      return from_corners(n + 1, out);
    }
  }
  throw Error(ErrorCode::InapplicableMove, "unknown move");
}

CromwellMove to_horizontal(CromwellMove m) {
  if (m.kind == MoveKind::Rotation) {
    switch (m.direction) {
      case Direction::LeftToRight: m.direction = Direction::BottomToTop; break;
      case Direction::RightToLeft: m.direction = Direction::TopToBottom; break;
      default: break;
    }
  }
  m.axis = Axis::Horizontal;
  return m;
}

bool acts_horizontally(const CromwellMove& m) {
  if (m.kind == MoveKind::Rotation) {
    return m.direction == Direction::TopToBottom || m.direction == Direction::BottomToTop;
  }
  return m.axis == Axis::Horizontal;
}

}  // namespace

std::optional<std::string> inapplicable_reason(const GridDiagram& d, const CromwellMove& m) {
  if (acts_horizontally(m)) return horizontal_reason(d, m);
  return horizontal_reason(transform(d, kTranspose), to_horizontal(m));
}

GridDiagram apply(const GridDiagram& d, const CromwellMove& m) {
  if (auto reason = inapplicable_reason(d, m)) {
    throw Error(ErrorCode::InapplicableMove, describe(m) + ": " + *reason);
  }
  if (acts_horizontally(m)) return apply_horizontal(d, m);
  return transform(apply_horizontal(transform(d, kTranspose), to_horizontal(m)), kTranspose);
}

CromwellMove inverse(const CromwellMove& m, const GridDiagram& before) {
  const GridDiagram& d = before;
  switch (m.kind) {
    case MoveKind::InteriorExchange:
    case MoveKind::ExteriorExchange:
      return m;
    case MoveKind::Rotation:
      switch (m.direction) {
        case Direction::TopToBottom: return rotation(Direction::BottomToTop);
        case Direction::BottomToTop: return rotation(Direction::TopToBottom);
        case Direction::LeftToRight: return rotation(Direction::RightToLeft);
        case Direction::RightToLeft: return rotation(Direction::LeftToRight);
      }
      break;
    case MoveKind::InteriorMerge:
    case MoveKind::ExteriorMerge: {
      if (auto reason = inapplicable_reason(d, m)) {
        throw Error(ErrorCode::InapplicableMove, describe(m) + ": " + *reason);
      }
      const GridDiagram h = m.axis == Axis::Horizontal ? d : transform(d, kTranspose);
      const int x = m.level;
      const Span c = h.column(x);
      const Span lower = h.row(c.lo), upper = h.row(c.hi);
      int p = lower.lo == x ? lower.hi : lower.lo;
      int q = upper.lo == x ? upper.hi : upper.lo;
      if (p > x) --p;
      if (q > x) --q;
      // q belonged to the higher level; the divide must send it back there.
      const bool low_end_high = q < p;
      if (m.kind == MoveKind::InteriorMerge) {
        return divide(m.axis, c.lo, x, low_end_high, false);
      }
      const int merged_level = m.flag ? h.size() - 1 : 1;
      return divide(m.axis, merged_level, x, low_end_high, true);
    }
    case MoveKind::Divide: {
      if (!m.exterior) return interior_merge(m.axis, m.insert_at);
      return exterior_merge(m.axis, m.insert_at, m.level != 1);
    }
  }
  throw Error(ErrorCode::InapplicableMove, "unknown move");
}

std::vector<CromwellMove> available_moves(const GridDiagram& d) {
  const int n = d.size();
  std::vector<CromwellMove> out;
  for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
    const bool h = axis == Axis::Horizontal;
    // Edges parallel to the axis: rows for horizontal moves.
    auto parallel = [&](int i) { return h ? d.row(i) : d.column(i); };
    auto perpendicular = [&](int i) { return h ? d.column(i) : d.row(i); };
    if (n > 2) {
      for (int i = 1; i <= n; ++i) {
        const Span c = perpendicular(i);
        if (c.length() == 1) {
          CromwellMove m = interior_merge(axis, i);
          if (!inapplicable_reason(d, m)) out.push_back(m);
        }
        if (c.lo == 1 && c.hi == n) {
          for (bool high : {false, true}) {
            CromwellMove m = exterior_merge(axis, i, high);
            if (!inapplicable_reason(d, m)) out.push_back(m);
          }
        }
      }
    }
    for (int i = 1; i < n; ++i) {
      if (exchangeable(parallel(i), parallel(i + 1))) out.push_back(interior_exchange(axis, i));
    }
    if (n >= 3 && exchangeable(parallel(1), parallel(n))) out.push_back(exterior_exchange(axis));
  }
  for (Direction dir : {Direction::TopToBottom, Direction::BottomToTop, Direction::LeftToRight,
                        Direction::RightToLeft}) {
    out.push_back(rotation(dir));
  }
  return out;
}

bool has_merge(const GridDiagram& d) {
  const int n = d.size();
  if (n <= 2) return false;
  for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
    for (int i = 1; i <= n; ++i) {
      const Span c = axis == Axis::Horizontal ? d.column(i) : d.row(i);
      if (c.length() == 1 && !inapplicable_reason(d, interior_merge(axis, i))) return true;
      if (c.length() == n - 1 && !inapplicable_reason(d, exterior_merge(axis, i, false))) {
        return true;
      }
    }
  }
  return false;
}

bool has_interior_exchange(const GridDiagram& d) {
  for (int i = 1; i < d.size(); ++i) {
    if (exchangeable(d.row(i), d.row(i + 1)) || exchangeable(d.column(i), d.column(i + 1))) {
      return true;
    }
  }
  return false;
}

bool is_stuck(const GridDiagram& d) { return !has_merge(d) && !has_interior_exchange(d); }

}  // namespace gridknot
