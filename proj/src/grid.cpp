#include "gridknot/grid.hpp"

#include <algorithm>
#include <numeric>

namespace gridknot {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeError: return "SizeError";
    case ErrorCode::RowCountError: return "RowCountError";
    case ErrorCode::DegenerateColumn: return "DegenerateColumn";
    case ErrorCode::SelfRow: return "SelfRow";
    case ErrorCode::InapplicableMove: return "InapplicableMove";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::NotTrivialInput: return "NotTrivialInput";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorCode::SweepObstruction: return "SweepObstruction";
    case ErrorCode::IllegalMoveAtSite: return "IllegalMoveAtSite";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

GridDiagram GridDiagram::validate(int n, std::vector<Span> columns) {
  if (n < 2) throw Error(ErrorCode::SizeError, "grid size must be at least 2");
  if (static_cast<int>(columns.size()) != n) {
    throw Error(ErrorCode::SizeError, "expected " + std::to_string(n) + " columns, got " +
                                          std::to_string(columns.size()));
  }
  std::vector<std::vector<int>> users(n + 1);
  for (int x = 1; x <= n; ++x) {
    Span& s = columns[x - 1];
    if (s.lo > s.hi) std::swap(s.lo, s.hi);
    if (s.lo == s.hi) {
      throw Error(ErrorCode::DegenerateColumn,
                  "column " + std::to_string(x) + " starts and ends at row " + std::to_string(s.lo));
    }
    if (s.lo < 1 || s.hi > n) {
      throw Error(ErrorCode::RowCountError,
                  "column " + std::to_string(x) + " uses a row outside 1.." + std::to_string(n));
    }
    users[s.lo].push_back(x);
    users[s.hi].push_back(x);
  }
  GridDiagram d;
  d.rows_.resize(n);
  for (int y = 1; y <= n; ++y) {
    if (users[y].size() != 2) {
      throw Error(ErrorCode::RowCountError, "row " + std::to_string(y) + " is used " +
                                                std::to_string(users[y].size()) + " times");
    }
    // Distinct columns are guaranteed once lo < hi holds for every column.
    if (users[y][0] == users[y][1]) {
      throw Error(ErrorCode::SelfRow, "row " + std::to_string(y) + " is used twice by one column");
    }
    d.rows_[y - 1] = Span{users[y][0], users[y][1]};
  }
  d.columns_ = std::move(columns);
  return d;
}

GridDiagram GridDiagram::trivial() { return validate(2, {{1, 2}, {1, 2}}); }

GridDiagram from_corners(int n, const std::vector<Corner>& pts) {
  std::vector<std::vector<int>> by_column(n + 1);
  for (auto [x, y] : pts) {
    if (x < 1 || x > n) throw Error(ErrorCode::RowCountError, "corner outside grid");
    by_column[x].push_back(y);
  }
  std::vector<Span> cols(n);
  for (int x = 1; x <= n; ++x) {
    if (by_column[x].size() != 2) {
      throw Error(ErrorCode::RowCountError,
                  "column " + std::to_string(x) + " has " + std::to_string(by_column[x].size()) +
                      " corners");
    }
    cols[x - 1] = Span{std::min(by_column[x][0], by_column[x][1]),
                       std::max(by_column[x][0], by_column[x][1])};
  }
  return GridDiagram::validate(n, std::move(cols));
}

std::vector<Corner> corners(const GridDiagram& d) {
  std::vector<Corner> out;
  out.reserve(2 * d.size());
  for (int x = 1; x <= d.size(); ++x) {
    out.emplace_back(x, d.column(x).lo);
    out.emplace_back(x, d.column(x).hi);
  }
  return out;
}

int component_count(const GridDiagram& d) {
  const int n = d.size();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = n;
  for (const Span& r : d.rows()) {
    int a = find(r.lo), b = find(r.hi);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool is_knot(const GridDiagram& d) { return component_count(d) == 1; }

std::vector<Crossing> crossings(const GridDiagram& d) {
  std::vector<Crossing> out;
  for (int x = 1; x <= d.size(); ++x) {
    const Span c = d.column(x);
    for (int y = c.lo + 1; y < c.hi; ++y) {
      if (d.row(y).strictly_contains(x)) out.push_back({x, y});
    }
  }
  return out;
}

int crossing_count(const GridDiagram& d) {
  int count = 0;
  for (int x = 1; x <= d.size(); ++x) {
    const Span c = d.column(x);
    for (int y = c.lo + 1; y < c.hi; ++y) count += d.row(y).strictly_contains(x) ? 1 : 0;
  }
  return count;
}

LengthStats length_stats(const GridDiagram& d) {
  LengthStats s;
  for (const Span& c : d.columns()) {
    s.vertical_lengths.push_back(c.length());
    s.total_vertical += c.length();
  }
  for (const Span& r : d.rows()) {
    s.horizontal_lengths.push_back(r.length());
    s.total_horizontal += r.length();
  }
  s.total_all = s.total_vertical + s.total_horizontal;
  s.crossing_count = crossing_count(d);
  return s;
}

int max_crossings_bound(int n) {
  if (n < 2) throw Error(ErrorCode::SizeError, "grid size must be at least 2");
  return n % 2 ? (n * n - 2 * n - 1) / 2 : (n * n - 2 * n) / 2;
}

int max_length_bound(int n) {
  if (n < 2) throw Error(ErrorCode::SizeError, "grid size must be at least 2");
  return n % 2 ? n * n - 1 : n * n;
}

GridDiagram extremal_diagram(int n) {
  if (n < 2) throw Error(ErrorCode::SizeError, "grid size must be at least 2");
  // Nested spiral: the middle column spans the whole height and the spans
  // shrink by one row on each side moving outwards.
  const int m = n / 2;
  std::vector<Span> cols(n);
  for (int x = 1; x <= n; ++x) {
    if (n % 2 == 0) {
      cols[x - 1] = x <= m ? Span{m + 1 - x, m + x} : Span{x - m, n + m + 1 - x};
    } else {
      const int lo = x <= m ? m + 1 - x : x - m;
      const int hi = x <= m + 1 ? m + x : n + m + 2 - x;
      cols[x - 1] = Span{lo, hi};
    }
  }
  return GridDiagram::validate(n, std::move(cols));
}

Corner transform_point(int tag, int n, Corner p) {
  auto [x, y] = p;
  if (tag & 1) x = n + 1 - x;
  if (tag & 2) y = n + 1 - y;
  if (tag & 4) std::swap(x, y);
  return {x, y};
}

GridDiagram transform(const GridDiagram& d, int tag) {
  if (tag == 0) return d;
  const int n = d.size();
  std::vector<Span> cols(n);
  for (int x = 1; x <= n; ++x) {
    const Span c = d.column(x);
    for (int y : {c.lo, c.hi}) {
      auto [tx, ty] = transform_point(tag, n, {x, y});
      Span& s = cols[tx - 1];
      if (s.lo == 0) {
        s.lo = ty;
      } else {
        s.hi = ty;
        if (s.lo > s.hi) std::swap(s.lo, s.hi);
      }
    }
  }
  return GridDiagram::validate(n, std::move(cols));
}

int inverse_symmetry(int tag) {
  if (!(tag & 4)) return tag;
  return 4 | ((tag & 1) << 1) | ((tag & 2) >> 1);
}

bool symmetry_reflects(int tag) {
  return ((tag & 1) + ((tag >> 1) & 1) + ((tag >> 2) & 1)) % 2 == 1;
}

CanonicalForm canonical_form(const GridDiagram& d) {
  CanonicalForm best{d, 0};
  for (int t = 1; t < kSymmetryCount; ++t) {
    GridDiagram image = transform(d, t);
    if (image.columns() < best.diagram.columns()) best = {std::move(image), t};
  }
  return best;
}

bool is_canonical(const GridDiagram& d) {
  for (int t = 1; t < kSymmetryCount; ++t) {
    if (transform(d, t).columns() < d.columns()) return false;
  }
  return true;
}

int orbit_size(const GridDiagram& d) {
  std::vector<std::vector<Span>> images;
  for (int t = 0; t < kSymmetryCount; ++t) images.push_back(transform(d, t).columns());
  std::sort(images.begin(), images.end());
  return static_cast<int>(std::unique(images.begin(), images.end()) - images.begin());
}

std::string key_of(const GridDiagram& d) {
  std::string key;
  key.reserve(2 * d.size());
  for (const Span& c : d.columns()) {
    key.push_back(static_cast<char>(c.lo));
    key.push_back(static_cast<char>(c.hi));
  }
  return key;
}

}  // namespace gridknot
