#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond GridDiagram::validate.

#include <functional>
#include <vector>

#include "gridknot/grid.hpp"

namespace oracle {

/// Every valid n-grid, found by trying all n-tuples of row pairs.
inline std::vector<gridknot::GridDiagram> all_grids(int n) {
  std::vector<gridknot::Span> pairs;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo + 1; hi <= n; ++hi) pairs.push_back({lo, hi});
  std::vector<gridknot::GridDiagram> out;
  std::vector<gridknot::Span> cols(n);
  std::vector<int> ends(n + 1, 0);  // endpoints placed in each row so far
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      try {
        out.push_back(gridknot::GridDiagram::validate(n, cols));
      } catch (const gridknot::Error&) {
      }
      return;
    }
    for (auto p : pairs) {
      if (ends[p.lo] == 2 || ends[p.hi] == 2) continue;
      ++ends[p.lo];
      ++ends[p.hi];
      cols[i] = p;
      rec(i + 1);
      --ends[p.lo];
      --ends[p.hi];
    }
  };
  rec(0);
  return out;
}

/// Components by walking corner to corner, independent of the library's
/// union-find.
inline int components(const gridknot::GridDiagram& d) {
  const int n = d.size();
  std::vector<bool> seen(n + 1, false);
  int count = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    ++count;
    int x = start;
    int y = d.column(x).lo;
    while (!seen[x]) {
      seen[x] = true;
      const auto r = d.row(y);
      x = r.lo == x ? r.hi : r.lo;
      const auto c = d.column(x);
      y = c.lo == y ? c.hi : c.lo;
    }
  }
  return count;
}

}  // namespace oracle

#include <cmath>
#include <map>

namespace oracle {

/// Knot determinant from the Fox colouring matrix, computed in floating
/// point. Only meant for small diagrams.
inline long fox_determinant(const gridknot::GridDiagram& d) {
  const int n = d.size();
  auto is_crossing = [&](int x, int y) {
    return d.column(x).strictly_contains(y) && d.row(y).strictly_contains(x);
  };
  std::map<std::pair<int, int>, int> id;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (is_crossing(x, y)) id.emplace(std::make_pair(x, y), static_cast<int>(id.size()));
  const int c = static_cast<int>(id.size());
  if (c == 0) return 1;

  // Walk the knot. Arc numbers advance at each under-passage.
  std::vector<int> over_arc(c, -1);
  std::vector<std::vector<int>> under_arcs(c);
  int arc = 0;
  int x = 1, y = d.column(1).lo;
  do {
    const auto col = d.column(x);
    const int ny = col.lo == y ? col.hi : col.lo;
    const int step = ny > y ? 1 : -1;
    for (int k = y + step; k != ny; k += step)
      if (is_crossing(x, k)) over_arc[id[{x, k}]] = arc;
    y = ny;
    const auto row = d.row(y);
    const int nx = row.lo == x ? row.hi : row.lo;
    const int hstep = nx > x ? 1 : -1;
    for (int k = x + hstep; k != nx; k += hstep) {
      if (is_crossing(k, y)) {
        under_arcs[id[{k, y}]].push_back(arc);
        ++arc;
        under_arcs[id[{k, y}]].push_back(arc);
      }
    }
    x = nx;
  } while (!(x == 1 && y == d.column(1).lo));
  auto wrap = [&](int a) { return a % arc; };

  std::vector<std::vector<double>> m(c, std::vector<double>(c, 0.0));
  for (int i = 0; i < c; ++i) {
    m[i][wrap(over_arc[i])] += 2;
    for (int a : under_arcs[i]) m[i][wrap(a)] -= 1;
  }
  // drop the last row and column
  const int k = c - 1;
  double det = 1;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    if (std::fabs(m[piv][col]) < 1e-9) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < k; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int j = col; j < k; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return std::lround(std::fabs(det));
}

}  // namespace oracle
