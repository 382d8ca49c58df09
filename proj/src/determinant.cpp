#include "gridknot/determinant.hpp"

#include <numeric>
#include <vector>

namespace gridknot {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

IntMatrix goeritz_matrix(const GridDiagram& d) {
  const int n = d.size();
  const int side = n + 1;
  // Cell (i, j) is the unit square [i, i+1] x [j, j+1], i, j in 0..n.
  auto cell = [&](int i, int j) { return i * side + j; };
  auto on_column = [&](int x, int j) {  // segment x, [j, j+1]
    return x >= 1 && x <= n && d.column(x).lo <= j && d.column(x).hi >= j + 1;
  };
  auto on_row = [&](int y, int i) {  // segment [i, i+1], y
    return y >= 1 && y <= n && d.row(y).lo <= i && d.row(y).hi >= i + 1;
  };

  UnionFind uf(side * side);
  std::vector<int> colour(side * side);
  for (int j = 0; j < side; ++j) {
    int parity = 0;
    for (int i = 0; i < side; ++i) {
      if (i > 0 && on_column(i, j)) parity ^= 1;
      colour[cell(i, j)] = parity;
      if (i + 1 < side && !on_column(i + 1, j)) uf.unite(cell(i, j), cell(i + 1, j));
      if (j + 1 < side && !on_row(j + 1, i)) uf.unite(cell(i, j), cell(i, j + 1));
    }
  }

  std::vector<int> index(side * side, -1);
  int regions = 0;
  index[uf.find(cell(0, 0))] = regions++;
  for (int c = 0; c < side * side; ++c) {
    if (colour[c] == 0 && index[uf.find(c)] < 0) index[uf.find(c)] = regions++;
  }

  IntMatrix g = IntMatrix::Zero(regions, regions);
  for (const Crossing& x : crossings(d)) {
    const int sw = cell(x.column - 1, x.row - 1), ne = cell(x.column, x.row);
    const int nw = cell(x.column - 1, x.row), se = cell(x.column, x.row - 1);
    const bool diagonal = colour[sw] == 0;
    const int a = index[uf.find(diagonal ? sw : nw)];
    const int b = index[uf.find(diagonal ? ne : se)];
    if (a == b) continue;
    const int eta = diagonal ? 1 : -1;
    g(a, b) -= eta;
    g(b, a) -= eta;
    g(a, a) += eta;
    g(b, b) += eta;
  }
  return g;
}

std::int64_t knot_determinant(const GridDiagram& d) {
  if (!is_knot(d)) throw Error(ErrorCode::NotAKnot, "determinant needs a knot");
  const IntMatrix g = goeritz_matrix(d);
  const Int128 det = bareiss_determinant(g.bottomRightCorner(g.rows() - 1, g.cols() - 1));
  const Int128 magnitude = det < 0 ? -det : det;
  if (magnitude > INT64_MAX) throw Error(ErrorCode::ResourceLimit, "determinant exceeds 64 bits");
  return static_cast<std::int64_t>(magnitude);
}

}  // namespace gridknot
