#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

#include "gridknot/error.hpp"
#include "gridknot/grid.hpp"

namespace gridknot {

using Int128 = __int128;
using IntMatrix = Eigen::Matrix<Int128, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. Every intermediate value is a minor of the input, so the
/// only failure mode is overflow of the scalar type, reported as
/// ResourceLimit.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw Error(ErrorCode::SizeError, "determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar x, y, z;
        if (__builtin_mul_overflow(a(i, j), a(k, k), &x) ||
            __builtin_mul_overflow(a(i, k), a(k, j), &y) || __builtin_sub_overflow(x, y, &z)) {
          throw Error(ErrorCode::ResourceLimit, "determinant overflow");
        }
        a(i, j) = z / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Goeritz matrix of the checkerboard colouring of d, over the regions of
/// the colour containing the unbounded region (which is row and column 0).
IntMatrix goeritz_matrix(const GridDiagram& d);

/// |det| of the Goeritz matrix with one row and column removed, which is the
/// knot determinant |Alexander(-1)|. Throws NotAKnot for links.
std::int64_t knot_determinant(const GridDiagram& d);

}  // namespace gridknot
