#ifndef SEMITORIC_LINALG_HPP
#define SEMITORIC_LINALG_HPP

// Exact dense linear algebra over a field Scalar (Rational in practice) plus
// Hermite-style integer reductions. Nothing here tolerates rounding: zero
// tests are exact equality.

#include "semitoric/types.hpp"

#include <optional>
#include <vector>

namespace semitoric {

/// Brings `m` to reduced row echelon form in place. Returns the pivot column
/// of each nonzero row; rows past the returned size are zero.
template <typename Scalar>
std::vector<Index> reduce_rows(Matrix<Scalar>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  const Scalar zero(0);
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index sel = -1;
    for (Index i = row; i < m.rows(); ++i) {
      if (m(i, col) != zero) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == zero) continue;
      const Scalar f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) {
        if (m(row, j) != zero) m(i, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  Matrix<typename Derived::Scalar> work = m;
  return static_cast<Index>(reduce_rows(work).size());
}

/// Basis of the row space, as the nonzero rows of the reduced echelon form.
template <typename Derived>
Matrix<typename Derived::Scalar> row_space(const Eigen::MatrixBase<Derived>& m) {
  Matrix<typename Derived::Scalar> work = m;
  const auto pivots = reduce_rows(work);
  return work.topRows(static_cast<Index>(pivots.size()));
}

/// Basis of {x : m x = 0}, one basis vector per column.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> work = m;
  const auto pivots = reduce_rows(work);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, n - static_cast<Index>(pivots.size()));
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], k) = -work(static_cast<Index>(r), free);
    }
    ++k;
  }
  return basis;
}

/// Some solution of a x = b, or nullopt when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> solve(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto pivots = reduce_rows(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x(pivots[r]) = aug(static_cast<Index>(r), a.cols());
  }
  return x;
}

/// Dimension of the affine span of the rows of `points`.
template <typename Derived>
Index affine_rank(const Eigen::MatrixBase<Derived>& points) {
  if (points.rows() == 0) return -1;
  Matrix<typename Derived::Scalar> diff = points.bottomRows(points.rows() - 1);
  for (Index i = 0; i < diff.rows(); ++i) diff.row(i) -= points.row(0);
  return rank(diff);
}

// Integer routines.

/// Row-style Hermite normal form. If `transform` is given it receives a
/// unimodular U with U * m == H.
ZMatrix hermite_rows(const ZMatrix& m, ZMatrix* transform = nullptr);

/// Primitive integer multiple of a rational vector (positive scale factor).
ZVector primitive(const QVector& v);

/// Canonical (Hermite) basis, as rows, of the saturated lattice
/// {x in Z^n : equations * x = 0}.
ZMatrix integer_kernel(const QMatrix& equations, Index n);

QMatrix to_rational(const ZMatrix& m);
ZMatrix to_integer(const QMatrix& m);  // throws unless all entries integral

}  // namespace semitoric

#endif  // SEMITORIC_LINALG_HPP
