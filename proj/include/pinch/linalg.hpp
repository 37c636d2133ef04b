/* Copyright 2026 The pinch Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef PINCH_LINALG_HPP
#define PINCH_LINALG_HPP

// Exact dense linear algebra over a field scalar. Eigen's decompositions pivot
// on magnitude, which has no meaning over a finite field, so elimination is
// done here with first-nonzero pivoting (lowest row, lowest column first).

#include <Eigen/Core>

#include <concepts>
#include <optional>
#include <utility>
#include <vector>

namespace pinch {

template <class Scalar>
concept ExactField = requires(Scalar a, Scalar b) {
  { a + b } -> std::convertible_to<Scalar>;
  { a - b } -> std::convertible_to<Scalar>;
  { a * b } -> std::convertible_to<Scalar>;
  { -a } -> std::convertible_to<Scalar>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { inverse(a) } -> std::convertible_to<Scalar>;
  { zero_like(a) } -> std::convertible_to<Scalar>;
  { one_like(a) } -> std::convertible_to<Scalar>;
};

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <ExactField Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  // pivots[r] is the pivot column of row r of `reduced`.
  std::vector<Eigen::Index> pivots;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Gauss-Jordan reduction to reduced row echelon form. Only the first
/// `pivot_cols` columns are eligible as pivots (all by default), which is how
/// augmented systems are solved.
template <class Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& m,
                                                 Eigen::Index pivot_cols = -1) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{m, {}};
  auto& a = out.reduced;
  if (pivot_cols < 0) pivot_cols = a.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < pivot_cols && row < a.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < a.rows(); ++r) {
      if (!is_zero(a(r, col))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const Scalar s = inverse(a(row, col));
    for (Eigen::Index c = col; c < a.cols(); ++c) a(row, c) = a(row, c) * s;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const Scalar f = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) = a(r, c) - f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).rank();
}

/// Basis of the null space as the columns of the returned matrix, one per
/// free column, in increasing order of the free column.
template <class Derived>
Matrix<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = row_echelon(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  const Scalar zero = m.size() ? zero_like(m(0, 0)) : Scalar(0);
  const Scalar one = m.size() ? one_like(m(0, 0)) : Scalar(1);
  Matrix<Scalar> basis = Matrix<Scalar>::Constant(n, n - ech.rank(), zero);
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(f, k) = one;
    for (Eigen::Index r = 0; r < ech.rank(); ++r) basis(ech.pivots[r], k) = -ech.reduced(r, f);
    ++k;
  }
  return basis;
}

/// One solution of a x = b (free variables set to zero), or nullopt.
template <class DerivedA, class DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto ech = row_echelon(aug, a.cols());
  for (Eigen::Index r = ech.rank(); r < aug.rows(); ++r)
    if (!is_zero(ech.reduced(r, a.cols()))) return std::nullopt;
  const Scalar zero = b.size() ? zero_like(b(0)) : Scalar(0);
  Vector<Scalar> x = Vector<Scalar>::Constant(a.cols(), zero);
  for (Eigen::Index r = 0; r < ech.rank(); ++r) x(ech.pivots[r]) = ech.reduced(r, a.cols());
  return x;
}

template <class Derived>
std::optional<Matrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) return std::nullopt;
  const Eigen::Index n = m.rows();
  if (n == 0) return Matrix<Scalar>(0, 0);
  const Scalar zero = zero_like(m(0, 0)), one = one_like(m(0, 0));
  Matrix<Scalar> aug = Matrix<Scalar>::Constant(n, 2 * n, zero);
  aug.leftCols(n) = m;
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = one;
  const auto ech = row_echelon(aug, n);
  if (ech.rank() < n) return std::nullopt;
  return Matrix<Scalar>(ech.reduced.rightCols(n));
}

/// Indices of a maximal independent prefix-greedy subset of the columns.
template <class Derived>
std::vector<Eigen::Index> independent_columns(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).pivots;
}

/// Picks a canonical point of the affine space particular + span(homogeneous
/// columns). The homogeneous directions are brought to reduced echelon form
/// (as rows) and the particular solution is cleared on their pivot
/// coordinates; each pivot coordinate is then set to `fill`. With fill = 0
/// this is the lexicographically least point.
template <class DerivedP, class DerivedH>
Vector<typename DerivedP::Scalar> affine_representative(
    const Eigen::MatrixBase<DerivedP>& particular, const Eigen::MatrixBase<DerivedH>& homogeneous,
    const typename DerivedP::Scalar& fill) {
  using Scalar = typename DerivedP::Scalar;
  Vector<Scalar> x = particular;
  if (homogeneous.cols() == 0) return x;
  const auto ech = row_echelon(homogeneous.transpose());
  for (Eigen::Index r = 0; r < ech.rank(); ++r) {
    const Eigen::Index c = ech.pivots[r];
    const Scalar shift = fill - x(c);
    x += (ech.reduced.row(r).transpose() * shift).eval();
  }
  return x;
}

}  // namespace pinch

#endif  // PINCH_LINALG_HPP
