// Dense exact linear algebra over the scalar types in field.hpp.
//
// Vectors are rows: a subspace is the row space of a matrix, and a linear map
// V -> W is a dim(V) x dim(W) matrix acting by v |-> v * X.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "quivermod/field.hpp"

namespace quivermod {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic, Eigen::RowMajor>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
struct Rref {
  Matrix<S> matrix;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class S>
Matrix<S> zero_matrix(Index rows, Index cols) {
  return Matrix<S>::Constant(rows, cols, S(0));
}

template <class S>
Matrix<S> identity_matrix(const FieldSpec& field, Index n) {
  Matrix<S> m = zero_matrix<S>(n, n);
  const S one = make_scalar<S>(field, 1);
  for (Index i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

/// Replace unbound literals by field elements so equal matrices print and hash equally.
template <class Derived>
auto bind_field(const Eigen::MatrixBase<Derived>& m, const FieldSpec& field) {
  using S = typename Derived::Scalar;
  Matrix<S> out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) out(r, c) = bind_scalar(m(r, c), field);
  return out;
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) return false;
  return true;
}

/// Shape-aware equality (Eigen's operator== requires equal shapes).
template <class DA, class DB>
bool same_matrix(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

template <class S>
bool same_matrices(const std::vector<Matrix<S>>& a, const std::vector<Matrix<S>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!same_matrix(a[k], b[k])) return false;
  return true;
}

/// Reduced row echelon form. Same shape as the input, zero rows at the bottom.
template <class Derived>
Rref<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using S = typename Derived::Scalar;
  Rref<S> out{input, {}};
  auto& m = out.matrix;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index sel = row;
    while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const S inv = reciprocal(m(row, col));
    for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S f = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Nonzero rows of the RREF: the canonical basis of the row space.
template <class Derived>
Rref<typename Derived::Scalar> row_space(const Eigen::MatrixBase<Derived>& m) {
  auto r = rref(m);
  r.matrix.conservativeResize(r.rank(), m.cols());
  return r;
}

/// Basis (as rows) of the right null space {k : m * k^T = 0}.
template <class Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto r = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<S> basis = zero_matrix<S>(n - r.rank(), n);
  Index out = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(out, free) = S(1);
    for (Index k = 0; k < r.rank(); ++k) basis(out, r.pivots[static_cast<std::size_t>(k)]) = -r.matrix(k, free);
    ++out;
  }
  return basis;
}

/// Left null space {k : k * m = 0}, as rows.
template <class Derived>
Matrix<typename Derived::Scalar> left_kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  return kernel_basis(m.transpose());
}

/// Some x with a * x = b, or nullopt when the system is inconsistent.
template <class DA, class DB>
std::optional<Vector<typename DA::Scalar>> solve(const Eigen::MatrixBase<DA>& a,
                                                 const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  if (b.cols() != 1 || b.rows() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix<S> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto r = rref(aug);
  Vector<S> x = Vector<S>::Constant(a.cols(), S(0));
  for (Index k = 0; k < r.rank(); ++k) {
    const auto col = r.pivots[static_cast<std::size_t>(k)];
    if (col == a.cols()) return std::nullopt;
    x(col) = r.matrix(k, a.cols());
  }
  return x;
}

template <class Derived>
bool is_invertible(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

template <class Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const Index n = m.rows();
  Matrix<S> aug = zero_matrix<S>(n, 2 * n);
  aug.leftCols(n) = m;
  for (Index i = 0; i < n; ++i) aug(i, n + i) = S(1);
  const auto r = rref(aug);
  if (r.rank() < n || (n > 0 && r.pivots[static_cast<std::size_t>(n - 1)] >= n))
    throw std::domain_error("inverse: matrix is singular");
  return r.matrix.rightCols(n);
}

/// Reduces `v` against a basis in RREF (nonzero rows, pivots given). The
/// result is zero iff v lies in the row space.
template <class S, class Derived>
RowVector<S> reduce_mod(const Eigen::MatrixBase<Derived>& v, const Matrix<S>& basis,
                        const std::vector<Index>& pivots) {
  RowVector<S> w = v;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const S f = w(pivots[k]);
    if (!is_zero(f)) w -= f * basis.row(static_cast<Index>(k));
  }
  return w;
}

/// Row space of `basis` (RREF rows) contains every row of `rows`.
template <class S, class Derived>
bool rows_in_span(const Eigen::MatrixBase<Derived>& rows, const Matrix<S>& basis,
                  const std::vector<Index>& pivots) {
  for (Index r = 0; r < rows.rows(); ++r)
    if (!is_zero_matrix(reduce_mod<S>(rows.row(r), basis, pivots))) return false;
  return true;
}

template <class Derived>
std::string format_matrix(const Eigen::MatrixBase<Derived>& m, const FieldSpec& field) {
  std::string s = "[";
  for (Index r = 0; r < m.rows(); ++r) {
    s += r ? ",[" : "[";
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) s += ",";
      s += to_string(m(r, c), field);
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace quivermod
