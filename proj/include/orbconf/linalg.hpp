#pragma once

// Exact dense linear algebra on Eigen matrices over field-like scalars
// (Rational, Cyclotomic). No pivoting by magnitude: any nonzero pivot works.

#include <Eigen/Core>
#include <vector>

#include "orbconf/exactfield.hpp"

namespace orbconf {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

template <class Scalar>
struct Echelon {
  Matrix<Scalar> rows;              ///< nonzero rows of the reduced row echelon form
  std::vector<Eigen::Index> pivots;  ///< pivot column of each row
};

/// Reduced row echelon form. Deterministic: the first nonzero entry in each
/// column (from the top of the unreduced block) is used as pivot.
template <class Scalar>
Echelon<Scalar> reduced_row_echelon(Matrix<Scalar> m) {
  Echelon<Scalar> out;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = m.topRows(r);
  return out;
}

template <class Scalar>
Eigen::Index rank(const Matrix<Scalar>& m) {
  return static_cast<Eigen::Index>(reduced_row_echelon(m).pivots.size());
}

/// Reduces v against an echelon basis; the result is zero iff v lies in its row span.
template <class Scalar>
RowVector<Scalar> reduce_against(const Echelon<Scalar>& e, RowVector<Scalar> v) {
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const Scalar f = v(e.pivots[i]);
    if (f.is_zero()) continue;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      if (!e.rows(i, j).is_zero()) v(j) -= f * e.rows(i, j);
    }
  }
  return v;
}

template <class Scalar>
bool is_zero_vector(const RowVector<Scalar>& v) {
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (!v(j).is_zero()) return false;
  }
  return true;
}

/// Determinant by fraction-producing elimination.
template <class Scalar>
Scalar determinant(Matrix<Scalar> m) {
  Scalar det(1);
  const Eigen::Index n = m.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = Scalar(1) / m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace orbconf
