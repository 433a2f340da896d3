#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "liemult/field.hpp"

namespace liemult {

template <class F>
using Vec = std::vector<typename F::Elt>;

/// Dense row-major matrix over an exact field. Values are immutable in
/// practice: operations return fresh matrices.
template <class F>
class Matrix {
public:
  using Elt = typename F::Elt;

  Matrix(F fld, std::size_t rows, std::size_t cols)
      : fld_(std::move(fld)), rows_(rows), cols_(cols), a_(rows * cols, fld_.zero()) {}

  static Matrix identity(F fld, std::size_t n) {
    Matrix m(fld, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = fld.one();
    return m;
  }

  static Matrix from_rows(F fld, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Matrix m(fld, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw Error(Errc::LengthMismatch, "row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return fld_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<F> row(std::size_t i) const {
    return Vec<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!fld_.eq(a_[k], o.a_[k])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
  F fld_;
  std::size_t rows_, cols_;
  std::vector<Elt> a_;
};

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols())
    throw Error(Errc::AmbientMismatch, "vstack: column count mismatch");
  if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "vstack: field mismatch");
  Matrix<F> m(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

template <class F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows())
    throw Error(Errc::AmbientMismatch, "mat_mul: inner dimension mismatch");
  const F& fld = a.field();
  Matrix<F> c(fld, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a.at(i, k);
      if (fld.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) = fld.add(c.at(i, j), fld.mul(aik, b.at(k, j)));
    }
  return c;
}

template <class F>
Vec<F> mat_vec(const Matrix<F>& m, const Vec<F>& x) {
  if (x.size() != m.cols()) throw Error(Errc::LengthMismatch, "mat_vec: length mismatch");
  const F& fld = m.field();
  Vec<F> y(m.rows(), fld.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (fld.is_zero(m.at(i, j))) continue;
      y[i] = fld.add(y[i], fld.mul(m.at(i, j), x[j]));
    }
  return y;
}

template <class F>
struct RrefResult {
  Matrix<F> mat;
  std::vector<std::size_t> pivots;  // strictly increasing column indices (0-based)
};

/// Reduced row echelon form: pivots scaled to 1, pivot columns cleared above
/// and below, zero rows dropped. Idempotent; preserves the row space.
template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
  const F& fld = m.field();
  std::size_t nr = m.rows(), nc = m.cols();
  std::vector<Vec<F>> rows;
  rows.reserve(nr);
  for (std::size_t i = 0; i < nr; ++i) rows.push_back(m.row(i));

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < nc && r < rows.size(); ++col) {
    std::size_t sel = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (!fld.is_zero(rows[i][col])) {
        sel = i;
        break;
      }
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const auto inv = fld.inv(rows[r][col]);
    for (std::size_t j = col; j < nc; ++j) rows[r][j] = fld.mul(rows[r][j], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || fld.is_zero(rows[i][col])) continue;
      const auto f = rows[i][col];
      for (std::size_t j = col; j < nc; ++j)
        rows[i][j] = fld.sub(rows[i][j], fld.mul(f, rows[r][j]));
    }
    pivots.push_back(col);
    ++r;
  }
  Matrix<F> out(fld, r, nc);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = rows[i][j];
  return {std::move(out), std::move(pivots)};
}

/// Null-space basis, one row per free column, not canonicalized.
template <class F>
Matrix<F> kernel_raw(const Matrix<F>& m) {
  const F& fld = m.field();
  auto rr = rref(m);
  std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::size_t nfree = nc - rr.pivots.size();
  Matrix<F> out(fld, nfree, nc);
  std::size_t k = 0;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    out.at(k, f) = fld.one();
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      out.at(k, rr.pivots[i]) = fld.neg(rr.mat.at(i, f));
    ++k;
  }
  return out;
}

/// Repeated exact solves A x = v against a fixed matrix with full column
/// rank: row-reduces [A | I] once, then each solve is a matrix-vector
/// product plus a consistency check.
template <class F>
class ColumnSolver {
public:
  explicit ColumnSolver(const Matrix<F>& a)
      : rows_(a.rows()), cols_(a.cols()), red_(a.field(), 0, 0) {
    const F& fld = a.field();
    Matrix<F> aug(fld, rows_, cols_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = a.at(i, j);
      aug.at(i, cols_ + i) = fld.one();
    }
    auto rr = rref(aug);
    for (std::size_t j = 0; j < cols_; ++j)
      if (j >= rr.pivots.size() || rr.pivots[j] != j)
        throw Error(Errc::Internal, "ColumnSolver: matrix does not have full column rank");
    red_ = std::move(rr.mat);
  }

  std::optional<Vec<F>> solve(const Vec<F>& v) const {
    const F& fld = red_.field();
    if (v.size() != rows_) throw Error(Errc::LengthMismatch, "ColumnSolver: rhs length mismatch");
    Vec<F> x(cols_, fld.zero());
    for (std::size_t r = 0; r < red_.rows(); ++r) {
      auto acc = fld.zero();
      for (std::size_t j = 0; j < rows_; ++j) {
        if (fld.is_zero(red_.at(r, cols_ + j)) || fld.is_zero(v[j])) continue;
        acc = fld.add(acc, fld.mul(red_.at(r, cols_ + j), v[j]));
      }
      if (r < cols_)
        x[r] = acc;
      else if (!fld.is_zero(acc))
        return std::nullopt;  // v is outside the column span
    }
    return x;
  }

private:
  std::size_t rows_, cols_;
  Matrix<F> red_;  // rref of [A | I]
};

/// One solution of m * x = rhs, or nullopt when inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& rhs) {
  if (rhs.size() != m.rows()) throw Error(Errc::LengthMismatch, "solve: rhs length mismatch");
  const F& fld = m.field();
  Matrix<F> aug(fld, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  auto rr = rref(aug);
  Vec<F> x(m.cols(), fld.zero());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;  // pivot in rhs column
    x[rr.pivots[i]] = rr.mat.at(i, m.cols());
  }
  return x;
}

}  // namespace liemult
