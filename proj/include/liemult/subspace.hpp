#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "liemult/matrix.hpp"

namespace liemult {

/// A linear subspace of a fixed coordinate space, stored as the reduced row
/// echelon basis of its row space. The representation is canonical: two
/// subspaces are equal iff their stored bases are identical.
template <class F>
class Subspace {
public:
  Subspace(F fld, std::size_t ambient)
      : ambient_(ambient), basis_(std::move(fld), 0, ambient) {}

  static Subspace zero(F fld, std::size_t ambient) { return Subspace(std::move(fld), ambient); }

  static Subspace full(F fld, std::size_t ambient) {
    Subspace s(fld, ambient);
    s.basis_ = Matrix<F>::identity(fld, ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }

  /// Span of the rows of m.
  static Subspace row_space(const Matrix<F>& m) {
    Subspace s(m.field(), m.cols());
    auto rr = rref(m);
    s.basis_ = std::move(rr.mat);
    s.pivots_ = std::move(rr.pivots);
    return s;
  }

  static Subspace span_of(F fld, std::size_t ambient, const std::vector<Vec<F>>& vecs) {
    return row_space(Matrix<F>::from_rows(std::move(fld), ambient, vecs));
  }

  const F& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Canonical representative of v modulo this subspace: the remainder after
  /// reducing against the echelon basis (zero at every pivot column).
  Vec<F> reduce(Vec<F> v) const {
    if (v.size() != ambient_) throw Error(Errc::AmbientMismatch, "reduce: length mismatch");
    const F& fld = field();
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      const auto& c = v[pivots_[i]];
      if (fld.is_zero(c)) continue;
      const auto f = c;
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        v[j] = fld.sub(v[j], fld.mul(f, basis_.at(i, j)));
    }
    return v;
  }

  bool contains(const Vec<F>& v) const {
    auto r = reduce(v);
    const F& fld = field();
    for (const auto& e : r)
      if (!fld.is_zero(e)) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(Errc::AmbientMismatch, "contains: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

private:
  std::size_t ambient_;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
  return Subspace<F>::row_space(kernel_raw(m));
}

template <class F>
Subspace<F> join(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient() != b.ambient()) throw Error(Errc::AmbientMismatch, "join: ambient mismatch");
  return Subspace<F>::row_space(vstack(a.basis(), b.basis()));
}

/// Rows spanning the annihilator {f : f . s = 0 for all s in S} of the
/// ambient dual; doubles as a constraint matrix describing S.
template <class F>
Matrix<F> annihilator(const Subspace<F>& s) {
  return kernel_raw(s.basis());
}

/// Intersection via the kernel of the stacked dual descriptions of a and b.
template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient() != b.ambient()) throw Error(Errc::AmbientMismatch, "intersect: ambient mismatch");
  return kernel(vstack(annihilator(a), annihilator(b)));
}

/// preimage(m, w) = {x : m * x in w}.
template <class F>
Subspace<F> preimage(const Matrix<F>& m, const Subspace<F>& w) {
  if (w.ambient() != m.rows())
    throw Error(Errc::AmbientMismatch, "preimage: w must live in the codomain of m");
  return kernel(mat_mul(annihilator(w), m));
}

/// Indices of the standard basis vectors completing s to the ambient space
/// (the non-pivot coordinates of the echelon basis). Deterministic.
template <class F>
std::vector<std::size_t> complement_coords(const Subspace<F>& s) {
  std::vector<bool> is_pivot(s.ambient(), false);
  for (auto c : s.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.ambient(); ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

/// The canonical complement-of-rel part of a space containing rel: every
/// basis vector of the result is reduced modulo rel, and
/// dim(result) = dim(space) - dim(rel) whenever rel is contained in space.
template <class F>
Subspace<F> mod_reduce(const Subspace<F>& space, const Subspace<F>& rel) {
  if (space.ambient() != rel.ambient())
    throw Error(Errc::AmbientMismatch, "mod_reduce: ambient mismatch");
  std::vector<Vec<F>> rows;
  rows.reserve(space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) rows.push_back(rel.reduce(space.basis().row(i)));
  return Subspace<F>::span_of(space.field(), space.ambient(), rows);
}

/// Incrementally maintained reduced echelon span; the workhorse behind the
/// enumeration sweeps. Insertion keeps the basis fully reduced, so
/// to_subspace() is canonical at any point.
template <class F>
class SpanAccumulator {
public:
  SpanAccumulator(F fld, std::size_t ambient)
      : fld_(std::move(fld)), ambient_(ambient) {}

  explicit SpanAccumulator(const Subspace<F>& seed)
      : fld_(seed.field()), ambient_(seed.ambient()) {
    for (std::size_t i = 0; i < seed.dim(); ++i) insert(seed.basis().row(i));
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  /// Returns true when the vector enlarged the span.
  bool insert(Vec<F> v) {
    if (v.size() != ambient_) throw Error(Errc::AmbientMismatch, "insert: length mismatch");
    // reduce against current rows
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& c = v[pivots_[i]];
      if (fld_.is_zero(c)) continue;
      const auto f = c;
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        v[j] = fld_.sub(v[j], fld_.mul(f, rows_[i][j]));
    }
    std::size_t lead = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!fld_.is_zero(v[j])) {
        lead = j;
        break;
      }
    if (lead == ambient_) return false;
    const auto inv = fld_.inv(v[lead]);
    for (std::size_t j = lead; j < ambient_; ++j) v[j] = fld_.mul(v[j], inv);
    // clear the new pivot column in existing rows
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& c = rows_[i][lead];
      if (fld_.is_zero(c)) continue;
      const auto f = c;
      for (std::size_t j = lead; j < ambient_; ++j)
        rows_[i][j] = fld_.sub(rows_[i][j], fld_.mul(f, v[j]));
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
  }

  bool contains(const Vec<F>& v) const { return to_subspace().contains(v); }

  Subspace<F> to_subspace() const {
    return Subspace<F>::row_space(Matrix<F>::from_rows(fld_, ambient_, rows_));
  }

private:
  F fld_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace liemult
