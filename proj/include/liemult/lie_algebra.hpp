#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liemult/subspace.hpp"

namespace liemult {

/// A finite-dimensional Lie algebra presented by structure constants on a
/// fixed basis b_1..b_n. Only pairs i < j are stored; [b_j,b_i] = -[b_i,b_j]
/// and [b_i,b_i] = 0 hold by construction. Instances are immutable once
/// built; every operation below is a pure function.
template <class F>
class LieAlgebra {
public:
  using Elt = typename F::Elt;

  LieAlgebra(F fld, std::string name, std::size_t n)
      : fld_(std::move(fld)),
        name_(std::move(name)),
        n_(n),
        sc_(n * (n > 0 ? n - 1 : 0) / 2, Vec<F>(n, fld_.zero())) {}

  const F& field() const { return fld_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return n_; }

  std::size_t pair_count() const { return sc_.size(); }

  /// Index of the ordered pair (i,j), i < j, in lexicographic order.
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    if (!(i < j && j < n_)) throw Error(Errc::BadInput, "pair_index: need i < j < dim");
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  void set_bracket(std::size_t i, std::size_t j, Vec<F> coeffs) {
    if (coeffs.size() != n_) throw Error(Errc::LengthMismatch, "set_bracket: bad coefficient count");
    sc_[pair_index(i, j)] = std::move(coeffs);
  }
  void set_bracket_basis(std::size_t i, std::size_t j, std::size_t k, const Elt& c) {
    if (k >= n_) throw Error(Errc::BadInput, "set_bracket_basis: target out of range");
    sc_[pair_index(i, j)][k] = c;
  }

  /// [b_i, b_j] for arbitrary i, j (sign handled structurally).
  Vec<F> bracket_basis(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw Error(Errc::BadInput, "bracket_basis: index out of range");
    Vec<F> out(n_, fld_.zero());
    if (i == j) return out;
    if (i < j) return sc_[pair_index(i, j)];
    const auto& v = sc_[pair_index(j, i)];
    for (std::size_t k = 0; k < n_; ++k) out[k] = fld_.neg(v[k]);
    return out;
  }

  Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
    if (x.size() != n_ || y.size() != n_)
      throw Error(Errc::LengthMismatch, "bracket: vector length mismatch");
    Vec<F> out(n_, fld_.zero());
    for (std::size_t i = 0; i < n_; ++i) {
      if (fld_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (fld_.is_zero(y[j]) || i == j) continue;
        const auto c = fld_.mul(x[i], y[j]);
        if (i < j) {
          const auto& v = sc_[pair_index(i, j)];
          for (std::size_t k = 0; k < n_; ++k)
            out[k] = fld_.add(out[k], fld_.mul(c, v[k]));
        } else {
          const auto& v = sc_[pair_index(j, i)];
          for (std::size_t k = 0; k < n_; ++k)
            out[k] = fld_.sub(out[k], fld_.mul(c, v[k]));
        }
      }
    }
    return out;
  }

  /// Matrix of ad(x) : y -> [x, y].
  Matrix<F> ad(const Vec<F>& x) const {
    Matrix<F> m(fld_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
      Vec<F> e(n_, fld_.zero());
      e[j] = fld_.one();
      auto col = bracket(x, e);
      for (std::size_t k = 0; k < n_; ++k) m.at(k, j) = col[k];
    }
    return m;
  }

  Matrix<F> ad_basis(std::size_t i) const {
    Vec<F> e(n_, fld_.zero());
    e[i] = fld_.one();
    return ad(e);
  }

  Vec<F> basis_vector(std::size_t i) const {
    Vec<F> e(n_, fld_.zero());
    e[i] = fld_.one();
    return e;
  }

private:
  F fld_;
  std::string name_;
  std::size_t n_;
  std::vector<Vec<F>> sc_;  // pair (i<j) -> coefficients of [b_i, b_j]
};

template <class F>
struct JacobiViolation {
  std::size_t i, j, k;  // 0-based basis triple
  Vec<F> residual;      // [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]
};

template <class F>
struct ValidationReport {
  bool ok = true;
  std::vector<JacobiViolation<F>> violations;
};

/// Checks the Jacobi identity on every basis triple; antisymmetry needs no
/// check because only i < j brackets are stored.
template <class F>
ValidationReport<F> validate(const LieAlgebra<F>& L) {
  const F& fld = L.field();
  const std::size_t n = L.dim();
  ValidationReport<F> rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto r = L.bracket(L.bracket_basis(i, j), L.basis_vector(k));
        auto s = L.bracket(L.bracket_basis(j, k), L.basis_vector(i));
        auto t = L.bracket(L.bracket_basis(k, i), L.basis_vector(j));
        bool zero = true;
        for (std::size_t m = 0; m < n; ++m) {
          r[m] = fld.add(r[m], fld.add(s[m], t[m]));
          if (!fld.is_zero(r[m])) zero = false;
        }
        if (!zero) {
          rep.ok = false;
          rep.violations.push_back({i, j, k, std::move(r)});
        }
      }
  return rep;
}

/// span{[x, s] : x in L, s in S}.
template <class F>
Subspace<F> bracket_space(const LieAlgebra<F>& L, const Subspace<F>& S) {
  SpanAccumulator<F> acc(L.field(), L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t r = 0; r < S.dim(); ++r)
      acc.insert(L.bracket(L.basis_vector(i), S.basis().row(r)));
  return acc.to_subspace();
}

template <class F>
Subspace<F> derived(const LieAlgebra<F>& L) {
  SpanAccumulator<F> acc(L.field(), L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) acc.insert(L.bracket_basis(i, j));
  return acc.to_subspace();
}

template <class F>
Subspace<F> centralizer(const LieAlgebra<F>& L, const Vec<F>& x) {
  return kernel(L.ad(x));
}

template <class F>
Subspace<F> center(const LieAlgebra<F>& L) {
  if (L.dim() == 0) return Subspace<F>::zero(L.field(), 0);
  Matrix<F> stacked(L.field(), 0, L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) stacked = vstack(stacked, L.ad_basis(i));
  return kernel(stacked);
}

/// L^1 = L, L^{k+1} = [L, L^k]; the list ends at the first repeated term
/// (the zero subspace exactly when L is nilpotent).
template <class F>
std::vector<Subspace<F>> lower_central_series(const LieAlgebra<F>& L) {
  std::vector<Subspace<F>> series;
  series.push_back(Subspace<F>::full(L.field(), L.dim()));
  while (true) {
    auto next = bracket_space(L, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

/// Nilpotency class, or nullopt when the series stabilizes above zero.
template <class F>
std::optional<std::size_t> nilpotency_class(const LieAlgebra<F>& L) {
  auto series = lower_central_series(L);
  if (series.back().dim() != 0) return std::nullopt;
  return series.size() - 1;
}

template <class F>
LieAlgebra<F> direct_sum(const LieAlgebra<F>& a, const LieAlgebra<F>& b) {
  if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "direct_sum: field mismatch");
  const F& fld = a.field();
  const std::size_t na = a.dim(), nb = b.dim();
  LieAlgebra<F> out(fld, a.name() + "+" + b.name(), na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j) {
      auto v = a.bracket_basis(i, j);
      Vec<F> w(na + nb, fld.zero());
      for (std::size_t k = 0; k < na; ++k) w[k] = v[k];
      out.set_bracket(i, j, std::move(w));
    }
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      auto v = b.bracket_basis(i, j);
      Vec<F> w(na + nb, fld.zero());
      for (std::size_t k = 0; k < nb; ++k) w[na + k] = v[k];
      out.set_bracket(na + i, na + j, std::move(w));
    }
  return out;
}

template <class F>
bool is_ideal(const LieAlgebra<F>& L, const Subspace<F>& S) {
  if (S.ambient() != L.dim()) throw Error(Errc::AmbientMismatch, "is_ideal: ambient mismatch");
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t r = 0; r < S.dim(); ++r)
      if (!S.contains(L.bracket(L.basis_vector(i), S.basis().row(r)))) return false;
  return true;
}

/// Smallest subalgebra containing S: iterate S <- S + [S, S] to a fixed point.
template <class F>
Subspace<F> subalgebra_closure(const LieAlgebra<F>& L, Subspace<F> S) {
  if (S.ambient() != L.dim())
    throw Error(Errc::AmbientMismatch, "subalgebra_closure: ambient mismatch");
  while (true) {
    SpanAccumulator<F> acc(S);
    for (std::size_t r = 0; r < S.dim(); ++r)
      for (std::size_t s = r + 1; s < S.dim(); ++s)
        acc.insert(L.bracket(S.basis().row(r), S.basis().row(s)));
    if (acc.dim() == S.dim()) return S;
    S = acc.to_subspace();
  }
}

/// Quotient by an ideal, with the projection onto quotient coordinates and
/// the section embedding them back. The quotient basis is the set of
/// standard basis vectors at the non-pivot coordinates of the ideal.
template <class F>
struct QuotientResult {
  LieAlgebra<F> algebra;
  Matrix<F> proj;     // dim(L/I) x dim(L)
  Matrix<F> section;  // dim(L) x dim(L/I)
};

template <class F>
QuotientResult<F> quotient_algebra(const LieAlgebra<F>& L, const Subspace<F>& I,
                                   const std::string& name = "") {
  if (!is_ideal(L, I)) throw Error(Errc::NotAnIdeal, "quotient_algebra: not an ideal");
  const F& fld = L.field();
  const std::size_t n = L.dim();
  auto comp = complement_coords(I);
  const std::size_t m = comp.size();

  // quotient coordinates of x = non-pivot coordinates of x reduced mod I
  Matrix<F> proj(fld, m, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec<F> unit(n, fld.zero());
    unit[j] = fld.one();
    auto red = I.reduce(unit);
    for (std::size_t r = 0; r < m; ++r) proj.at(r, j) = red[comp[r]];
  }
  Matrix<F> section(fld, n, m);
  for (std::size_t r = 0; r < m; ++r) section.at(comp[r], r) = fld.one();

  LieAlgebra<F> Q(fld, name.empty() ? L.name() + "/ideal" : name, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto br = L.bracket(L.basis_vector(comp[i]), L.basis_vector(comp[j]));
      Q.set_bracket(i, j, mat_vec(proj, br));
    }
  return {std::move(Q), std::move(proj), std::move(section)};
}

}  // namespace liemult
