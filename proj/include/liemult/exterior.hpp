#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "liemult/lie_algebra.hpp"

namespace liemult {

template <class F>
struct WedgeElement {
  Vec<F> coords;  // length C(n,2), reduced modulo the relation subspace
  bool operator==(const WedgeElement& o) const {
    if (coords.size() != o.coords.size()) return false;
    return coords == o.coords;
  }
};

/// The nonabelian exterior square of L, realized as the wedge coordinate
/// space Lambda^2(L) together with the subspace B spanned by the
/// Jacobi-boundary vectors
///   r(i,j,k) = [b_i,b_j]^b_k - b_i^[b_j,b_k] + b_j^[b_i,b_k]
/// on basis triples i < j < k. Elements of L^L are wedge vectors modulo B;
/// canonical representatives are reduced against the echelon basis of B.
/// The commutator map kappa sends e_ij to [b_i,b_j].
template <class F>
class ExteriorSquare {
public:
  explicit ExteriorSquare(LieAlgebra<F> algebra)
      : alg_(std::move(algebra)),
        wdim_(alg_.dim() * (alg_.dim() > 0 ? alg_.dim() - 1 : 0) / 2),
        relB_(alg_.field(), wdim_),
        kappa_(alg_.field(), alg_.dim(), wdim_) {
    const F& fld = alg_.field();
    const std::size_t n = alg_.dim();
    pair_of_.reserve(wdim_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pair_of_.emplace_back(i, j);

    for (std::size_t c = 0; c < wdim_; ++c) {
      auto [i, j] = pair_of_[c];
      auto v = alg_.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) kappa_.at(k, c) = v[k];
    }

    SpanAccumulator<F> acc(fld, wdim_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          Vec<F> r(wdim_, fld.zero());
          add_wedge_of(r, alg_.bracket_basis(i, j), alg_.basis_vector(k), fld.one());
          add_wedge_of(r, alg_.basis_vector(i), alg_.bracket_basis(j, k), fld.neg(fld.one()));
          add_wedge_of(r, alg_.basis_vector(j), alg_.bracket_basis(i, k), fld.one());
          acc.insert(std::move(r));
        }
    relB_ = acc.to_subspace();
  }

  const LieAlgebra<F>& algebra() const { return alg_; }
  const F& field() const { return alg_.field(); }
  std::size_t wedge_dim() const { return wdim_; }
  const Subspace<F>& relations() const { return relB_; }
  const Matrix<F>& kappa() const { return kappa_; }

  std::size_t index_of(std::size_t i, std::size_t j) const {
    return alg_.pair_index(i, j);
  }
  std::pair<std::size_t, std::size_t> pair_of(std::size_t c) const { return pair_of_[c]; }

  /// dim(L ^ L) = C(n,2) - dim B.
  std::size_t lie_wedge_dim() const { return wdim_ - relB_.dim(); }

  /// dim M(L) = dim(L ^ L) - dim L^2; kappa maps the wedge generators onto
  /// spanning brackets, so it is surjective onto the derived subalgebra.
  std::size_t schur_dim() const { return lie_wedge_dim() - derived(alg_).dim(); }

  /// Raw wedge coordinates of x ^ y, not reduced modulo relations.
  Vec<F> wedge_raw(const Vec<F>& x, const Vec<F>& y) const {
    if (x.size() != alg_.dim() || y.size() != alg_.dim())
      throw Error(Errc::LengthMismatch, "wedge: vector length mismatch");
    const F& fld = alg_.field();
    Vec<F> out(wdim_, fld.zero());
    for (std::size_t c = 0; c < wdim_; ++c) {
      auto [i, j] = pair_of_[c];
      out[c] = fld.sub(fld.mul(x[i], y[j]), fld.mul(x[j], y[i]));
    }
    return out;
  }

  WedgeElement<F> wedge(const Vec<F>& x, const Vec<F>& y) const {
    return {relB_.reduce(wedge_raw(x, y))};
  }

  WedgeElement<F> reduce(Vec<F> v) const { return {relB_.reduce(std::move(v))}; }

  Vec<F> kappa_of(const Vec<F>& wedge_coords) const { return mat_vec(kappa_, wedge_coords); }

  /// The bracket of L ^ L on generators: [(m^n), (m'^n')] = -[n,m] ^ [m',n']
  /// = [m,n] ^ [m',n'].
  WedgeElement<F> wedge_bracket(const Vec<F>& m, const Vec<F>& n, const Vec<F>& m2,
                                const Vec<F>& n2) const {
    return wedge(alg_.bracket(m, n), alg_.bracket(m2, n2));
  }

  /// The Schur multiplier M(L) = ker(kappa) taken modulo relations, returned
  /// with canonical (relation-reduced) representatives in wedge coordinates:
  /// the kernel of kappa within the coordinate complement of B (vectors
  /// vanishing at every pivot column of B).
  Subspace<F> schur_multiplier() const {
    const F& fld = field();
    Matrix<F> reduced_constraint(fld, relB_.dim(), wdim_);
    for (std::size_t r = 0; r < relB_.pivots().size(); ++r)
      reduced_constraint.at(r, relB_.pivots()[r]) = fld.one();
    return kernel(vstack(kappa_, reduced_constraint));
  }

private:
  void add_wedge_of(Vec<F>& out, const Vec<F>& x, const Vec<F>& y,
                    const typename F::Elt& scale) const {
    const F& fld = alg_.field();
    for (std::size_t c = 0; c < wdim_; ++c) {
      auto [i, j] = pair_of_[c];
      auto t = fld.sub(fld.mul(x[i], y[j]), fld.mul(x[j], y[i]));
      out[c] = fld.add(out[c], fld.mul(scale, t));
    }
  }

  LieAlgebra<F> alg_;
  std::size_t wdim_;
  std::vector<std::pair<std::size_t, std::size_t>> pair_of_;
  Subspace<F> relB_;
  Matrix<F> kappa_;
};

template <class F>
ExteriorSquare<F> exterior_square(const LieAlgebra<F>& L) {
  return ExteriorSquare<F>(L);
}

struct CurlyDims {
  std::size_t curly;        // dim(L curly-wedge L)
  std::size_t bogomolov;    // dim B~0
  std::size_t derived_dim;  // dim L^2
};

/// Dimensions of the curly exterior product from a commuting-wedge subspace
/// M0 contained in M(L); checks the exact-sequence identity
/// dim(L curly L) = dim B~0 + dim L^2.
template <class F>
CurlyDims curly_dims(const ExteriorSquare<F>& es, const Subspace<F>& m0) {
  auto M = es.schur_multiplier();
  if (!M.contains(m0))
    throw Error(Errc::SubspaceNotContained, "curly_dims: M0 is not contained in M");
  CurlyDims d{};
  d.derived_dim = derived(es.algebra()).dim();
  d.curly = es.lie_wedge_dim() - m0.dim();
  d.bogomolov = M.dim() - m0.dim();
  if (d.curly != d.bogomolov + d.derived_dim)
    throw Error(Errc::Internal, "curly_dims: exact-sequence identity violated");
  return d;
}

template <class F>
CurlyDims curly_dims(const LieAlgebra<F>& L, const Subspace<F>& m0) {
  return curly_dims(ExteriorSquare<F>(L), m0);
}

struct TSInvariants {
  long long t;  // n(n-1)/2 - dim M
  long long s;  // n(n-1)(n-2)/2 + 1 - dim M
  bool s_negative;
};

template <class F>
TSInvariants t_s_invariants(const ExteriorSquare<F>& es) {
  const long long n = static_cast<long long>(es.algebra().dim());
  const long long m = static_cast<long long>(es.schur_dim());
  TSInvariants out{};
  out.t = n * (n - 1) / 2 - m;
  out.s = n * (n - 1) * (n - 2) / 2 + 1 - m;
  out.s_negative = out.s < 0;
  return out;
}

template <class F>
TSInvariants t_s_invariants(const LieAlgebra<F>& L) {
  return t_s_invariants(ExteriorSquare<F>(L));
}

}  // namespace liemult
