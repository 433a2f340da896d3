#pragma once

#include <utility>

#include "liemult/hall.hpp"

namespace liemult {

/// A free presentation L = F/R of a nilpotent algebra of class c, with F the
/// free nilpotent algebra of class c+1 on d = dim(L/L^2) generators in Hall
/// coordinates. Every Hall element of weight c+2 or more already lies in
/// [R, F], so this truncation computes the same multiplier data as the free
/// Lie algebra would. The cover F/[R,F] carries R/[R,F] centrally.
template <class F>
struct FreePresentation {
  LieAlgebra<F> algebra;         // L itself
  LieAlgebra<F> free;            // F, free nilpotent of class c+1
  HallBasis hall;                // Hall coordinates of F
  std::size_t gens;              // d
  std::size_t cls;               // nilpotency class of L
  Matrix<F> pi;                  // dim L x dim F, the presentation surjection
  Subspace<F> R;                 // ker(pi)
  Subspace<F> RF;                // [R, F]
  LieAlgebra<F> cover;           // F / [R, F]
  Matrix<F> cover_proj;          // dim cover x dim F
  Matrix<F> cover_section;       // dim F x dim cover
  Subspace<F> R_bar;             // image of R in the cover (central there)
};

template <class F>
FreePresentation<F> presentation(const LieAlgebra<F>& L) {
  auto cls_opt = nilpotency_class(L);
  if (!cls_opt || *cls_opt == 0)
    throw Error(Errc::NotNilpotent, "presentation: the Hopf path needs a nilpotent algebra");
  const std::size_t cls = *cls_opt;
  const F& fld = L.field();
  const std::size_t n = L.dim();

  auto d2 = derived(L);
  const std::size_t d = n - d2.dim();
  auto comp = complement_coords(d2);

  HallBasis hb(d, cls + 1);
  auto Falg = free_nilpotent(d, cls + 1, fld);
  const std::size_t nf = hb.size();

  // pi on Hall elements: generators go to the chosen lifts of a basis of
  // L/L^2, brackets follow the Hall trees.
  std::vector<Vec<F>> img(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    if (hb[i].left < 0)
      img[i] = L.basis_vector(comp[hb[i].right]);
    else
      img[i] = L.bracket(img[hb[i].left], img[hb[i].right]);
  }
  Matrix<F> pi(fld, n, nf);
  for (std::size_t c = 0; c < nf; ++c)
    for (std::size_t r = 0; r < n; ++r) pi.at(r, c) = img[c][r];
  if (Subspace<F>::row_space(transpose(pi)).dim() != n)
    throw Error(Errc::Internal, "presentation: generator lifts do not generate");

  auto R = kernel(pi);

  SpanAccumulator<F> rf_acc(fld, nf);
  for (std::size_t r = 0; r < R.dim(); ++r)
    for (std::size_t j = 0; j < nf; ++j)
      rf_acc.insert(Falg.bracket(R.basis().row(r), Falg.basis_vector(j)));
  auto RF = rf_acc.to_subspace();

  auto q = quotient_algebra(Falg, RF, L.name() + " cover");
  std::vector<Vec<F>> rbar_rows;
  for (std::size_t r = 0; r < R.dim(); ++r) rbar_rows.push_back(mat_vec(q.proj, R.basis().row(r)));
  auto R_bar = Subspace<F>::span_of(fld, q.algebra.dim(), rbar_rows);

  return FreePresentation<F>{L,
                             std::move(Falg),
                             std::move(hb),
                             d,
                             cls,
                             std::move(pi),
                             std::move(R),
                             std::move(RF),
                             std::move(q.algebra),
                             std::move(q.proj),
                             std::move(q.section),
                             std::move(R_bar)};
}

}  // namespace liemult
