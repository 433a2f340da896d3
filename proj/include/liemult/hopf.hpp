#pragma once

#include "liemult/bogomolov.hpp"
#include "liemult/presentation.hpp"

namespace liemult {

/// dim M(L) by the Hopf formula: dim (R n F^2) / [R, F].
template <class F>
std::size_t hopf_schur(const FreePresentation<F>& P) {
  return intersect(P.R, derived(P.free)).dim() - P.RF.dim();
}

namespace detail {

/// <K(cover) n target>: the subalgebra of the cover generated by the bracket
/// values lying in the target subspace, by the same per-x linearization as
/// the commuting-wedge sweep. Exact in exhaustive mode, a certified subset
/// in sampled mode.
template <class F>
Subspace<F> cover_bracket_subalgebra(const FreePresentation<F>& P, const Subspace<F>& target,
                                     const Mode& mode, SweepStats* stats_out = nullptr) {
  const auto& C = P.cover;
  SpanAccumulator<F> acc(C.field(), C.dim());
  auto emit = [&](const Vec<F>& x, const Vec<F>& y) { return C.bracket(x, y); };
  std::size_t cap = intersect(target, derived(C)).dim();
  SweepStats stats;
  if (is_exhaustive(mode))
    stats = exhaustive_pair_sweep(C, target, acc, cap, emit);
  else
    stats = sampled_pair_sweep(C, target, acc, cap, std::get<Sampled>(mode), emit);
  if (stats_out) *stats_out = stats;
  return subalgebra_closure(C, acc.to_subspace());
}

}  // namespace detail

/// B~0(L) = (R n F^2) / <K(F) n R>, computed in the cover, where the
/// numerator is the Hopf multiplier and the denominator is the span of the
/// bracket values of the cover lying in the central copy of R. Certification
/// semantics match bogomolov_report.
template <class F>
MultiplierReport hopf_bogomolov(const FreePresentation<F>& P, const Mode& mode) {
  const F& fld = P.cover.field();
  MultiplierReport rep;
  rep.field = spec_of(fld);
  rep.mode = is_exhaustive(mode) ? "exhaustive" : "sampled";
  rep.dim_L = P.algebra.dim();
  rep.dim_derived = derived(P.algebra).dim();
  rep.dim_wedge = derived(P.cover).dim();  // L ^ L = F^2 / [R, F]
  auto mult = intersect(P.R_bar, derived(P.cover));
  rep.dim_M = mult.dim();

  auto D = detail::cover_bracket_subalgebra(P, P.R_bar, mode, &rep.sweep);
  if (!mult.contains(D))
    throw Error(Errc::Internal, "hopf_bogomolov: bracket span escaped the multiplier");

  if (is_exhaustive(mode)) {
    rep.dim_M0_lower = rep.dim_M0_upper = D.dim();
    rep.status = CertStatus::ExactExhaustive;
  } else {
    const auto& s = std::get<Sampled>(mode);
    rep.seed = s.seed;
    rep.budget = s.budget;
    rep.window = s.window;
    rep.dim_M0_lower = D.dim();
    rep.dim_M0_upper = rep.dim_M;
    rep.status =
        rep.dim_M0_lower == rep.dim_M ? CertStatus::ExactCertifiedZero : CertStatus::Bounded;
  }
  rep.m0_kernel_checked = true;
  rep.dim_B0_lower = rep.dim_M - rep.dim_M0_upper;
  rep.dim_B0_upper = rep.dim_M - rep.dim_M0_lower;
  rep.dim_curly_lower = rep.dim_wedge - rep.dim_M0_upper;
  rep.dim_curly_upper = rep.dim_wedge - rep.dim_M0_lower;
  attach_certification_notes(rep);
  rep.notes.push_back("computed through the free presentation cover F/[R,F] on " +
                      std::to_string(P.gens) + " generators of class " +
                      std::to_string(P.cls + 1));
  return rep;
}

template <class F>
Subspace<F> cover_image(const FreePresentation<F>& P, const Subspace<F>& sub_of_free) {
  std::vector<Vec<F>> rows;
  for (std::size_t r = 0; r < sub_of_free.dim(); ++r)
    rows.push_back(mat_vec(P.cover_proj, sub_of_free.basis().row(r)));
  return Subspace<F>::span_of(P.cover.field(), P.cover.dim(), rows);
}

struct Seq43Dims {
  std::size_t term1;      // dim (R n <K(F) n T>) / <K(F) n R>
  std::size_t b0_L;       // dim B~0(L)
  std::size_t b0_LM;      // dim B~0(L/M)
  std::size_t term4;      // dim (M n L^2) / <K(L) n M>
  bool exact() const { return term1 + b0_LM == b0_L + term4; }
};

/// The four terms of the relative four-term exact sequence
///   0 -> (R n <K(F) n T>)/<K(F) n R> -> B~0(L) -> B~0(L/M)
///     -> (M n L^2)/<K(L) n M> -> 0
/// with T = ker(F -> L/M), all computed in the cover; the check is that the
/// alternating dimension sum vanishes. Exhaustive mode only.
template <class F>
Seq43Dims seq43_dims(const FreePresentation<F>& P, const Subspace<F>& M, const Mode& mode) {
  if (!is_exhaustive(mode))
    throw Error(Errc::ModeUnsupported, "seq43: the dimension check needs exhaustive mode");
  if (!is_ideal(P.algebra, M)) throw Error(Errc::NotAnIdeal, "seq43: M must be an ideal");

  auto T = join(preimage(P.pi, M), P.R);
  auto T_bar = cover_image(P, T);
  auto C2 = derived(P.cover);

  auto D_R = detail::cover_bracket_subalgebra(P, P.R_bar, mode);
  auto D_T = detail::cover_bracket_subalgebra(P, T_bar, mode);

  Seq43Dims out{};
  out.term1 = intersect(P.R_bar, D_T).dim() - D_R.dim();
  out.b0_L = intersect(P.R_bar, C2).dim() - D_R.dim();
  out.b0_LM = intersect(T_bar, C2).dim() - D_T.dim();
  out.term4 = relative_terms(P.algebra, M, mode).dim_M_derived_quotient;
  return out;
}

template <class F>
bool seq43_dimension_check(const FreePresentation<F>& P, const Subspace<F>& M, const Mode& mode) {
  return seq43_dims(P, M, mode).exact();
}

struct Prop42Segment {
  std::size_t dim_im_f;   // image of B~0(L) -> B~0(L/M)
  std::size_t dim_ker_g;  // kernel of B~0(L/M) -> M/<K(L) n M>
  bool node_equal;        // the two agree as subspaces of the cover
};

/// The middle node of the five-term restriction sequence, realized through
/// the inclusion-induced maps on the cover's subspace chain:
///   im f* = ((R n F^2) + <K(F) n T>) / <K(F) n T>
///   ker g* = ((T n F^2) n (<K(F) n T> + R)) / <K(F) n T>.
template <class F>
Prop42Segment prop42_segment(const FreePresentation<F>& P, const Subspace<F>& M,
                             const Mode& mode) {
  if (!is_ideal(P.algebra, M)) throw Error(Errc::NotAnIdeal, "prop42: M must be an ideal");
  auto T = join(preimage(P.pi, M), P.R);
  auto T_bar = cover_image(P, T);
  auto C2 = derived(P.cover);
  auto D_T = detail::cover_bracket_subalgebra(P, T_bar, mode);

  auto im_f = join(intersect(P.R_bar, C2), D_T);
  auto ker_g = intersect(intersect(T_bar, C2), join(D_T, P.R_bar));
  Prop42Segment out{};
  out.dim_im_f = im_f.dim() - D_T.dim();
  out.dim_ker_g = ker_g.dim() - D_T.dim();
  out.node_equal = im_f == ker_g;
  return out;
}

}  // namespace liemult
