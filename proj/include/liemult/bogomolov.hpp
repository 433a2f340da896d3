#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "liemult/engine.hpp"
#include "liemult/exterior.hpp"

namespace liemult {

enum class CertStatus { ExactExhaustive, ExactCertifiedZero, Bounded };

inline std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::ExactExhaustive: return "ExactExhaustive";
    case CertStatus::ExactCertifiedZero: return "ExactCertifiedZero";
    case CertStatus::Bounded: return "Bounded";
  }
  return "?";
}

/// Certification record for one multiplier computation over one field.
/// Exhaustive dims are exact; sampled dims are one-sided: the commuting-wedge
/// span is a certified subset of the truth, so dim M0 gets a lower bound and
/// dim B~0 an upper bound, with equality certified when the span reaches
/// dim M (then B~0 = 0 over the given field).
struct MultiplierReport {
  FieldSpec field;
  std::string mode;  // "exhaustive" or "sampled"
  std::size_t dim_L = 0;
  std::size_t dim_derived = 0;
  std::size_t dim_wedge = 0;  // dim(L ^ L)
  std::size_t dim_M = 0;
  std::size_t dim_M0_lower = 0, dim_M0_upper = 0;
  std::size_t dim_B0_lower = 0, dim_B0_upper = 0;
  std::size_t dim_curly_lower = 0, dim_curly_upper = 0;
  CertStatus status = CertStatus::Bounded;
  SweepStats sweep;
  std::uint64_t seed = 0;
  std::size_t budget = 0, window = 0;
  bool m0_kernel_checked = false;
  std::vector<std::string> notes;

  bool exact() const { return dim_M0_lower == dim_M0_upper; }
};

template <class F>
struct PairSpanQuery {
  const LieAlgebra<F>& algebra;
  const Subspace<F>& target;  // W: the condition is [x, y] in W
  Mode mode;
};

/// Spells out what the bounds certify over which field.
inline void attach_certification_notes(MultiplierReport& rep) {
  const bool over_q = rep.field.kind == FieldSpec::Kind::Rationals;
  if (rep.mode == "exhaustive") {
    rep.notes.push_back("exhaustive enumeration over F_" + std::to_string(rep.field.p) +
                        ": dim M0 is exact over this field");
  } else if (rep.status == CertStatus::ExactCertifiedZero) {
    rep.notes.push_back(
        "sampled commuting wedges span all of M, so B~0 = 0 is certified over this field");
    if (over_q)
      rep.notes.push_back(
          "the certifying span has rational coefficients and survives extension of scalars, so "
          "B~0 = 0 over every extension field as well");
  } else {
    rep.notes.push_back(
        "sampled span certifies dim M0 >= " + std::to_string(rep.dim_M0_lower) +
        "; dim M is always an upper bound, so the B~0 bounds are one-sided");
  }
  if (rep.dim_M == 0 && over_q)
    rep.notes.push_back(
        "dim M = 0 over Q already forces B~0 = 0, and matrix ranks do not change under field "
        "extension, so the multiplier vanishes over every extension field");
}

namespace detail {

/// Shared body of pair_span: accumulate commuting-type wedges into an
/// accumulator seeded with the relation subspace, so the quotient dimension
/// is acc.dim() - dim B at any point. Returns the sweep stats.
template <class F>
SweepStats pair_span_sweep(const ExteriorSquare<F>& es, const Subspace<F>& W, const Mode& mode,
                           SpanAccumulator<F>& acc) {
  const auto& L = es.algebra();
  auto emit = [&](const Vec<F>& x, const Vec<F>& y) { return es.wedge_raw(x, y); };
  // Everything inserted lies in {v : kappa(v) in W}, which also contains B.
  std::size_t cap = preimage(es.kappa(), W).dim();
  if (is_exhaustive(mode))
    return exhaustive_pair_sweep(L, W, acc, cap, emit);
  return sampled_pair_sweep(L, W, acc, cap, std::get<Sampled>(mode), emit);
}

}  // namespace detail

/// Span of the wedges x ^ y over pairs with [x, y] in W, as a subspace of
/// wedge coordinates in canonical relation-reduced form. Exact over F_p in
/// exhaustive mode; a certified subset of the true span in sampled mode.
template <class F>
Subspace<F> pair_span(const PairSpanQuery<F>& q, SweepStats* stats_out = nullptr) {
  ExteriorSquare<F> es(q.algebra);
  SpanAccumulator<F> acc(es.relations());
  auto stats = detail::pair_span_sweep(es, q.target, q.mode, acc);
  if (stats_out) *stats_out = stats;
  return mod_reduce(acc.to_subspace(), es.relations());
}

/// Composes the Schur multiplier with the commuting-wedge span into a
/// certified report; see MultiplierReport for the bound semantics.
template <class F>
MultiplierReport bogomolov_report(const ExteriorSquare<F>& es, const Mode& mode) {
  const auto& L = es.algebra();
  const F& fld = L.field();
  MultiplierReport rep;
  rep.field = spec_of(fld);
  rep.mode = is_exhaustive(mode) ? "exhaustive" : "sampled";
  rep.dim_L = L.dim();
  rep.dim_derived = derived(L).dim();
  rep.dim_wedge = es.lie_wedge_dim();
  rep.dim_M = es.schur_dim();

  auto M = es.schur_multiplier();
  Subspace<F> zero = Subspace<F>::zero(fld, L.dim());
  SpanAccumulator<F> acc(es.relations());
  rep.sweep = detail::pair_span_sweep(es, zero, mode, acc);
  auto m0 = mod_reduce(acc.to_subspace(), es.relations());

  // M0 <= M, verified member by member: every basis vector of the span is a
  // combination of wedges of commuting pairs, so kappa kills it.
  rep.m0_kernel_checked = true;
  for (std::size_t r = 0; r < m0.dim(); ++r) {
    auto img = es.kappa_of(m0.basis().row(r));
    for (const auto& e : img)
      if (!fld.is_zero(e))
        throw Error(Errc::Internal, "commuting-wedge span escaped ker(kappa)");
  }
  if (!M.contains(m0)) throw Error(Errc::Internal, "commuting-wedge span escaped M");

  if (is_exhaustive(mode)) {
    rep.dim_M0_lower = rep.dim_M0_upper = m0.dim();
    rep.status = CertStatus::ExactExhaustive;
  } else {
    const auto& s = std::get<Sampled>(mode);
    rep.seed = s.seed;
    rep.budget = s.budget;
    rep.window = s.window;
    rep.dim_M0_lower = m0.dim();
    rep.dim_M0_upper = rep.dim_M;
    rep.status =
        rep.dim_M0_lower == rep.dim_M ? CertStatus::ExactCertifiedZero : CertStatus::Bounded;
  }
  rep.dim_B0_lower = rep.dim_M - rep.dim_M0_upper;
  rep.dim_B0_upper = rep.dim_M - rep.dim_M0_lower;
  rep.dim_curly_lower = rep.dim_wedge - rep.dim_M0_upper;
  rep.dim_curly_upper = rep.dim_wedge - rep.dim_M0_lower;
  attach_certification_notes(rep);
  return rep;
}

template <class F>
MultiplierReport bogomolov_report(const LieAlgebra<F>& L, const Mode& mode) {
  return bogomolov_report(ExteriorSquare<F>(L), mode);
}

template <class F>
struct BracketFormCertificate {
  Subspace<F> forms;  // span of the bracket component forms, as wedge functionals
  std::size_t dim_M1 = 0;
  std::size_t certified_b0_lower = 0;
};

/// A sound-but-weak nonzero certificate over the rationals: the components
/// of the bracket are alternating forms vanishing on every commuting pair
/// and on every relation vector (their value there is a Jacobi sum), so
/// M1 = M intersect (common kernel of the forms) contains M0 and
/// dim M - dim M1 is a certified lower bound for dim B~0. The forms span
/// exactly the row space of kappa, so the bound cannot see vanishing forms
/// outside that span and can be strictly weaker than the truth.
template <class F>
BracketFormCertificate<F> bracket_form_certificate(const ExteriorSquare<F>& es) {
  BracketFormCertificate<F> out{Subspace<F>::row_space(es.kappa()), 0, 0};
  auto M = es.schur_multiplier();
  auto M1 = intersect(M, kernel(out.forms.basis()));
  out.dim_M1 = M1.dim();
  out.certified_b0_lower = M.dim() - M1.dim();
  return out;
}

template <class F>
BracketFormCertificate<F> bracket_form_certificate(const LieAlgebra<F>& L) {
  return bracket_form_certificate(ExteriorSquare<F>(L));
}

enum class CpVerdict { CP, NotCP, Unknown };

template <class F>
struct CpResult {
  CpVerdict verdict;
  std::optional<BracketWitness<F>> witness;  // present for NotCP
};

template <class F>
struct CentralExtensionSpec {
  LieAlgebra<F> total;  // C
  Subspace<F> kernel;   // M, an ideal inside the center of C
};

namespace detail {

/// Decides whether some bracket value of C lies in M \ {0}; shared by the
/// CP-extension and CP-subalgebra checks.
template <class F>
CpResult<F> cp_engine(const LieAlgebra<F>& C, const Subspace<F>& M, const Mode& mode) {
  // Bracket values lie in the derived subalgebra; a trivial intersection
  // with it settles the question over any field.
  if (intersect(derived(C), M).dim() == 0) return {CpVerdict::CP, std::nullopt};
  if (is_exhaustive(mode)) {
    auto w = bracket_in_subspace_witness_exhaustive(C, M);
    if (w) return {CpVerdict::NotCP, std::move(w)};
    return {CpVerdict::CP, std::nullopt};
  }
  auto w = bracket_in_subspace_witness_sampled(C, M, std::get<Sampled>(mode));
  if (w) return {CpVerdict::NotCP, std::move(w)};
  return {CpVerdict::Unknown, std::nullopt};
}

}  // namespace detail

/// A central extension 0 -> M -> C -> C/M -> 0 preserves commutativity iff
/// no nonzero element of M is a bracket value of C.
template <class F>
CpResult<F> is_cp_central_extension(const CentralExtensionSpec<F>& e, const Mode& mode) {
  if (!is_ideal(e.total, e.kernel) || !center(e.total).contains(e.kernel))
    throw Error(Errc::KernelNotCentral, "cp check: kernel must be a central ideal");
  return detail::cp_engine(e.total, e.kernel, mode);
}

/// An abelian ideal M is a CP subalgebra of L iff M meets the set of bracket
/// values of L trivially.
template <class F>
CpResult<F> cp_subalgebra_check(const LieAlgebra<F>& L, const Subspace<F>& M, const Mode& mode) {
  if (!is_ideal(L, M)) throw Error(Errc::NotAnIdeal, "cp check: M must be an ideal");
  for (std::size_t r = 0; r < M.dim(); ++r)
    for (std::size_t s = r + 1; s < M.dim(); ++s) {
      auto br = L.bracket(M.basis().row(r), M.basis().row(s));
      for (const auto& e : br)
        if (!L.field().is_zero(e)) throw Error(Errc::NotAbelian, "cp check: M must be abelian");
    }
  return detail::cp_engine(L, M, mode);
}

struct RelativeTerms {
  std::size_t dim_bracket_span;     // dim <K(L) n M>
  std::size_t dim_M_quotient;       // dim M / <K(L) n M>
  std::size_t dim_M_derived_quotient;  // dim (M n L^2) / <K(L) n M>
  SweepStats sweep;
};

/// The subalgebra generated by the bracket values lying in an ideal M, and
/// the two quotient dimensions built from it. Exhaustive mode is exact over
/// F_p; sampled mode yields a certified subset of <K(L) n M>.
template <class F>
RelativeTerms relative_terms(const LieAlgebra<F>& L, const Subspace<F>& M, const Mode& mode) {
  if (!is_ideal(L, M)) throw Error(Errc::NotAnIdeal, "relative_terms: M must be an ideal");
  auto d = derived(L);
  auto md = intersect(M, d);
  SpanAccumulator<F> acc(L.field(), L.dim());
  auto emit = [&](const Vec<F>& x, const Vec<F>& y) { return L.bracket(x, y); };
  RelativeTerms out{};
  if (is_exhaustive(mode))
    out.sweep = exhaustive_pair_sweep(L, M, acc, md.dim(), emit);
  else
    out.sweep = sampled_pair_sweep(L, M, acc, md.dim(), std::get<Sampled>(mode), emit);
  auto D = subalgebra_closure(L, acc.to_subspace());
  if (!md.contains(D))
    throw Error(Errc::Internal, "relative_terms: bracket span escaped M n L^2");
  out.dim_bracket_span = D.dim();
  out.dim_M_quotient = M.dim() - D.dim();
  out.dim_M_derived_quotient = md.dim() - D.dim();
  return out;
}

/// Exactness of  M/<K(L) n M> -> L/L^2 -> (L/M)/(L/M)^2 -> 0  at the last
/// two nodes, checked with explicit matrices.
template <class F>
bool seq42_tail_check(const LieAlgebra<F>& L, const Subspace<F>& M, const Mode& mode) {
  if (!is_ideal(L, M)) throw Error(Errc::NotAnIdeal, "seq42: M must be an ideal");
  const F& fld = L.field();

  // <K(L) n M>, for the domain of the first map.
  SpanAccumulator<F> acc(fld, L.dim());
  auto emit = [&](const Vec<F>& x, const Vec<F>& y) { return L.bracket(x, y); };
  auto md = intersect(M, derived(L));
  if (is_exhaustive(mode))
    exhaustive_pair_sweep(L, M, acc, md.dim(), emit);
  else
    sampled_pair_sweep(L, M, acc, md.dim(), std::get<Sampled>(mode), emit);
  auto D = subalgebra_closure(L, acc.to_subspace());

  auto d = derived(L);
  auto qL2 = quotient_algebra(L, d);       // L/L^2 coordinates via proj
  auto qM = quotient_algebra(L, M);        // L/M
  auto d2 = derived(qM.algebra);
  auto qQ = quotient_algebra(qM.algebra, d2);  // (L/M)/(L/M)^2

  // alpha: M/<K n M> -> L/L^2 on representatives of M modulo D.
  auto mreps = mod_reduce(M, D);
  std::vector<Vec<F>> alpha_rows;
  for (std::size_t r = 0; r < mreps.dim(); ++r)
    alpha_rows.push_back(mat_vec(qL2.proj, mreps.basis().row(r)));
  auto im_alpha = Subspace<F>::span_of(fld, qL2.proj.rows(), alpha_rows);

  // beta: L/L^2 -> (L/M)/(L/M)^2.
  Matrix<F> beta = mat_mul(qQ.proj, mat_mul(qM.proj, qL2.section));
  bool surjective = Subspace<F>::row_space(transpose(beta)).dim() == qQ.proj.rows();
  auto ker_beta = kernel(beta);
  return surjective && im_alpha == ker_beta;
}

}  // namespace liemult
