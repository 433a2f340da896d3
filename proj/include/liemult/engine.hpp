#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "liemult/lie_algebra.hpp"

namespace liemult {

struct Exhaustive {};

struct Sampled {
  std::uint64_t seed;
  std::size_t budget = 5000;
  std::size_t window = 25;
};

using Mode = std::variant<Exhaustive, Sampled>;

inline bool is_exhaustive(const Mode& m) { return std::holds_alternative<Exhaustive>(m); }

struct SweepStats {
  std::uint64_t points = 0;       // x vectors processed
  std::uint64_t last_growth = 0;  // 1-based index of the last sample that grew the span
  bool early_exit = false;        // span hit its theoretical cap
  bool budget_exhausted = false;  // sampled: stopped by budget rather than stabilization
  std::size_t reducer_dim = 0;      // dim of the modded-out subspace J (exhaustive)
  std::size_t transversal_dim = 0;  // dim of the enumerated complement (exhaustive)
};

/// Exhaustive sweep over F_p for spans of bilinear images of bracket-constrained
/// pairs: accumulates span{ emit(x, y) : x, y in E, [x, y] in W }.
///
/// The pair set is swept with two reductions that preserve the span exactly:
/// scaling (projective representatives with first nonzero coordinate 1,
/// since emit is bilinear) and translation by J = {u : image(ad u) <= W}
/// (for j in J the pair condition holds for every y, and ad(x + j) = ad(x)
/// modulo W). Concretely:
///
///   span = sum_{j in basis J} emit(j, e_k)  over all basis vectors e_k
///        + sum_{x projective transversal of E/J} emit(x, basis preimage(ad x, W)).
///
/// When `cap` is given it must be the dimension of a space known to contain
/// the accumulated span; the sweep stops as soon as the accumulator reaches
/// it. The enumeration order is fixed, and the result is order-independent
/// anyway because subspace join is associative and commutative.
template <class F, class EmitFn>
SweepStats exhaustive_pair_sweep(const LieAlgebra<F>& E, const Subspace<F>& W,
                                 SpanAccumulator<F>& acc, std::optional<std::size_t> cap,
                                 EmitFn&& emit) {
  if constexpr (!F::is_finite) {
    throw Error(Errc::ModeUnsupported, "exhaustive mode requires a prime field");
  } else {
    const F& fld = E.field();
    const std::size_t n = E.dim();
    if (W.ambient() != n) throw Error(Errc::AmbientMismatch, "sweep: target ambient mismatch");
    SweepStats stats;

    auto at_cap = [&] { return cap && acc.dim() >= *cap; };
    if (at_cap()) {
      stats.early_exit = true;
      return stats;
    }

    Matrix<F> annW = annihilator(W);
    std::vector<Matrix<F>> constr;  // annW * ad(b_k), linear in the x argument
    constr.reserve(n);
    for (std::size_t k = 0; k < n; ++k) constr.push_back(mat_mul(annW, E.ad_basis(k)));

    Matrix<F> stacked(fld, 0, n);
    for (std::size_t k = 0; k < n; ++k) stacked = vstack(stacked, constr[k]);
    Subspace<F> J = kernel(stacked);
    stats.reducer_dim = J.dim();

    // J part: for these x the pair condition holds for every y.
    for (std::size_t r = 0; r < J.dim() && !at_cap(); ++r) {
      auto x = J.basis().row(r);
      ++stats.points;
      for (std::size_t k = 0; k < n; ++k) {
        if (acc.insert(emit(x, E.basis_vector(k)))) stats.last_growth = stats.points;
        if (at_cap()) break;
      }
    }
    if (at_cap()) {
      stats.early_exit = true;
      return stats;
    }

    auto tcoords = complement_coords(J);
    const std::size_t t = tcoords.size();
    stats.transversal_dim = t;
    const std::int64_t p = fld.p();

    for (std::size_t lead = 0; lead < t; ++lead) {
      const std::size_t nfree = t - lead - 1;
      std::vector<std::int64_t> digits(nfree, 0);
      while (true) {
        Vec<F> x(n, fld.zero());
        x[tcoords[lead]] = fld.one();
        Matrix<F> mx = constr[tcoords[lead]];
        for (std::size_t i = 0; i < nfree; ++i) {
          if (digits[i] == 0) continue;
          const auto c = fld.from_int(static_cast<long>(digits[i]));
          x[tcoords[lead + 1 + i]] = c;
          const auto& bi = constr[tcoords[lead + 1 + i]];
          for (std::size_t r = 0; r < mx.rows(); ++r)
            for (std::size_t s = 0; s < n; ++s)
              mx.at(r, s) = fld.add(mx.at(r, s), fld.mul(c, bi.at(r, s)));
        }
        ++stats.points;
        auto P = kernel_raw(mx);
        for (std::size_t r = 0; r < P.rows(); ++r) {
          if (acc.insert(emit(x, P.row(r)))) stats.last_growth = stats.points;
          if (at_cap()) {
            stats.early_exit = true;
            return stats;
          }
        }
        std::size_t pos = 0;
        while (pos < nfree && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == nfree) break;
      }
    }
    return stats;
  }
}

/// Deterministic sample stream for the sampled sweeps: the structured family
/// {b_i} then {b_i + b_j, b_i - b_j} then {b_i + b_j + b_k}, followed by
/// seeded random vectors with integer entries in [-9, 9].
template <class F>
class SampleStream {
public:
  SampleStream(const F& fld, std::size_t n, std::uint64_t seed)
      : fld_(fld), n_(n), rng_(seed) {
    for (std::size_t i = 0; i < n; ++i) structured_.push_back({{i, 1}});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        structured_.push_back({{i, 1}, {j, 1}});
        structured_.push_back({{i, 1}, {j, -1}});
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) structured_.push_back({{i, 1}, {j, 1}, {k, 1}});
  }

  Vec<F> next() {
    Vec<F> x(n_, fld_.zero());
    if (pos_ < structured_.size()) {
      for (auto [idx, c] : structured_[pos_]) x[idx] = fld_.from_int(c);
      ++pos_;
      return x;
    }
    for (std::size_t i = 0; i < n_; ++i)
      x[i] = fld_.from_int(static_cast<long>(rng_() % 19) - 9);
    return x;
  }

private:
  F fld_;
  std::size_t n_;
  std::vector<std::vector<std::pair<std::size_t, int>>> structured_;
  std::size_t pos_ = 0;
  std::mt19937_64 rng_;
};

/// Sampled sweep: accumulates emit(x, basis preimage(ad x, W)) over the
/// sample stream. The result is a certified subset of the true span; it is
/// exact when the accumulator reaches `cap`.
template <class F, class EmitFn>
SweepStats sampled_pair_sweep(const LieAlgebra<F>& E, const Subspace<F>& W,
                              SpanAccumulator<F>& acc, std::optional<std::size_t> cap,
                              const Sampled& params, EmitFn&& emit) {
  const F& fld = E.field();
  const std::size_t n = E.dim();
  if (W.ambient() != n) throw Error(Errc::AmbientMismatch, "sweep: target ambient mismatch");
  SweepStats stats;
  auto at_cap = [&] { return cap && acc.dim() >= *cap; };
  if (at_cap()) {
    stats.early_exit = true;
    return stats;
  }

  Matrix<F> annW = annihilator(W);
  SampleStream<F> stream(fld, n, params.seed);
  std::size_t quiet = 0;
  while (stats.points < params.budget) {
    auto x = stream.next();
    ++stats.points;
    bool zero = true;
    for (const auto& e : x)
      if (!fld.is_zero(e)) {
        zero = false;
        break;
      }
    bool grew = false;
    if (!zero) {
      auto P = kernel_raw(mat_mul(annW, E.ad(x)));
      for (std::size_t r = 0; r < P.rows(); ++r) {
        if (acc.insert(emit(x, P.row(r)))) grew = true;
        if (at_cap()) break;
      }
    }
    if (grew) {
      stats.last_growth = stats.points;
      quiet = 0;
    } else {
      ++quiet;
    }
    if (at_cap()) {
      stats.early_exit = true;
      return stats;
    }
    if (quiet >= params.window) return stats;
  }
  stats.budget_exhausted = true;
  return stats;
}

template <class F>
struct BracketWitness {
  Vec<F> x, y;    // pair with [x, y] in the target, nonzero
  Vec<F> value;   // [x, y]
};

/// Searches for a bracket value lying in M \ {0}. Exhaustive mode decides:
/// nullopt means no such value exists over F_p. The search enumerates
/// projective representatives of E modulo the center (translation by central
/// elements does not change ad, hence not the image).
template <class F>
std::optional<BracketWitness<F>> bracket_in_subspace_witness_exhaustive(const LieAlgebra<F>& E,
                                                                        const Subspace<F>& M) {
  if constexpr (!F::is_finite) {
    throw Error(Errc::ModeUnsupported, "exhaustive mode requires a prime field");
  } else {
    const F& fld = E.field();
    const std::size_t n = E.dim();
    Matrix<F> annM = annihilator(M);
    auto Z = center(E);
    auto tcoords = complement_coords(Z);
    const std::size_t t = tcoords.size();
    const std::int64_t p = fld.p();
    for (std::size_t lead = 0; lead < t; ++lead) {
      const std::size_t nfree = t - lead - 1;
      std::vector<std::int64_t> digits(nfree, 0);
      while (true) {
        Vec<F> x(n, fld.zero());
        x[tcoords[lead]] = fld.one();
        for (std::size_t i = 0; i < nfree; ++i)
          if (digits[i] != 0) x[tcoords[lead + 1 + i]] = fld.from_int(static_cast<long>(digits[i]));
        auto adx = E.ad(x);
        auto P = kernel_raw(mat_mul(annM, adx));
        for (std::size_t r = 0; r < P.rows(); ++r) {
          auto y = P.row(r);
          auto v = mat_vec(adx, y);
          for (const auto& e : v)
            if (!fld.is_zero(e)) return BracketWitness<F>{std::move(x), std::move(y), std::move(v)};
        }
        std::size_t pos = 0;
        while (pos < nfree && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == nfree) break;
      }
    }
    return std::nullopt;
  }
}

/// Sampled witness search; nullopt is inconclusive.
template <class F>
std::optional<BracketWitness<F>> bracket_in_subspace_witness_sampled(const LieAlgebra<F>& E,
                                                                     const Subspace<F>& M,
                                                                     const Sampled& params) {
  const F& fld = E.field();
  Matrix<F> annM = annihilator(M);
  SampleStream<F> stream(fld, E.dim(), params.seed);
  for (std::size_t s = 0; s < params.budget; ++s) {
    auto x = stream.next();
    auto adx = E.ad(x);
    auto P = kernel_raw(mat_mul(annM, adx));
    for (std::size_t r = 0; r < P.rows(); ++r) {
      auto y = P.row(r);
      auto v = mat_vec(adx, y);
      for (const auto& e : v)
        if (!fld.is_zero(e)) return BracketWitness<F>{std::move(x), std::move(y), std::move(v)};
    }
  }
  return std::nullopt;
}

}  // namespace liemult
