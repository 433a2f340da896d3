#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liemult/lie_algebra.hpp"

namespace liemult {

/// One Hall element: a generator (weight 1) or a bracket [left, right] of
/// earlier elements, referenced by index into the element list.
struct HallElem {
  std::size_t weight = 1;
  int left = -1;   // -1 for generators
  int right = -1;  // generator number for leaves, element index otherwise
};

/// The classical Hall family on d generators, truncated at bracket weight c.
/// Elements are ordered by weight, then by creation order; a bracket [u, v]
/// with u < v is in the family iff v is a generator or v = [a, b] with
/// a <= u. The per-weight counts realize the Witt dimensions, and the family
/// is fixed once and for all so that every downstream computation is
/// reproducible.
class HallBasis {
public:
  HallBasis(std::size_t d, std::size_t c) : d_(d), c_(c) {
    if (d < 1 || c < 1) throw Error(Errc::BadInput, "hall_basis: need d >= 1 and c >= 1");
    for (std::size_t g = 0; g < d; ++g) elems_.push_back({1, -1, static_cast<int>(g)});
    for (std::size_t w = 2; w <= c; ++w) {
      const std::size_t upto = elems_.size();
      for (std::size_t v = 0; v < upto; ++v)
        for (std::size_t u = 0; u < v; ++u) {
          if (elems_[u].weight + elems_[v].weight != w) continue;
          if (elems_[v].left >= 0 && static_cast<std::size_t>(elems_[v].left) > u) continue;
          elems_.push_back({w, static_cast<int>(u), static_cast<int>(v)});
        }
    }
  }

  std::size_t generators() const { return d_; }
  std::size_t class_bound() const { return c_; }
  std::size_t size() const { return elems_.size(); }
  const HallElem& operator[](std::size_t i) const { return elems_[i]; }
  std::size_t weight_of(std::size_t i) const { return elems_[i].weight; }

  std::string to_string(std::size_t i) const {
    const auto& e = elems_[i];
    if (e.left < 0) return "x" + std::to_string(e.right + 1);
    return "[" + to_string(e.left) + "," + to_string(e.right) + "]";
  }

private:
  std::size_t d_, c_;
  std::vector<HallElem> elems_;
};

inline HallBasis hall_basis(std::size_t d, std::size_t c) { return HallBasis(d, c); }

namespace detail {

/// Homogeneous element of the free associative algebra on d generators:
/// dense coefficients over the d^w words of one weight, used to expand Hall
/// elements as iterated commutators (the standard embedding of the free Lie
/// algebra). Coefficients stay integral throughout.
struct WordPoly {
  std::size_t weight = 0;
  std::vector<mpz_class> coeff;  // index = word in base-d digits, most significant first
};

inline WordPoly word_commutator(const WordPoly& a, const WordPoly& b, std::size_t d) {
  WordPoly out;
  out.weight = a.weight + b.weight;
  std::size_t size = 1;
  for (std::size_t i = 0; i < out.weight; ++i) size *= d;
  out.coeff.assign(size, 0);
  std::size_t bsize = b.coeff.size();
  for (std::size_t i = 0; i < a.coeff.size(); ++i) {
    if (a.coeff[i] == 0) continue;
    for (std::size_t j = 0; j < bsize; ++j) {
      if (b.coeff[j] == 0) continue;
      mpz_class prod = a.coeff[i] * b.coeff[j];
      out.coeff[i * bsize + j] += prod;  // word ij
      out.coeff[j * a.coeff.size() + i] -= prod;  // word ji
    }
  }
  return out;
}

}  // namespace detail

/// The free nilpotent Lie algebra of class c on d generators, coordinatized
/// by the Hall basis. Structure constants are computed by expanding Hall
/// elements in the free associative algebra and solving the (integral)
/// change of basis per weight; brackets of total weight above c are zero.
template <class F>
LieAlgebra<F> free_nilpotent(std::size_t d, std::size_t c, const F& fld) {
  HallBasis hb(d, c);
  const std::size_t n = hb.size();

  // expansions of all Hall elements
  std::vector<detail::WordPoly> poly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (hb[i].left < 0) {
      poly[i].weight = 1;
      poly[i].coeff.assign(d, 0);
      poly[i].coeff[hb[i].right] = 1;
    } else {
      poly[i] = detail::word_commutator(poly[hb[i].left], poly[hb[i].right], d);
    }
  }

  // per-weight solver: express a weight-w polynomial in the Hall expansions
  Rationals Q;
  std::vector<std::vector<std::size_t>> by_weight(c + 1);
  for (std::size_t i = 0; i < n; ++i) by_weight[hb.weight_of(i)].push_back(i);
  std::vector<std::optional<ColumnSolver<Rationals>>> solver(c + 1);
  for (std::size_t w = 2; w <= c; ++w) {
    const auto& idx = by_weight[w];
    if (idx.empty()) continue;
    std::size_t words = poly[idx[0]].coeff.size();
    Matrix<Rationals> cols(Q, words, idx.size());
    for (std::size_t b = 0; b < idx.size(); ++b)
      for (std::size_t r = 0; r < words; ++r)
        cols.at(r, b) = mpq_class(poly[idx[b]].coeff[r]);
    solver[w].emplace(cols);
  }

  LieAlgebra<F> L(fld, "free(" + std::to_string(d) + "," + std::to_string(c) + ")", n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t w = hb.weight_of(i) + hb.weight_of(j);
      if (w > c) continue;
      auto cm = detail::word_commutator(poly[i], poly[j], d);
      Vec<Rationals> rhs(cm.coeff.size(), Q.zero());
      for (std::size_t r = 0; r < cm.coeff.size(); ++r) rhs[r] = mpq_class(cm.coeff[r]);
      auto coords = solver[w]->solve(rhs);
      if (!coords)
        throw Error(Errc::Internal, "free_nilpotent: commutator escaped the Hall span");
      Vec<F> out(n, fld.zero());
      const auto& idx = by_weight[w];
      for (std::size_t b = 0; b < idx.size(); ++b) {
        const mpq_class& q = (*coords)[b];
        if (q.get_den() != 1)
          throw Error(Errc::Internal, "free_nilpotent: non-integral structure constant");
        if (!mpz_fits_slong_p(q.get_num().get_mpz_t()))
          throw Error(Errc::Internal, "free_nilpotent: structure constant overflow");
        out[idx[b]] = fld.from_int(q.get_num().get_si());
      }
      L.set_bracket(i, j, std::move(out));
    }
  return L;
}

}  // namespace liemult
