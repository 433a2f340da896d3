#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liemult/lie_algebra.hpp"

namespace liemult {

/// Keys for the built-in algebra families:
///   A(n)            abelian of dimension n
///   H(m)            Heisenberg of dimension 2m+1 (basis v_1..v_2m, v)
///   L(dim, k)       nilpotent classification tables for dim <= 6
///                   (de Graaf numbering; eps-families take an exact
///                   parameter)
///   sl(N), so(M), sp(n)   classical simple algebras over Q in their
///                   matrix-unit bases
struct CatalogKey {
  enum class Family { A, H, L, sl, so, sp };
  Family family = Family::A;
  int n1 = 0;                      // A(n), H(m), L(n1, .), sl(n1), so(n1), sp(n1)
  int n2 = 0;                      // L(., n2)
  std::optional<std::string> eps;  // exact parameter for the dim-6 eps families

  bool operator==(const CatalogKey& o) const {
    return family == o.family && n1 == o.n1 && n2 == o.n2 && eps == o.eps;
  }
};

inline bool l_family_needs_eps(int dim, int idx) {
  return dim == 6 && (idx == 19 || idx == 21 || idx == 22 || idx == 24);
}

inline std::string family_name(CatalogKey::Family f) {
  switch (f) {
    case CatalogKey::Family::A: return "A";
    case CatalogKey::Family::H: return "H";
    case CatalogKey::Family::L: return "L";
    case CatalogKey::Family::sl: return "sl";
    case CatalogKey::Family::so: return "so";
    case CatalogKey::Family::sp: return "sp";
  }
  return "?";
}

inline std::string to_string(const CatalogKey& k) {
  std::string s = "catalog:" + family_name(k.family) + ":" + std::to_string(k.n1);
  if (k.family == CatalogKey::Family::L) s += ":" + std::to_string(k.n2);
  if (k.eps) s += "?eps=" + *k.eps;
  return s;
}

inline std::string display_name(const CatalogKey& k) {
  switch (k.family) {
    case CatalogKey::Family::A: return "A(" + std::to_string(k.n1) + ")";
    case CatalogKey::Family::H: return "H(" + std::to_string(k.n1) + ")";
    case CatalogKey::Family::L: {
      std::string s = "L(" + std::to_string(k.n1) + "," + std::to_string(k.n2);
      if (k.eps) s += ";eps=" + *k.eps;
      return s + ")";
    }
    case CatalogKey::Family::sl: return "sl(" + std::to_string(k.n1) + ")";
    case CatalogKey::Family::so: return "so(" + std::to_string(k.n1) + ")";
    case CatalogKey::Family::sp: return "sp(" + std::to_string(k.n1) + ")";
  }
  return "?";
}

/// Parses "catalog:H:3", "catalog:L:6:19?eps=1", "catalog:sl:3", ...
inline CatalogKey parse_catalog_key(const std::string& text) {
  std::string s = text;
  const std::string prefix = "catalog:";
  if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
  CatalogKey key;
  auto qpos = s.find('?');
  if (qpos != std::string::npos) {
    std::string q = s.substr(qpos + 1);
    s = s.substr(0, qpos);
    if (q.rfind("eps=", 0) != 0 || q.size() == 4)
      throw Error(Errc::UnknownKey, "bad catalog parameter: '" + q + "'");
    key.eps = q.substr(4);
  }
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find(':', pos);
    if (next == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  if (parts.size() < 2) throw Error(Errc::UnknownKey, "bad catalog key: '" + text + "'");
  const std::map<std::string, CatalogKey::Family> fams = {
      {"A", CatalogKey::Family::A},   {"H", CatalogKey::Family::H},
      {"L", CatalogKey::Family::L},   {"sl", CatalogKey::Family::sl},
      {"so", CatalogKey::Family::so}, {"sp", CatalogKey::Family::sp}};
  auto it = fams.find(parts[0]);
  if (it == fams.end()) throw Error(Errc::UnknownKey, "unknown catalog family: '" + parts[0] + "'");
  key.family = it->second;
  auto to_int = [&](const std::string& p) {
    try {
      std::size_t used = 0;
      int v = std::stoi(p, &used);
      if (used != p.size()) throw std::invalid_argument(p);
      return v;
    } catch (const std::exception&) {
      throw Error(Errc::UnknownKey, "bad catalog parameter: '" + p + "'");
    }
  };
  key.n1 = to_int(parts[1]);
  if (key.family == CatalogKey::Family::L) {
    if (parts.size() != 3) throw Error(Errc::UnknownKey, "L keys need catalog:L:<dim>:<index>");
    key.n2 = to_int(parts[2]);
  } else if (parts.size() != 2) {
    throw Error(Errc::UnknownKey, "bad catalog key: '" + text + "'");
  }
  return key;
}

namespace detail {

struct TableEntry {
  int i, j, k;     // 1-based: [x_i, x_j] has a term at x_k
  long coeff;      // ignored when is_eps
  bool is_eps = false;
};

/// Bracket tables of the nilpotent classification for dims 3..6 (the
/// standard numbering). Entries absent from a table are zero; L(n,k) for
/// small k is the lower-dimensional algebra padded with central directions.
inline const std::vector<TableEntry>& l_table(int dim, int idx) {
  static const std::map<std::pair<int, int>, std::vector<TableEntry>> tables = {
      {{3, 1}, {}},
      {{3, 2}, {{1, 2, 3, 1}}},
      {{4, 1}, {}},
      {{4, 2}, {{1, 2, 3, 1}}},
      {{4, 3}, {{1, 2, 3, 1}, {1, 3, 4, 1}}},
      {{5, 4}, {{1, 2, 5, 1}, {3, 4, 5, 1}}},
      {{5, 5}, {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 4, 5, 1}}},
      {{5, 6}, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}}},
      {{5, 7}, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}}},
      {{5, 8}, {{1, 2, 4, 1}, {1, 3, 5, 1}}},
      {{5, 9}, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 3, 5, 1}}},
      {{6, 10}, {{1, 2, 3, 1}, {1, 3, 6, 1}, {4, 5, 6, 1}}},
      {{6, 11}, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 6, 1}, {2, 3, 6, 1}, {2, 5, 6, 1}}},
      {{6, 12}, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 6, 1}, {2, 5, 6, 1}}},
      {{6, 13}, {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 4, 5, 1}, {1, 5, 6, 1}, {3, 4, 6, 1}}},
      {{6, 14},
       {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}, {2, 5, 6, 1}, {3, 4, 6, -1}}},
      {{6, 15},
       {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}, {1, 5, 6, 1}, {2, 4, 6, 1}}},
      {{6, 16}, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 5, 6, 1}, {3, 4, 6, -1}}},
      {{6, 17}, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {1, 5, 6, 1}, {2, 3, 6, 1}}},
      {{6, 18}, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {1, 5, 6, 1}}},
      {{6, 19}, {{1, 2, 4, 1}, {1, 3, 5, 1}, {2, 4, 6, 1}, {3, 5, 6, 0, true}}},
      {{6, 20}, {{1, 2, 4, 1}, {1, 3, 5, 1}, {1, 5, 6, 1}, {2, 4, 6, 1}}},
      {{6, 21}, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 3, 5, 1}, {1, 4, 6, 1}, {2, 5, 6, 0, true}}},
      {{6, 22}, {{1, 2, 5, 1}, {1, 3, 6, 1}, {2, 4, 6, 0, true}, {3, 4, 5, 1}}},
      {{6, 23}, {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 4, 5, 1}, {1, 4, 6, 1}}},
      {{6, 24}, {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 4, 5, 1}, {1, 4, 6, 0, true}, {2, 3, 6, 1}}},
      {{6, 25}, {{1, 2, 3, 1}, {1, 3, 5, 1}, {1, 4, 6, 1}}},
      {{6, 26}, {{1, 2, 4, 1}, {1, 3, 5, 1}, {2, 3, 6, 1}}},
  };
  // padded lower-dimensional algebras
  auto it = tables.find({dim, idx});
  if (it != tables.end()) return it->second;
  if (dim >= 4 && dim <= 6) {
    int prev_count = dim == 4 ? 2 : (dim == 5 ? 3 : 9);
    if (idx >= 1 && idx <= prev_count) return l_table(dim - 1, idx);
  }
  throw Error(Errc::UnknownKey,
              "no catalog algebra L(" + std::to_string(dim) + "," + std::to_string(idx) + ")");
}

using IntMat = std::vector<std::vector<long>>;

inline IntMat unit_matrix(int N, int i, int j) {  // E_ij, 1-based
  IntMat m(N, std::vector<long>(N, 0));
  m[i - 1][j - 1] = 1;
  return m;
}
inline IntMat mat_sub(IntMat a, const IntMat& b) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) a[r][c] -= b[r][c];
  return a;
}
inline IntMat mat_add(IntMat a, const IntMat& b) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) a[r][c] += b[r][c];
  return a;
}
inline IntMat commutator(const IntMat& a, const IntMat& b) {
  const std::size_t N = a.size();
  IntMat m(N, std::vector<long>(N, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      if (a[i][k] == 0 && b[i][k] == 0) continue;
      for (std::size_t j = 0; j < N; ++j)
        m[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    }
  return m;
}

/// Structure constants of a Lie algebra of matrices from a basis list:
/// commutators are re-expressed in the basis by an exact linear solve.
template <class F>
LieAlgebra<F> matrix_algebra(const F& fld, const std::string& name,
                             const std::vector<IntMat>& basis) {
  const std::size_t dim = basis.size();
  const std::size_t N = basis.empty() ? 0 : basis[0].size();
  Matrix<F> cols(fld, N * N, dim);  // basis matrices as columns
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c)
        cols.at(r * N + c, b) = fld.from_int(basis[b][r][c]);
  ColumnSolver<F> solver(cols);

  LieAlgebra<F> L(fld, name, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      auto cm = commutator(basis[i], basis[j]);
      Vec<F> v(N * N, fld.zero());
      for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) v[r * N + c] = fld.from_int(cm[r][c]);
      auto coords = solver.solve(v);
      if (!coords)
        throw Error(Errc::Internal, name + ": commutator left the basis span");
      L.set_bracket(i, j, std::move(*coords));
    }
  return L;
}

template <class F>
LieAlgebra<F> special_linear(const F& fld, int N) {
  std::vector<IntMat> basis;
  for (int i = 1; i < N; ++i)
    basis.push_back(mat_sub(unit_matrix(N, i, i), unit_matrix(N, i + 1, i + 1)));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      if (i != j) basis.push_back(unit_matrix(N, i, j));
  return matrix_algebra(fld, "sl(" + std::to_string(N) + ")", basis);
}

template <class F>
LieAlgebra<F> orthogonal(const F& fld, int M) {
  std::vector<IntMat> basis;  // D_ij = E_ij - E_ji, i < j
  for (int i = 1; i <= M; ++i)
    for (int j = i + 1; j <= M; ++j)
      basis.push_back(mat_sub(unit_matrix(M, i, j), unit_matrix(M, j, i)));
  return matrix_algebra(fld, "so(" + std::to_string(M) + ")", basis);
}

template <class F>
LieAlgebra<F> symplectic(const F& fld, int n) {
  const int N = 2 * n;
  std::vector<IntMat> basis;
  for (int i = 1; i <= n; ++i)  // H_i
    basis.push_back(mat_sub(unit_matrix(N, i, i), unit_matrix(N, n + i, n + i)));
  for (int i = 1; i <= n; ++i)  // X_ij
    for (int j = 1; j <= n; ++j)
      if (i != j) basis.push_back(mat_sub(unit_matrix(N, i, j), unit_matrix(N, n + j, n + i)));
  for (int i = 1; i <= n; ++i)  // Y_ij
    for (int j = i + 1; j <= n; ++j)
      basis.push_back(mat_add(unit_matrix(N, i, n + j), unit_matrix(N, j, n + i)));
  for (int i = 1; i <= n; ++i)  // Z_ij
    for (int j = i + 1; j <= n; ++j)
      basis.push_back(mat_add(unit_matrix(N, n + i, j), unit_matrix(N, n + j, i)));
  for (int i = 1; i <= n; ++i) basis.push_back(unit_matrix(N, i, n + i));  // U_i
  for (int i = 1; i <= n; ++i) basis.push_back(unit_matrix(N, n + i, i));  // V_i
  return matrix_algebra(fld, "sp(" + std::to_string(n) + ")", basis);
}

}  // namespace detail

/// Builds the algebra named by the key over the given field.
template <class F>
LieAlgebra<F> catalog_get(const CatalogKey& key, const F& fld) {
  using Fam = CatalogKey::Family;
  switch (key.family) {
    case Fam::A: {
      if (key.n1 < 0) throw Error(Errc::UnknownKey, "A(n) needs n >= 0");
      return LieAlgebra<F>(fld, display_name(key), static_cast<std::size_t>(key.n1));
    }
    case Fam::H: {
      const int m = key.n1;
      if (m < 1) throw Error(Errc::UnknownKey, "H(m) needs m >= 1");
      LieAlgebra<F> L(fld, display_name(key), 2 * m + 1);
      for (int i = 1; i <= m; ++i) {
        Vec<F> v(2 * m + 1, fld.zero());
        v[2 * m] = fld.one();
        L.set_bracket(2 * i - 2, 2 * i - 1, std::move(v));
      }
      return L;
    }
    case Fam::L: {
      const int dim = key.n1, idx = key.n2;
      if (dim < 1 || dim > 6 || idx < 1)
        throw Error(Errc::UnknownKey, "L tables cover dims 1..6");
      if (dim <= 2) {
        if (idx != 1) throw Error(Errc::UnknownKey, "only L(n,1) exists for n <= 2");
        return LieAlgebra<F>(fld, display_name(key), dim);
      }
      const bool needs_eps = l_family_needs_eps(dim, idx);
      if (needs_eps && !key.eps)
        throw Error(Errc::UnknownKey, display_name(key) + " needs an eps parameter");
      if (!needs_eps && key.eps)
        throw Error(Errc::UnknownKey, display_name(key) + " takes no eps parameter");
      const auto& table = detail::l_table(dim, idx);
      LieAlgebra<F> L(fld, display_name(key), dim);
      for (const auto& t : table) {
        auto c = t.is_eps ? fld.from_string(*key.eps) : fld.from_int(t.coeff);
        L.set_bracket_basis(t.i - 1, t.j - 1, t.k - 1, c);
      }
      return L;
    }
    case Fam::sl:
      if (key.n1 < 2) throw Error(Errc::UnknownKey, "sl(N) needs N >= 2");
      return detail::special_linear(fld, key.n1);
    case Fam::so:
      if (key.n1 < 5 || key.n1 == 6)
        throw Error(Errc::UnknownKey, "so(M) needs M = 2n+1, n >= 2, or M = 2n, n >= 4");
      return detail::orthogonal(fld, key.n1);
    case Fam::sp:
      if (key.n1 < 3) throw Error(Errc::UnknownKey, "sp(n) needs n >= 3");
      return detail::symplectic(fld, key.n1);
  }
  throw Error(Errc::UnknownKey, "unknown catalog family");
}

enum class ExpectKind { Zero, Nonzero, ExactDim };

/// One row of the expectation table: what the classification results say
/// about dim B~0 for this catalog entry, with the result it comes from.
struct ExpectedResult {
  CatalogKey key;
  ExpectKind kind = ExpectKind::Zero;
  std::size_t dim = 0;  // meaningful for ExactDim
  std::string source;
};

inline std::vector<CatalogKey> catalog_table(const std::string& table) {
  using Fam = CatalogKey::Family;
  std::vector<CatalogKey> keys;
  auto L = [&](int d, int k, std::optional<std::string> eps = std::nullopt) {
    keys.push_back(CatalogKey{Fam::L, d, k, std::move(eps)});
  };
  if (table == "dim3") {
    L(3, 1);
    L(3, 2);
  } else if (table == "dim4") {
    for (int k = 1; k <= 3; ++k) L(4, k);
  } else if (table == "dim5") {
    for (int k = 1; k <= 9; ++k) L(5, k);
  } else if (table == "dim6") {
    for (int k = 1; k <= 26; ++k) {
      if (l_family_needs_eps(6, k)) {
        L(6, k, "0");
        L(6, k, "1");
      } else {
        L(6, k);
      }
    }
  } else if (table == "heisenberg") {
    for (int m = 1; m <= 4; ++m) keys.push_back(CatalogKey{Fam::H, m, 0, std::nullopt});
  } else if (table == "classical") {
    for (int n : {2, 3, 4}) keys.push_back(CatalogKey{Fam::sl, n, 0, std::nullopt});
    for (int m : {5, 7, 8}) keys.push_back(CatalogKey{Fam::so, m, 0, std::nullopt});
    keys.push_back(CatalogKey{Fam::sp, 3, 0, std::nullopt});
  } else {
    throw Error(Errc::UnknownKey, "unknown table: '" + table + "'");
  }
  return keys;
}

inline std::vector<CatalogKey> catalog_all() {
  std::vector<CatalogKey> keys;
  for (int n = 1; n <= 6; ++n) keys.push_back(CatalogKey{CatalogKey::Family::A, n, 0, std::nullopt});
  for (const char* t : {"dim3", "dim4", "dim5", "dim6", "heisenberg", "classical"})
    for (auto& k : catalog_table(t)) keys.push_back(std::move(k));
  return keys;
}

/// The full expectation table for dim B~0, assembled from the classification
/// results: dims <= 4 all vanish; in dim 5 exactly L(5,6) is nonzero (of
/// dimension 1); in dim 6 the nonzero entries are the eleven listed below;
/// Heisenberg algebras and the classical simple families all vanish.
inline std::vector<ExpectedResult> expected_results() {
  std::vector<ExpectedResult> out;
  auto add = [&](CatalogKey key, ExpectKind kind, std::size_t dim, std::string src) {
    out.push_back({std::move(key), kind, dim, std::move(src)});
  };
  for (int n = 1; n <= 6; ++n)
    add({CatalogKey::Family::A, n, 0, std::nullopt}, ExpectKind::Zero, 0,
        "abelian: every wedge is a commuting wedge");
  for (int m = 1; m <= 4; ++m)
    add({CatalogKey::Family::H, m, 0, std::nullopt}, ExpectKind::Zero, 0,
        "heisenberg family (derived subalgebra of dimension 1)");
  for (auto& k : catalog_table("dim3"))
    add(k, ExpectKind::Zero, 0, "nilpotent dim-3 table");
  for (auto& k : catalog_table("dim4"))
    add(k, ExpectKind::Zero, 0, "nilpotent dim-4 table");
  for (auto& k : catalog_table("dim5")) {
    if (k.n2 == 6)
      add(k, ExpectKind::ExactDim, 1, "nilpotent dim-5 table: unique nonzero entry");
    else
      add(k, ExpectKind::Zero, 0,
          k.n2 == 4 ? "nilpotent dim-5 table (also the s(L)=1 classification)"
                    : "nilpotent dim-5 table");
  }
  auto dim6_nonzero = [](const CatalogKey& k) {
    if (k.n2 == 6 || k.n2 == 13 || k.n2 == 14 || k.n2 == 15 || k.n2 == 20 || k.n2 == 23)
      return true;
    if (k.n2 == 19 || k.n2 == 21) return k.eps == std::optional<std::string>("1");
    if (k.n2 == 22) return k.eps == std::optional<std::string>("0");
    if (k.n2 == 24) return true;  // both eps = 0 and eps = 1
    return false;
  };
  for (auto& k : catalog_table("dim6")) {
    if (dim6_nonzero(k))
      add(k, ExpectKind::Nonzero, 0, "nilpotent dim-6 table: nonzero entry");
    else
      add(k, ExpectKind::Zero, 0, "nilpotent dim-6 table");
  }
  for (auto& k : catalog_table("classical")) {
    std::string fam = family_name(k.family);
    add(k, ExpectKind::Zero, 0,
        "classical simple " + fam + ": vanishing multiplier over Q transfers upward");
  }
  return out;
}

}  // namespace liemult
