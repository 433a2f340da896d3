#include <doctest.h>

#include <random>

#include "liemult/subspace.hpp"

using namespace liemult;

namespace {

template <class F>
Matrix<F> from_ints(const F& fld, std::size_t cols, const std::vector<std::vector<long>>& rows) {
  Matrix<F> m(fld, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = fld.from_int(rows[i][j]);
  return m;
}

template <class F>
Matrix<F> random_int_matrix(const F& fld, std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix<F> m(fld, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = fld.from_int(static_cast<long>(rng() % 11) - 5);
  return m;
}

}  // namespace

TEST_CASE("rref: identity is a fixed point") {
  Rationals Q;
  auto m = Matrix<Rationals>::identity(Q, 3);
  auto rr = rref(m);
  CHECK(rr.mat == m);
  CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref: proportional rows collapse to rank 1") {
  Rationals Q;
  auto rr = rref(from_ints(Q, 2, {{1, 2}, {2, 4}}));
  CHECK(rr.mat.rows() == 1);
  CHECK(rr.pivots == std::vector<std::size_t>{0});
  CHECK(rr.mat.at(0, 0) == mpq_class(1));
  CHECK(rr.mat.at(0, 1) == mpq_class(2));
}

TEST_CASE("rref: unit scaling over F5") {
  PrimeField F5(5);
  auto rr = rref(from_ints(F5, 1, {{2}}));
  CHECK(rr.mat.rows() == 1);
  CHECK(rr.mat.at(0, 0) == 1);
  CHECK(rr.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel: zero, identity, single equation") {
  Rationals Q;
  CHECK(kernel(Matrix<Rationals>(Q, 2, 3)).dim() == 3);
  CHECK(kernel(Matrix<Rationals>::identity(Q, 4)).dim() == 0);
  auto k = kernel(from_ints(Q, 2, {{1, 1}}));
  CHECK(k.dim() == 1);
  CHECK(k.basis().at(0, 0) == mpq_class(1));
  CHECK(k.basis().at(0, 1) == mpq_class(-1));
}

TEST_CASE("join/intersect/preimage basics") {
  Rationals Q;
  auto e1 = Subspace<Rationals>::span_of(Q, 3, {{mpq_class(1), mpq_class(0), mpq_class(0)}});
  auto e2 = Subspace<Rationals>::span_of(Q, 3, {{mpq_class(0), mpq_class(1), mpq_class(0)}});
  auto j = join(e1, e2);
  CHECK(j.dim() == 2);
  CHECK(j.contains(Vec<Rationals>{mpq_class(2), mpq_class(-3), mpq_class(0)}));
  CHECK(intersect(j, j) == j);
  CHECK(intersect(e1, e2).dim() == 0);

  // preimage of the zero subspace under the zero map is the whole domain
  auto zero_map = Matrix<Rationals>(Q, 2, 4);
  auto w0 = Subspace<Rationals>::zero(Q, 2);
  CHECK(preimage(zero_map, w0).dim() == 4);

  auto bad = Subspace<Rationals>::zero(Q, 5);
  CHECK_THROWS_AS((void)join(e1, bad), Error);
}

TEST_CASE("rref properties: idempotence, row space, rank-nullity") {
  std::mt19937_64 rng(12345);
  Rationals Q;
  PrimeField F7(7);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    auto mq = random_int_matrix(Q, rng, r, c);
    auto rr = rref(mq);
    auto rr2 = rref(rr.mat);
    CHECK(rr2.mat == rr.mat);
    CHECK(Subspace<Rationals>::row_space(mq) == Subspace<Rationals>::row_space(rr.mat));
    CHECK(rr.pivots.size() + kernel(mq).dim() == c);

    auto mp = random_int_matrix(F7, rng, r, c);
    auto rp = rref(mp);
    CHECK(rref(rp.mat).mat == rp.mat);
    CHECK(rp.pivots.size() + kernel(mp).dim() == c);
  }
}

TEST_CASE("join is commutative bit-exactly; dim identity with intersect") {
  std::mt19937_64 rng(777);
  Rationals Q;
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t c = 2 + rng() % 5;
    auto a = Subspace<Rationals>::row_space(random_int_matrix(Q, rng, 1 + rng() % 4, c));
    auto b = Subspace<Rationals>::row_space(random_int_matrix(Q, rng, 1 + rng() % 4, c));
    CHECK(join(a, b) == join(b, a));
    CHECK(join(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
    CHECK(join(a, b).contains(a));
    CHECK(join(a, b).contains(intersect(a, b)));
  }
}

TEST_CASE("modular consistency: rank over Q bounds rank over F_p") {
  std::mt19937_64 rng(2024);
  Rationals Q;
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    std::vector<std::vector<long>> rows(r, std::vector<long>(c));
    for (auto& row : rows)
      for (auto& v : row) v = static_cast<long>(rng() % 21) - 10;
    auto rq = rref(from_ints(Q, c, rows)).pivots.size();
    for (long p : {3, 5, 7}) {
      PrimeField Fp(p);
      CHECK(rq >= rref(from_ints(Fp, c, rows)).pivots.size());
    }
  }
}

TEST_CASE("solve finds consistent solutions and rejects inconsistent ones") {
  Rationals Q;
  auto m = from_ints(Q, 2, {{1, 2}, {2, 4}});
  auto s = solve(m, Vec<Rationals>{mpq_class(3), mpq_class(6)});
  REQUIRE(s.has_value());
  auto y = mat_vec(m, *s);
  CHECK(y[0] == mpq_class(3));
  CHECK(y[1] == mpq_class(6));
  CHECK(!solve(m, Vec<Rationals>{mpq_class(3), mpq_class(7)}).has_value());
}

TEST_CASE("span accumulator matches batch rref") {
  std::mt19937_64 rng(99);
  PrimeField F5(5);
  for (int iter = 0; iter < 20; ++iter) {
    std::size_t c = 3 + rng() % 4;
    auto m = random_int_matrix(F5, rng, 6, c);
    SpanAccumulator<PrimeField> acc(F5, c);
    for (std::size_t i = 0; i < m.rows(); ++i) acc.insert(m.row(i));
    CHECK(acc.to_subspace() == Subspace<PrimeField>::row_space(m));
  }
}

TEST_CASE("mod_reduce splits a containing space") {
  Rationals Q;
  auto rel = Subspace<Rationals>::span_of(Q, 3, {{mpq_class(1), mpq_class(1), mpq_class(0)}});
  auto space = Subspace<Rationals>::full(Q, 3);
  auto red = mod_reduce(space, rel);
  CHECK(red.dim() == 2);
  for (std::size_t r = 0; r < red.dim(); ++r)
    CHECK(rel.reduce(red.basis().row(r)) == red.basis().row(r));
}
