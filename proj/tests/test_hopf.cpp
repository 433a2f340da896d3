#include <doctest.h>

#include "liemult/catalog.hpp"
#include "liemult/hopf.hpp"

using namespace liemult;

namespace {

Rationals Q;

template <class F>
LieAlgebra<F> get(const std::string& key, const F& fld) {
  return catalog_get(parse_catalog_key(key), fld);
}

// Witt's dimension formula (1/w) sum_{e | w} mu(e) d^{w/e}, via an
// independent Moebius function.
long mobius(long n) {
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

long witt(long d, long w) {
  long sum = 0;
  for (long e = 1; e <= w; ++e) {
    if (w % e) continue;
    long pw = 1;
    for (long i = 0; i < w / e; ++i) pw *= d;
    sum += mobius(e) * pw;
  }
  return sum / w;
}

}  // namespace

TEST_CASE("hall basis sizes for small parameters") {
  CHECK(hall_basis(2, 2).size() == 3);  // x1, x2, [x1,x2]
  CHECK(hall_basis(2, 3).size() == 5);
  CHECK(hall_basis(3, 2).size() == 6);
  auto hb = hall_basis(2, 2);
  CHECK(hb.to_string(0) == "x1");
  CHECK(hb.to_string(2) == "[x1,x2]");
}

TEST_CASE("per-weight counts match the Witt formula for d <= 3, c <= 6") {
  for (long d = 1; d <= 3; ++d) {
    auto hb = hall_basis(d, 6);
    std::vector<long> counts(7, 0);
    for (std::size_t i = 0; i < hb.size(); ++i) ++counts[hb.weight_of(i)];
    for (long w = 1; w <= 6; ++w) {
      CAPTURE(d);
      CAPTURE(w);
      CHECK(counts[w] == witt(d, w));
    }
  }
}

TEST_CASE("free nilpotent algebras satisfy Jacobi") {
  for (std::size_t c = 2; c <= 6; ++c) CHECK(validate(free_nilpotent(2, c, Q)).ok);
  for (std::size_t c = 2; c <= 3; ++c) CHECK(validate(free_nilpotent(3, c, Q)).ok);
  PrimeField F5(5);
  CHECK(validate(free_nilpotent(2, 5, F5)).ok);
  CHECK(validate(free_nilpotent(3, 3, F5)).ok);
}

TEST_CASE("free nilpotent brackets follow the Hall tree recursion") {
  auto f23 = free_nilpotent(2, 3, Q);
  // basis: x1, x2, [x1,x2], [x1,[x1,x2]], [x2,[x1,x2]]
  auto b = f23.bracket(f23.basis_vector(0), f23.basis_vector(1));
  CHECK(b == f23.basis_vector(2));
  CHECK(f23.bracket(f23.basis_vector(0), f23.basis_vector(2)) == f23.basis_vector(3));
  CHECK(f23.bracket(f23.basis_vector(1), f23.basis_vector(2)) == f23.basis_vector(4));
  // weight overflow truncates to zero
  CHECK(f23.bracket(f23.basis_vector(2), f23.basis_vector(3)) ==
        Vec<Rationals>(5, Q.zero()));
}

TEST_CASE("presentations of small algebras") {
  auto pa = presentation(get("catalog:A:2", Q));
  CHECK(pa.free.dim() == 3);
  CHECK(pa.R.dim() == 1);
  CHECK(pa.RF.dim() == 0);

  auto ph = presentation(get("catalog:H:1", Q));
  CHECK(ph.gens == 2);
  CHECK(ph.free.dim() == 5);         // class 3 on 2 generators
  CHECK(ph.R.dim() == 2);            // both weight-3 Hall elements
  CHECK(ph.RF.dim() == 0);
  CHECK(ph.cover.dim() == 5);

  auto pl = presentation(get("catalog:L:5:6", Q));
  CHECK(pl.gens == 2);
  CHECK(pl.cls == 4);
  CHECK(pl.free.dim() == 14);        // class 5 on 2 generators
  CHECK(pl.cover.dim() == 5 + 3);    // dim L + dim M

  CHECK_THROWS_AS((void)presentation(get("catalog:sl:2", Q)), Error);
}

TEST_CASE("R/[R,F] is central in the cover") {
  for (const char* key : {"catalog:H:1", "catalog:L:5:6", "catalog:L:6:26", "catalog:A:3"}) {
    CAPTURE(key);
    auto P = presentation(get(key, Q));
    for (std::size_t r = 0; r < P.R_bar.dim(); ++r)
      for (std::size_t j = 0; j < P.cover.dim(); ++j)
        CHECK(P.cover.bracket(P.R_bar.basis().row(r), P.cover.basis_vector(j)) ==
              Vec<Rationals>(P.cover.dim(), Q.zero()));
  }
}

TEST_CASE("Hopf formula dimensions") {
  CHECK(hopf_schur(presentation(get("catalog:A:2", Q))) == 1);
  CHECK(hopf_schur(presentation(get("catalog:H:1", Q))) == 2);
}

TEST_CASE("Hopf multiplier agrees with the exterior path on sampled keys") {
  for (const char* key : {"catalog:A:4", "catalog:H:2", "catalog:L:4:3", "catalog:L:5:6",
                          "catalog:L:5:9", "catalog:L:6:19?eps=1", "catalog:L:6:26"}) {
    CAPTURE(key);
    auto L = get(key, Q);
    CHECK(hopf_schur(presentation(L)) == exterior_square(L).schur_dim());
  }
}

TEST_CASE("hopf_bogomolov examples") {
  PrimeField F3(3), F5(5);

  auto rh = hopf_bogomolov(presentation(get("catalog:H:1", F3)), Mode{Exhaustive{}});
  CHECK(rh.status == CertStatus::ExactExhaustive);
  CHECK(rh.dim_B0_lower == 0);
  CHECK(rh.dim_M == 2);

  auto rl = hopf_bogomolov(presentation(get("catalog:L:5:6", F5)), Mode{Exhaustive{}});
  CHECK(rl.dim_B0_lower == 1);
  CHECK(rl.dim_B0_upper == 1);

  auto ra = hopf_bogomolov(presentation(get("catalog:A:4", F5)), Mode{Exhaustive{}});
  CHECK(ra.dim_B0_lower == 0);
  CHECK(ra.dim_M == 6);

  // sampled certification over Q works through the cover too
  auto rq = hopf_bogomolov(presentation(get("catalog:H:2", Q)), Mode{Sampled{17}});
  CHECK(rq.status == CertStatus::ExactCertifiedZero);
  CHECK(rq.dim_B0_upper == 0);
}

TEST_CASE("cross-path agreement of the full reports (spot checks)") {
  PrimeField F5(5);
  for (const char* key : {"catalog:L:5:6", "catalog:L:5:5", "catalog:L:4:3", "catalog:H:1"}) {
    CAPTURE(key);
    auto L = get(key, F5);
    auto hop = hopf_bogomolov(presentation(L), Mode{Exhaustive{}});
    auto ext = bogomolov_report(L, Mode{Exhaustive{}});
    CHECK(hop.dim_M == ext.dim_M);
    CHECK(hop.dim_M0_lower == ext.dim_M0_lower);
    CHECK(hop.dim_B0_lower == ext.dim_B0_lower);
    CHECK(hop.dim_wedge == ext.dim_wedge);
    CHECK(hop.dim_curly_lower == ext.dim_curly_lower);
  }
}

TEST_CASE("four-term sequence dimensions balance") {
  PrimeField F3(3), F5(5);

  auto h1 = get("catalog:H:1", F3);
  auto ph = presentation(h1);
  CHECK(seq43_dimension_check(ph, Subspace<PrimeField>::span_of(F3, 3, {h1.basis_vector(2)}),
                              Mode{Exhaustive{}}));

  auto l56 = get("catalog:L:5:6", F5);
  auto pl = presentation(l56);
  CHECK(seq43_dimension_check(pl, center(l56), Mode{Exhaustive{}}));

  auto a4 = get("catalog:A:4", F3);
  auto pa = presentation(a4);
  auto M = Subspace<PrimeField>::span_of(F3, 4, {a4.basis_vector(0), a4.basis_vector(2)});
  auto dims = seq43_dims(pa, M, Mode{Exhaustive{}});
  CHECK(dims.exact());
  CHECK(dims.b0_L == 0);
  CHECK(dims.b0_LM == 0);
  CHECK(dims.term1 == 0);
  CHECK(dims.term4 == 0);

  CHECK_THROWS_AS((void)seq43_dims(pa, M, Mode{Sampled{1}}), Error);
}

TEST_CASE("restriction-sequence middle node: image equals kernel on 10 pairs") {
  PrimeField F5(5);
  std::vector<std::pair<std::string, std::string>> cases = {
      {"catalog:H:1", "center"},    {"catalog:L:5:6", "center"},  {"catalog:L:5:6", "derived"},
      {"catalog:L:5:9", "center"},  {"catalog:L:6:13", "center"}, {"catalog:L:4:3", "derived"},
      {"catalog:L:6:26", "center"}, {"catalog:L:6:18", "center"}, {"catalog:H:2", "center"},
      {"catalog:A:4", "derived"}};
  for (const auto& [key, which] : cases) {
    CAPTURE(key);
    CAPTURE(which);
    auto L = get(key, F5);
    auto M = which == "center" ? center(L) : derived(L);
    REQUIRE(is_ideal(L, M));
    auto seg = prop42_segment(presentation(L), M, Mode{Exhaustive{}});
    CHECK(seg.node_equal);
    CHECK(seg.dim_im_f == seg.dim_ker_g);
  }
}

TEST_CASE("weight-3 span of the class-3 free algebra is not a CP kernel") {
  PrimeField F3(3);
  auto C = free_nilpotent(2, 3, F3);
  // weight-3 Hall elements sit at indices 3 and 4 and are central
  auto M = Subspace<PrimeField>::span_of(F3, 5, {C.basis_vector(3), C.basis_vector(4)});
  auto res = is_cp_central_extension(CentralExtensionSpec<PrimeField>{C, M}, Mode{Exhaustive{}});
  REQUIRE(res.verdict == CpVerdict::NotCP);
  CHECK(M.contains(res.witness->value));
}
