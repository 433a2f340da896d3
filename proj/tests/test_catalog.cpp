#include <doctest.h>

#include "liemult/catalog.hpp"

using namespace liemult;

namespace {
Rationals Q;
}

TEST_CASE("catalog keys parse and print round-trip") {
  for (const char* s : {"catalog:A:4", "catalog:H:3", "catalog:L:5:6", "catalog:L:6:19?eps=1",
                        "catalog:sl:3", "catalog:so:7", "catalog:sp:3"}) {
    auto k = parse_catalog_key(s);
    CHECK(to_string(k) == s);
    CHECK(parse_catalog_key(to_string(k)) == k);
  }
  CHECK_THROWS_AS((void)parse_catalog_key("catalog:X:1"), Error);
  CHECK_THROWS_AS((void)parse_catalog_key("catalog:L:6"), Error);
  CHECK_THROWS_AS((void)catalog_get(parse_catalog_key("catalog:L:6:19"), Q), Error);  // eps missing
  CHECK_THROWS_AS((void)catalog_get(parse_catalog_key("catalog:L:5:6?eps=1"), Q), Error);
  CHECK_THROWS_AS((void)catalog_get(parse_catalog_key("catalog:L:5:10"), Q), Error);
  CHECK_THROWS_AS((void)catalog_get(parse_catalog_key("catalog:so:6"), Q), Error);
}

TEST_CASE("every catalog algebra validates over Q and over F3, F5, F7") {
  for (const auto& key : catalog_all()) {
    CAPTURE(to_string(key));
    CHECK(validate(catalog_get(key, Q)).ok);
    for (long p : {3, 5, 7}) {
      PrimeField Fp(p);
      CHECK(validate(catalog_get(key, Fp)).ok);
    }
  }
}

TEST_CASE("expected dimensions of the built-in families") {
  CHECK(catalog_get(parse_catalog_key("catalog:H:3"), Q).dim() == 7);
  for (const auto& key : catalog_table("dim6")) CHECK(catalog_get(key, Q).dim() == 6);

  // dim sl(N) = N^2 - 1, dim so(M) = M(M-1)/2, dim sp(n) = n(2n+1)
  CHECK(catalog_get(parse_catalog_key("catalog:sl:2"), Q).dim() == 3);
  CHECK(catalog_get(parse_catalog_key("catalog:sl:4"), Q).dim() == 15);
  CHECK(catalog_get(parse_catalog_key("catalog:so:5"), Q).dim() == 10);
  CHECK(catalog_get(parse_catalog_key("catalog:so:8"), Q).dim() == 28);
  CHECK(catalog_get(parse_catalog_key("catalog:sp:3"), Q).dim() == 21);
}

TEST_CASE("derived dimensions recomputed from the dim-5/6 bracket tables") {
  auto ddim = [&](const char* key) { return derived(catalog_get(parse_catalog_key(key), Q)).dim(); };
  CHECK(ddim("catalog:L:5:6") == 3);
  CHECK(ddim("catalog:L:5:4") == 1);
  CHECK(ddim("catalog:L:6:18") == 4);
  CHECK(ddim("catalog:L:6:26") == 3);
  CHECK(ddim("catalog:L:6:19?eps=0") == 3);
  // the classical families are perfect: derived = everything
  for (const auto& key : catalog_table("classical")) {
    auto L = catalog_get(key, Q);
    CHECK(derived(L).dim() == L.dim());
  }
}

TEST_CASE("L(n,k) = L(n-1,k) + A(1) reproduces via direct_sum") {
  auto same_table = [](const LieAlgebra<Rationals>& a, const LieAlgebra<Rationals>& b) {
    REQUIRE(a.dim() == b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = i + 1; j < a.dim(); ++j)
        if (a.bracket_basis(i, j) != b.bracket_basis(i, j)) return false;
    return true;
  };
  for (int k = 1; k <= 3; ++k) {
    auto big = catalog_get(CatalogKey{CatalogKey::Family::L, 5, k, std::nullopt}, Q);
    auto sum = direct_sum(catalog_get(CatalogKey{CatalogKey::Family::L, 4, k, std::nullopt}, Q),
                          catalog_get(parse_catalog_key("catalog:A:1"), Q));
    CHECK(same_table(big, sum));
  }
  for (int k = 1; k <= 9; ++k) {
    auto big = catalog_get(CatalogKey{CatalogKey::Family::L, 6, k, std::nullopt}, Q);
    auto sum = direct_sum(catalog_get(CatalogKey{CatalogKey::Family::L, 5, k, std::nullopt}, Q),
                          catalog_get(parse_catalog_key("catalog:A:1"), Q));
    CHECK(same_table(big, sum));
  }
}

TEST_CASE("L(3,2) is the Heisenberg algebra H(1)") {
  auto a = catalog_get(parse_catalog_key("catalog:L:3:2"), Q);
  auto b = catalog_get(parse_catalog_key("catalog:H:1"), Q);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      CHECK(a.bracket_basis(i, j) == b.bracket_basis(i, j));
}

TEST_CASE("eps parameter lands in the stated bracket") {
  PrimeField F5(5);
  auto L = catalog_get(parse_catalog_key("catalog:L:6:19?eps=1"), F5);
  auto v = L.bracket(L.basis_vector(2), L.basis_vector(4));  // [x3, x5] = eps x6
  CHECK(v[5] == F5.one());
  auto L0 = catalog_get(parse_catalog_key("catalog:L:6:19?eps=0"), F5);
  auto v0 = L0.bracket(L0.basis_vector(2), L0.basis_vector(4));
  CHECK(v0[5] == F5.zero());
}

TEST_CASE("expectation table covers every dim <= 6 entry with a source tag") {
  auto exp = expected_results();
  std::size_t dim6 = 0, nonzero6 = 0;
  for (const auto& e : exp) {
    CHECK(!e.source.empty());
    if (e.key.family == CatalogKey::Family::L && e.key.n1 == 6) {
      ++dim6;
      if (e.kind != ExpectKind::Zero) ++nonzero6;
    }
  }
  CHECK(dim6 == 30);     // 26 classes, four of them with eps in {0,1}
  CHECK(nonzero6 == 11); // the eleven nonzero entries of the dim-6 table
  for (const auto& e : exp)
    if (e.key.family == CatalogKey::Family::L && e.key.n1 == 5)
      CHECK((e.key.n2 == 6) == (e.kind == ExpectKind::ExactDim));
}
