#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hpzero/formulas.hpp"
#include "hpzero/jacobi.hpp"

using namespace hpzero;

TEST_CASE("generator character stacks shifted jacobian rings") {
  SurfaceSpec a2 = catalog(CatalogTag::A, 3);
  BiSeries gen = generator_character(a2, 20, 3);
  // h(J) = 1 + t^2, d = 6
  CHECK(gen.coeff(0, 1) == 1);
  CHECK(gen.coeff(2, 1) == 1);
  CHECK(gen.coeff(4, 1) == 0);
  CHECK(gen.coeff(6, 2) == 1);
  CHECK(gen.coeff(8, 2) == 1);
  CHECK(gen.coeff(12, 3) == 1);
  CHECK(gen.coeff(14, 3) == 1);
  CHECK(gen.coeff(6, 1) == 0);
  CHECK(gen.coeff(0, 2) == 0);
}

TEST_CASE("the product formula equals Sym of the generator character") {
  for (CatalogTag tag : catalog_tags()) {
    SurfaceSpec spec = catalog(tag, 3);
    BiSeries gen = generator_character(spec, 24, 4);
    BiSeries sym = sym_of_bigraded(gen);
    BiSeries prod = hp0_product_formula(spec, 24, 4);
    std::string why;
    CAPTURE(spec.name);
    CHECK_MESSAGE(biseries_equal_on(sym, prod, 24, 4, &why), why);
  }
}

TEST_CASE("product formula rows for the quadric") {
  SurfaceSpec a1 = catalog(CatalogTag::A, 2);
  BiSeries prod = hp0_product_formula(a1, 16, 3);
  // h(J) = 1, d = 4: factors 1/(1-s), 1/(1-t^4 s^2), 1/(1-t^8 s^3), ...
  CHECK(prod.coeff(0, 0) == 1);
  CHECK(prod.coeff(0, 1) == 1);
  CHECK(prod.coeff(0, 2) == 1);
  CHECK(prod.coeff(4, 2) == 1);
  CHECK(prod.coeff(4, 3) == 1);
  CHECK(prod.coeff(8, 3) == 1);
  CHECK(prod.coeff(12, 3) == 0);
  CHECK(prod.coeff(2, 1) == 0);
  CHECK(prod.coeff(8, 2) == 0);
}

TEST_CASE("A2 second row of the product formula") {
  SurfaceSpec a2 = catalog(CatalogTag::A, 3);
  Series row = hp0_product_formula(a2, 10, 2).s_row(2);
  for (int w : {0, 2, 4, 6, 8}) CHECK(row.coeff(w) == 1);
  for (int w : {1, 3, 5, 7, 9, 10}) CHECK(row.coeff(w) == 0);
}

TEST_CASE("the chi series starts with the jacobian ring in s-degree zero") {
  SurfaceSpec e6 = catalog(CatalogTag::E6);
  BiSeries chi = chi_Ytilde(e6, 18, 2);
  Series row0 = chi.s_row(0);
  Series hJ = jacobi_hilbert_closed(e6.ws, 18);
  std::string why;
  CHECK_MESSAGE(series_equal_on(row0, hJ, 0, 18, &why), why);
  CHECK_THROWS_AS(chi_Ytilde(catalog(CatalogTag::A, 4), 10, 2), InvalidInput);
}

TEST_CASE("twist characters for E6") {
  SurfaceSpec e6 = catalog(CatalogTag::E6);
  Series v0 = vq_series(e6, 0, 12);
  // 1/((1-t^3)(1-t^4))
  CHECK(v0.coeff(0) == 1);
  CHECK(v0.coeff(3) == 1);
  CHECK(v0.coeff(4) == 1);
  CHECK(v0.coeff(5) == 0);
  CHECK(v0.coeff(7) == 1);
  CHECK(v0.coeff(12) == 2);
  Series v1 = vq_series(e6, 1, 12);
  CHECK(v1.coeff(9) == 1);
  CHECK(v1.coeff(8) == 0);
  CHECK(v1.coeff(12) == 1);
  for (int e = 0; e <= 8; ++e) CHECK(v1.coeff(e) == 0);
  CHECK_THROWS_AS(vq_series(e6, -1, 12), InvalidInput);
}

TEST_CASE("section characters on the weighted projective line") {
  WeightSystem uneven(3, 4, 6, 12);
  Series s = sections_character(1, 5, uneven);
  CHECK(s.coeff(5) == 1);
  CHECK(s.coeff(4) == 1);
  CHECK(s.coeff(3) == 0);
  Series none = sections_character(-1, 5, uneven);
  CHECK(none.stored_empty());
  WeightSystem even(2, 2, 3, 6);
  Series flat = sections_character(2, 0, even);
  CHECK(flat.coeff(0) == 3);
}

TEST_CASE("chi reassembles from its twist decomposition") {
  for (CatalogTag tag : {CatalogTag::D, CatalogTag::E6, CatalogTag::E7, CatalogTag::E8,
                         CatalogTag::tE6, CatalogTag::tE7, CatalogTag::tE8}) {
    SurfaceSpec spec = catalog(tag, 3);
    int max_t = 16, max_q = 4;
    int pad = spec.ws.b - spec.ws.a;
    std::vector<Series> vqs;
    for (int q = 0; q <= max_q + 2; ++q)
      vqs.push_back(vq_series(spec, q, max_t + pad));
    BiSeries rebuilt = chi_from_twists(vqs, spec.ws, max_t, max_q);
    BiSeries direct = chi_Ytilde(spec, max_t, max_q);
    std::string why;
    CAPTURE(spec.name);
    CHECK_MESSAGE(biseries_equal_on(rebuilt, direct, max_t, max_q, &why), why);
  }
}

TEST_CASE("twists that are not characters are refused") {
  WeightSystem ws(2, 3, 4, 9);
  std::vector<Series> bogus;
  for (int q = 0; q < 5; ++q) {
    Series v = Series::term(Int(1), 2 * q);
    v.truncate(20);
    bogus.push_back(v);
  }
  CHECK_THROWS_AS(chi_from_twists(bogus, ws, 10, 2), InvalidInput);
}

TEST_CASE("wreath character of a point") {
  Series h = Series::term(Int(1), 0);
  BiSeries wr = wreath_hh0_character(h, 4, 12, 3);
  CHECK(wr.coeff(0, 2) == 1);
  CHECK(wr.coeff(4, 2) == 1);
  CHECK(wr.coeff(8, 2) == 0);
  CHECK(wr.coeff(8, 3) == 1);
  Series row2 = wreath_partition_row(h, 4, 2, 12);
  CHECK(row2.coeff(0) == 1);
  CHECK(row2.coeff(4) == 1);
  CHECK(row2.coeff(8) == 0);
}

TEST_CASE("wreath rows match the partition expansion") {
  SurfaceSpec d4 = catalog(CatalogTag::D, 2);
  Series h = jacobi_hilbert_closed(d4.ws, socle_bound(d4.ws));
  BiSeries wr = wreath_hh0_character(h, d4.ws.d, 20, 4);
  for (int n = 0; n <= 4; ++n) {
    Series via_partitions = wreath_partition_row(h, d4.ws.d, n, 20);
    std::string why;
    CAPTURE(n);
    CHECK_MESSAGE(series_equal_on(wr.s_row(n), via_partitions, 0, 20, &why), why);
  }
}

TEST_CASE("wreath equals the product formula for kleinian surfaces") {
  for (CatalogTag tag : {CatalogTag::A, CatalogTag::D, CatalogTag::E6}) {
    SurfaceSpec spec = catalog(tag, 3);
    Series h = jacobi_hilbert_closed(spec.ws, socle_bound(spec.ws));
    BiSeries wr = wreath_hh0_character(h, spec.ws.d, 20, 3);
    BiSeries prod = hp0_product_formula(spec, 20, 3);
    std::string why;
    CAPTURE(spec.name);
    CHECK_MESSAGE(biseries_equal_on(wr, prod, 20, 3, &why), why);
  }
}

TEST_CASE("type A slice character") {
  BiSeries slice = typeA_slice_character(2, 16, 4);
  // one generator tower: s^(k+1) t^(4k)
  CHECK(slice.coeff(0, 1) == 1);
  CHECK(slice.coeff(4, 2) == 1);
  CHECK(slice.coeff(8, 3) == 1);
  CHECK(slice.coeff(4, 1) == 0);
  CHECK_THROWS_AS(typeA_slice_character(1, 8, 2), InvalidInput);
}

TEST_CASE("type A slice equals the generator character") {
  for (int m = 2; m <= 8; ++m) {
    SurfaceSpec spec = catalog(CatalogTag::A, m);
    BiSeries slice = typeA_slice_character(m, 24, 4);
    BiSeries gen = generator_character(spec, 24, 4);
    std::string why;
    CAPTURE(m);
    CHECK_MESSAGE(biseries_equal_on(slice, gen, 24, 4, &why), why);
  }
}

TEST_CASE("partition lists") {
  CHECK(partitions_of(0) == std::vector<std::vector<int>>{{}});
  CHECK(partitions_of(1) == std::vector<std::vector<int>>{{1}});
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(7).size() == 15);
  for (const auto& nu : partitions_of(6)) {
    int sum = 0;
    for (int part : nu) sum += part;
    CHECK(sum == 6);
  }
}
